#include "symtor/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace symtor {

namespace {

// Order faces of equal cardinality lexicographically as sorted vertex lists,
// e.g. {1,4} before {2,3}.  This is not the numeric order of the bitmasks.
bool face_less(std::uint32_t a, std::uint32_t b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    std::uint32_t x = a, y = b;
    while (x != 0 && y != 0) {
        const int vx = std::countr_zero(x), vy = std::countr_zero(y);
        if (vx != vy) return vx < vy;
        x &= x - 1;
        y &= y - 1;
    }
    return false;
}

} // namespace

SimplicialComplex SimplicialComplex::void_complex(int vertex_count) {
    SimplicialComplex c;
    c.vertex_count_ = vertex_count;
    return c;
}

SimplicialComplex SimplicialComplex::full_simplex(int vertex_count) {
    std::vector<std::uint32_t> faces;
    faces.reserve(static_cast<size_t>(1) << vertex_count);
    for (std::uint32_t f = 0; f < (1u << vertex_count); ++f) faces.push_back(f);
    return from_faces(vertex_count, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(int vertex_count,
                                                std::vector<std::uint32_t> faces,
                                                bool close_down) {
    if (vertex_count < 0 || vertex_count > 30)
        throw std::invalid_argument("SimplicialComplex: unsupported vertex count");
    const std::uint32_t all = vertex_count == 0 ? 0u : ((1u << vertex_count) - 1u);
    for (std::uint32_t f : faces)
        if ((f & ~all) != 0)
            throw std::invalid_argument("SimplicialComplex: face outside vertex set");

    if (close_down) {
        std::vector<std::uint32_t> closed;
        for (std::uint32_t f : faces) {
            // all subsets of f
            std::uint32_t sub = f;
            while (true) {
                closed.push_back(sub);
                if (sub == 0) break;
                sub = (sub - 1) & f;
            }
        }
        faces = std::move(closed);
    }

    std::sort(faces.begin(), faces.end(), face_less);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    if (!close_down) {
        for (std::uint32_t f : faces) {
            for (std::uint32_t rem = f; rem != 0; rem &= rem - 1) {
                const std::uint32_t sub = f & ~(rem & (~rem + 1));
                if (!std::binary_search(faces.begin(), faces.end(), sub, face_less))
                    throw std::invalid_argument("SimplicialComplex: not downward closed");
            }
        }
    }

    SimplicialComplex c;
    c.vertex_count_ = vertex_count;
    c.faces_ = std::move(faces);
    return c;
}

bool SimplicialComplex::has_face(std::uint32_t f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f, face_less);
}

int SimplicialComplex::dimension() const {
    if (faces_.empty()) return -2;
    return std::popcount(faces_.back()) - 1;
}

std::vector<std::uint32_t> SimplicialComplex::faces_of_card(int k) const {
    std::vector<std::uint32_t> out;
    if (k < 0) return out;
    for (std::uint32_t f : faces_)
        if (std::popcount(f) == k) out.push_back(f);
    return out; // faces_ is sorted by (card, lex) already
}

long long SimplicialComplex::face_count_of_card(int k) const {
    if (k < 0) return 0;
    long long n = 0;
    for (std::uint32_t f : faces_)
        if (std::popcount(f) == k) ++n;
    return n;
}

bool SimplicialComplex::is_cone_with_apex(int v) const {
    if (v < 1 || v > vertex_count_)
        throw std::invalid_argument("is_cone_with_apex: vertex out of range");
    if (faces_.empty()) return false;
    const std::uint32_t bit = 1u << (v - 1);
    for (std::uint32_t f : faces_)
        if (!has_face(f | bit)) return false;
    return true;
}

SimplicialComplex alexander_dual(const SimplicialComplex& delta) {
    const int s = delta.vertex_count();
    const std::uint32_t all = s == 0 ? 0u : ((1u << s) - 1u);
    std::vector<std::uint32_t> faces;
    for (std::uint32_t f = 0; f <= all; ++f) {
        if (!delta.has_face(all & ~f)) faces.push_back(f);
        if (f == all) break; // guard s == 0, where all == 0
    }
    // Downward closed: supersets of f have smaller complements, and face sets
    // are downward closed, so the complement test propagates.
    return SimplicialComplex::from_faces(s, std::move(faces));
}

} // namespace symtor
