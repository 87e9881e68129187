#pragma once

#include <cstdint>
#include <vector>

namespace symtor {

// An abstract simplicial complex on the vertex set {1,...,s}, with faces
// stored explicitly as bitsets (vertex v <-> bit v-1).
//
// The void complex (no faces at all) and the complex consisting of just the
// empty face are distinct values with distinct reduced homology.
class SimplicialComplex {
public:
    SimplicialComplex() = default; // void complex on 0 vertices
    static SimplicialComplex void_complex(int vertex_count);
    static SimplicialComplex full_simplex(int vertex_count);
    // close_down: complete the face list downward instead of validating it.
    static SimplicialComplex from_faces(int vertex_count,
                                        std::vector<std::uint32_t> faces,
                                        bool close_down = false);

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::uint32_t>& faces() const { return faces_; }
    bool has_face(std::uint32_t f) const;
    bool is_void() const { return faces_.empty(); }
    int dimension() const; // -2 for void, -1 for {empty face}, ...

    // Faces of cardinality k, sorted lexicographically as vertex lists.
    std::vector<std::uint32_t> faces_of_card(int k) const;
    long long face_count_of_card(int k) const;

    // Every face stays a face after adding the apex vertex.
    bool is_cone_with_apex(int v) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int vertex_count_ = 0;
    std::vector<std::uint32_t> faces_; // sorted by (cardinality, vertex-list lex)
};

// F is a face of the dual iff the complement of F is not a face of delta.
SimplicialComplex alexander_dual(const SimplicialComplex& delta);

} // namespace symtor
