#include "symtor/render.hpp"

#include <algorithm>
#include <sstream>

namespace symtor {

std::string to_string(const Partition& mu) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < mu.length(); ++i) {
        if (i > 0) os << ',';
        os << mu[i];
    }
    os << ')';
    return os.str();
}

std::string to_string(const ExtendedPartition& rho) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < rho.length(); ++i) {
        if (i > 0) os << ',';
        if (rho[i].is_infinite())
            os << "inf";
        else
            os << rho[i].value();
    }
    os << ')';
    return os.str();
}

std::string to_string(const Hook& h) {
    std::ostringstream os;
    os << '(' << h.arm;
    for (int i = 0; i < h.leg; ++i) os << ",1";
    os << ')';
    return os.str();
}

std::string to_string(const BlockSignature& pi) {
    std::ostringstream os;
    os << "Ind[";
    for (size_t k = 0; k < pi.hooks().size(); ++k) {
        if (k > 0) os << ',';
        os << to_string(pi.hooks()[k]);
    }
    os << ']';
    return os.str();
}

std::string render_betti_table(const BettiTable& table) {
    if (table.empty()) return "total: 0\n";

    const int imax = table.max_index();
    long long dmin = 0, dmax = 0;
    bool first = true;
    for (const auto& [key, v] : table.entries()) {
        const long long d = key.second - key.first;
        if (first || d < dmin) dmin = d;
        if (first || d > dmax) dmax = d;
        first = false;
    }

    const std::vector<long long> totals = table.totals();

    auto cell = [&](int i, long long d) -> std::string {
        const long long v = table.at(i, d + i);
        return v == 0 ? "." : std::to_string(v);
    };

    // Column widths cover the header index, the total, and every entry.
    std::vector<size_t> width(static_cast<size_t>(imax) + 1, 0);
    for (int i = 0; i <= imax; ++i) {
        size_t w = std::to_string(i).size();
        w = std::max(w, std::to_string(totals[static_cast<size_t>(i)]).size());
        for (long long d = dmin; d <= dmax; ++d)
            w = std::max(w, cell(i, d).size());
        width[static_cast<size_t>(i)] = w;
    }

    size_t label_width = std::string("total:").size();
    for (long long d = dmin; d <= dmax; ++d)
        label_width = std::max(label_width, std::to_string(d).size() + 1);

    auto pad_left = [](const std::string& s, size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };

    std::ostringstream os;
    os << std::string(label_width, ' ');
    for (int i = 0; i <= imax; ++i)
        os << ' ' << pad_left(std::to_string(i), width[static_cast<size_t>(i)]);
    os << '\n';

    os << pad_left("total:", label_width);
    for (int i = 0; i <= imax; ++i)
        os << ' '
           << pad_left(std::to_string(totals[static_cast<size_t>(i)]),
                       width[static_cast<size_t>(i)]);
    os << '\n';

    for (long long d = dmin; d <= dmax; ++d) {
        os << pad_left(std::to_string(d) + ":", label_width);
        for (int i = 0; i <= imax; ++i)
            os << ' ' << pad_left(cell(i, d), width[static_cast<size_t>(i)]);
        os << '\n';
    }
    return os.str();
}

} // namespace symtor
