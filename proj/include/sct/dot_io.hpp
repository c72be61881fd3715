#pragma once

#include "sct/display.hpp"
#include "sct/lattice.hpp"

#include <sstream>

namespace sct {

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace detail

// Hasse diagram as a DOT digraph; edges point from finer to coarser, so the
// unique source is m(G) and the unique sink is M(G).
inline std::string lattice_to_dot(const SctLattice& lat) {
    std::ostringstream out;
    out << "digraph sct_lattice {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < lat.theories.size(); ++i)
        out << "  t" << i << " [label=\"" << detail::dot_escape(compact_label(lat.theories[i]))
            << "\"];\n";
    for (auto [a, b] : lat.covers) out << "  t" << a << " -> t" << b << ";\n";
    out << "}\n";
    return out.str();
}

// Same rendering for an ad-hoc family of theories (e.g. the classified set):
// the order matrix is recomputed from refinement.
inline std::string theories_to_dot(const std::vector<Sct>& theories,
                                   const std::vector<std::string>& extra_labels = {}) {
    int k = (int)theories.size();
    std::vector<std::vector<char>> leq(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) leq[i][j] = refines(theories[i], theories[j]) ? 1 : 0;
    std::ostringstream out;
    out << "digraph sct {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (int i = 0; i < k; ++i) {
        std::string label = detail::dot_escape(compact_label(theories[i]));
        if (i < (int)extra_labels.size() && !extra_labels[i].empty())
            label = detail::dot_escape(extra_labels[i]) + "\\n" + label;
        out << "  t" << i << " [label=\"" << label << "\"];\n";
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j || !leq[i][j]) continue;
            bool cover = true;
            for (int u = 0; u < k && cover; ++u)
                if (u != i && u != j && leq[i][u] && leq[u][j]) cover = false;
            if (cover) out << "  t" << i << " -> t" << j << ";\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace sct
