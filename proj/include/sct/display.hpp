#pragma once

#include "sct/sct.hpp"

#include <iomanip>
#include <sstream>

namespace sct {

// Short element name for partition displays: r^3 -> "r3", s*r^2 -> "sr2".
inline std::string short_label(const FiniteGroup& g, int e) {
    if (is_dihedral(g)) {
        long n = g.n;
        if (e == 0) return "e";
        if (e < n) return "r" + (e == 1 ? "" : std::to_string(e));
        long k = e - n;
        if (k == 0) return "s";
        return "sr" + (k == 1 ? "" : std::to_string(k));
    }
    return g.labels[e];
}

// One-line superclass partition, blocks separated by '|'; a block containing
// the whole reflection coset prints it as "s*".
inline std::string compact_label(const Sct& s) {
    const FiniteGroup& g = *s.group();
    SetPartition ep = element_partition(s);
    long n = g.n;
    std::ostringstream out;
    bool first_block = true;
    for (const auto& blk : ep.blocks()) {
        if (!first_block) out << " | ";
        first_block = false;
        bool whole_coset = false;
        if (is_dihedral(g)) {
            whole_coset = true;
            for (long k = 0; k < n; ++k)
                if (ep.block_of((int)(n + k)) != ep.block_of(blk[0])) whole_coset = false;
        }
        bool first = true;
        for (int e : blk) {
            if (is_dihedral(g) && whole_coset && e >= n) {
                if (e == n) {
                    if (!first) out << " ";
                    out << "s*";
                    first = false;
                }
                continue;
            }
            if (!first) out << " ";
            out << short_label(g, e);
            first = false;
        }
    }
    return out.str();
}

// Character-side partition by row names.
inline std::string char_label(const Sct& s) {
    std::ostringstream out;
    bool first_block = true;
    for (const auto& blk : s.chars.blocks()) {
        if (!first_block) out << " | ";
        first_block = false;
        bool first = true;
        for (int r : blk) {
            if (!first) out << " ";
            out << s.table->names[r];
            first = false;
        }
    }
    return out.str();
}

// Aligned text rendering of a character table.
inline std::string table_text(const CharacterTable& t) {
    int C = t.num_classes();
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"class"};
    for (int c = 0; c < C; ++c) head.push_back(short_label(*t.group, t.class_rep[c]));
    cells.push_back(head);
    std::vector<std::string> sizes{"size"};
    for (int c = 0; c < C; ++c) sizes.push_back(std::to_string(t.class_size[c]));
    cells.push_back(sizes);
    for (int r = 0; r < t.num_rows(); ++r) {
        std::vector<std::string> row{t.names[r]};
        for (int c = 0; c < C; ++c) row.push_back(t.value(r, c).str());
        cells.push_back(row);
    }
    std::vector<std::size_t> width(C + 1, 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << std::setw((int)width[i] + (i ? 2 : 0)) << row[i];
        out << "\n";
    }
    return out.str();
}

}  // namespace sct
