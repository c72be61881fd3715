#pragma once

#include "sct/character_table.hpp"

namespace sct {

// A validated supercharacter theory: a partition of the conjugacy classes
// (class 0 = {e} always a singleton block) together with the matching
// partition of the irreducible rows.  The class side determines the
// character side, so classes.rgs() is a complete canonical key.
struct Sct {
    TablePtr table;
    SetPartition classes;  // over conjugacy-class indices
    SetPartition chars;    // over irreducible-row indices

    const GroupPtr& group() const { return table->group; }
    int size() const { return classes.size(); }
    const std::vector<int>& key() const { return classes.rgs(); }
};

inline bool same_theory(const Sct& a, const Sct& b) {
    if (!same_group(a.group(), b.group())) return false;
    bool eq = a.classes == b.classes;
    detail::internal_check(!eq || a.chars == b.chars,
                           "same_theory: equal class partitions, different character partitions");
    return eq;
}

// Lemma-style subalgebra test: P (over conjugacy classes, with {e} split off
// as a singleton) is a superclass partition exactly when the span of the
// block sums is closed under multiplication, i.e. when every product of two
// block sums has an element-coefficient vector that is constant on every
// block of P.
inline bool is_valid_superclass_partition(const CharacterTable& t, const SetPartition& P) {
    detail::require(P.ground_size() == t.num_classes(),
                    "is_valid_superclass_partition: partition/class count mismatch");
    detail::require((int)P.block(P.block_of(0)).size() == 1,
                    "is_valid_superclass_partition: {e} must be a singleton block");
    int B = P.size();
    std::vector<long long> coeff(t.num_classes());
    for (int bi = 0; bi < B; ++bi)
        for (int bj = bi; bj < B; ++bj) {
            std::fill(coeff.begin(), coeff.end(), 0);
            for (int i : P.block(bi))
                for (int j : P.block(bj))
                    for (int k = 0; k < t.num_classes(); ++k)
                        coeff[k] += t.class_product(i, j, k);
            for (const auto& blk : P.blocks()) {
                long long v = coeff[blk[0]];
                for (int k : blk)
                    if (coeff[k] != v) return false;
            }
        }
    return true;
}

// The unique character partition matching a valid superclass partition: rows
// are grouped by their central-character vectors on the block sums,
// compared fraction-free (deg(psi) * sum_chi = deg(chi) * sum_psi).
inline SetPartition derive_char_partition(const CharacterTable& t, const SetPartition& P) {
    int R = t.num_rows(), B = P.size();
    std::vector<std::vector<Cyclo>> sums(R, std::vector<Cyclo>(B));
    for (int r = 0; r < R; ++r)
        for (int b = 0; b < B; ++b) {
            Cyclo s;
            for (int c : P.block(b)) s += Int(t.class_size[c]) * t.value(r, c);
            sums[r][b] = std::move(s);
        }
    auto equivalent = [&](int r, int s) {
        Cyclo dr = Cyclo::integer(t.degrees[r]), ds = Cyclo::integer(t.degrees[s]);
        for (int b = 0; b < B; ++b)
            if (ds * sums[r][b] != dr * sums[s][b]) return false;
        return true;
    };
    std::vector<int> ids(R, -1);
    std::vector<int> reps;
    for (int r = 0; r < R; ++r) {
        for (std::size_t g = 0; g < reps.size(); ++g)
            if (equivalent(r, reps[g])) {
                ids[r] = (int)g;
                break;
            }
        if (ids[r] < 0) {
            ids[r] = (int)reps.size();
            reps.push_back(r);
        }
    }
    SetPartition X = SetPartition::from_assignment(ids);
    detail::internal_check(X.size() == B, "derive_char_partition: block-count mismatch");
    return X;
}

namespace detail {

// sigma_X = sum over chi in X of chi(e) chi, on the representative of class c.
inline Cyclo sigma_value(const CharacterTable& t, const std::vector<int>& X, int c) {
    Cyclo s;
    for (int r : X) s += Int(t.degrees[r]) * t.value(r, c);
    return s;
}

inline bool sigma_constant_on_blocks(const CharacterTable& t, const SetPartition& chars,
                                     const SetPartition& classes) {
    for (const auto& X : chars.blocks())
        for (const auto& K : classes.blocks()) {
            Cyclo v = sigma_value(t, X, K[0]);
            for (int c : K)
                if (sigma_value(t, X, c) != v) return false;
        }
    return true;
}

}  // namespace detail

// Validate, derive, and package.  The sigma-constancy recheck is redundant
// with the subalgebra criterion by duality; it stays as a safety assertion,
// not as the decision procedure.
inline Sct build_sct(const TablePtr& t, const SetPartition& class_partition) {
    detail::require(is_valid_superclass_partition(*t, class_partition),
                    "build_sct: not a subalgebra (invalid superclass partition)");
    SetPartition chars = derive_char_partition(*t, class_partition);
    detail::internal_check(detail::sigma_constant_on_blocks(*t, chars, class_partition),
                           "build_sct: supercharacter not constant on a superclass");
    detail::internal_check((int)chars.block(chars.block_of(0)).size() == 1,
                           "build_sct: trivial character is not a singleton block");
    return Sct{t, class_partition, std::move(chars)};
}

// The two extreme theories m(G) and M(G).
inline Sct sct_m(const TablePtr& t) {
    return build_sct(t, SetPartition::singletons(t->num_classes()));
}

inline Sct sct_M(const TablePtr& t) {
    int C = t->num_classes();
    std::vector<int> ids(C, 1);
    ids[0] = 0;
    return build_sct(t, SetPartition::from_assignment(ids));
}

// Refinement order on theories; the class side decides, and agreement with
// the character side is asserted.
inline bool refines(const Sct& a, const Sct& b) {
    detail::require(same_group(a.group(), b.group()), "refines: theories over different groups");
    bool r = a.classes.refines(b.classes);
    detail::internal_check(r == a.chars.refines(b.chars),
                           "refines: class-side and character-side orders disagree");
    return r;
}

// |S| x |S| matrix of supercharacter values: row X, column K.
inline std::vector<std::vector<Cyclo>> supercharacter_matrix(const Sct& s) {
    const CharacterTable& t = *s.table;
    std::vector<std::vector<Cyclo>> m(s.chars.size(), std::vector<Cyclo>(s.classes.size()));
    for (int x = 0; x < s.chars.size(); ++x)
        for (int b = 0; b < s.classes.size(); ++b) {
            Cyclo v = detail::sigma_value(t, s.chars.block(x), s.classes.block(b)[0]);
            for (int c : s.classes.block(b))
                detail::internal_check(detail::sigma_value(t, s.chars.block(x), c) == v,
                                       "supercharacter_matrix: value not superclass-constant");
            m[x][b] = std::move(v);
        }
    return m;
}

// Element-level view of the superclass partition.
inline SetPartition element_partition(const Sct& s) {
    const CharacterTable& t = *s.table;
    std::vector<int> ids(t.group->order);
    for (int e = 0; e < t.group->order; ++e) ids[e] = s.classes.block_of(t.class_of(e));
    return SetPartition::from_assignment(ids);
}

}  // namespace sct
