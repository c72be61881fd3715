#pragma once

#include "sct/lattice.hpp"

namespace sct {

// How one automorphism moves a theory: the induced permutation of conjugacy
// classes and of irreducible rows.  Invariant: the permuted row chi o
// alpha^-1 matches an existing table row exactly.
struct SctAction {
    GroupHom alpha;
    std::vector<int> class_perm;  // class c of g -> class of alpha(g)
    std::vector<int> row_perm;    // row chi -> row of chi o alpha^-1
};

inline SctAction make_action(const TablePtr& t, const GroupHom& alpha) {
    detail::require(same_group(alpha.source, t->group) && is_automorphism(alpha),
                    "make_action: not an automorphism of the table's group");
    SctAction a{alpha, {}, {}};
    int C = t->num_classes();
    a.class_perm.resize(C);
    for (int c = 0; c < C; ++c) a.class_perm[c] = t->class_of(alpha.map[t->class_rep[c]]);
    GroupHom inv = inverse_of(alpha);
    a.row_perm.resize(t->num_rows());
    for (int r = 0; r < t->num_rows(); ++r) {
        std::vector<Cyclo> moved(C);
        for (int c = 0; c < C; ++c) moved[c] = t->value(r, t->class_of(inv.map[t->class_rep[c]]));
        a.row_perm[r] = t->row_of_values(moved);
        detail::internal_check(a.row_perm[r] >= 0,
                               "make_action: chi o alpha^-1 is not an irreducible row");
    }
    return a;
}

// alpha . S = (alpha . K, alpha . X); validity and size are preserved.
inline Sct act(const GroupHom& alpha, const Sct& s) {
    SctAction a = make_action(s.table, alpha);
    Sct r = build_sct(s.table, s.classes.mapped(a.class_perm));
    detail::internal_check(r.chars == s.chars.mapped(a.row_perm),
                           "act: moved character partition mismatch");
    return r;
}

// Automorphism map tables, memoized per recognized family.
inline std::vector<GroupHom> cached_automorphisms(const GroupPtr& g) {
    if (!is_cyclic(*g) && !is_dihedral(*g)) return automorphism_group(g);
    static std::mutex mtx;
    static std::map<std::pair<int, long>, std::vector<std::vector<int>>> cache;
    std::pair<int, long> key{is_cyclic(*g) ? 0 : 1, g->n};
    std::vector<std::vector<int>> maps;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) {
            maps = it->second;
        } else {
            for (const auto& h : automorphism_group(g)) maps.push_back(h.map);
            cache.emplace(key, maps);
        }
    }
    std::vector<GroupHom> out;
    out.reserve(maps.size());
    for (auto& m : maps) out.push_back(GroupHom{g, g, std::move(m)});
    return out;
}

// Fixed as a partition by every automorphism (blocks may permute).
inline bool is_characteristic(const Sct& s) {
    for (const auto& alpha : cached_automorphisms(s.group())) {
        SctAction a = make_action(s.table, alpha);
        if (s.classes.mapped(a.class_perm) != s.classes) return false;
    }
    return true;
}

// Every superclass setwise fixed by every map in A (the stronger property).
inline bool is_invariant(const Sct& s, const std::vector<GroupHom>& A) {
    for (const auto& alpha : A) {
        SctAction a = make_action(s.table, alpha);
        for (int c = 0; c < s.classes.ground_size(); ++c)
            if (s.classes.block_of(a.class_perm[c]) != s.classes.block_of(c)) return false;
    }
    return true;
}

namespace detail {

inline SetPartition cycle_partition(const std::vector<int>& perm) {
    std::vector<int> ids(perm.size(), -1);
    int next = 0;
    for (int c = 0; c < (int)perm.size(); ++c) {
        if (ids[c] >= 0) continue;
        int id = next++;
        for (int x = c; ids[x] < 0; x = perm[x]) ids[x] = id;
    }
    return SetPartition::from_assignment(ids);
}

}  // namespace detail

// m_A(G): superclasses are the A-orbits of conjugacy classes, supercharacter
// blocks the A-orbits of rows -- the unique minimal A-invariant theory.
// Orbits are the joins of the cycle partitions of the individual actions.
inline Sct orbit_sct(const TablePtr& t, const std::vector<GroupHom>& A) {
    int C = t->num_classes(), R = t->num_rows();
    SetPartition cls = SetPartition::singletons(C);
    SetPartition chs = SetPartition::singletons(R);
    for (const auto& alpha : A) {
        SctAction a = make_action(t, alpha);
        cls = cls.join(detail::cycle_partition(a.class_perm));
        chs = chs.join(detail::cycle_partition(a.row_perm));
    }
    Sct s = build_sct(t, cls);
    detail::internal_check(s.chars == chs, "orbit_sct: orbit character partition mismatch");
    detail::internal_check(is_invariant(s, A), "orbit_sct: result is not A-invariant");
    return s;
}

// ---------------------------------------------------------------------------
// Direct product
// ---------------------------------------------------------------------------

struct ProductCtx {
    DirectProduct prod;
    TablePtr table;
    TablePtr left;
    TablePtr right;
};

inline ProductCtx make_product_ctx(const TablePtr& TG, const TablePtr& TH) {
    ProductCtx ctx{direct_product(TG->group, TH->group), nullptr, TG, TH};
    ctx.table = table_product(TG, TH, &ctx.prod);
    return ctx;
}

// S x T: blocks are pairs on both sides.
inline Sct direct_product_sct(const ProductCtx& ctx, const Sct& S, const Sct& T) {
    detail::require(same_group(S.group(), ctx.left->group) && same_group(T.group(), ctx.right->group),
                    "direct_product_sct: factor group mismatch");
    int nH = ctx.right->group->order;
    const CharacterTable& t = *ctx.table;
    std::vector<int> ids(t.num_classes());
    for (int c = 0; c < t.num_classes(); ++c) {
        int rep = t.class_rep[c];
        int bg = S.classes.block_of(ctx.left->class_of(rep / nH));
        int bh = T.classes.block_of(ctx.right->class_of(rep % nH));
        ids[c] = bg * T.classes.size() + bh;
    }
    Sct r = build_sct(ctx.table, SetPartition::from_assignment(ids));
    std::vector<int> rids(t.num_rows());
    int RH = ctx.right->num_rows();
    for (int rr = 0; rr < t.num_rows(); ++rr)
        rids[rr] = S.chars.block_of(rr / RH) * T.chars.size() + T.chars.block_of(rr % RH);
    detail::internal_check(r.chars == SetPartition::from_assignment(rids),
                           "direct_product_sct: character side is not the pair partition");
    detail::internal_check(r.size() == S.size() * T.size(), "direct_product_sct: size mismatch");
    return r;
}

// ---------------------------------------------------------------------------
// *-product and friends
// ---------------------------------------------------------------------------

namespace detail {

// Distinct superclasses can restrict or deflate to identical blocks; such
// duplicates merge rather than conflict.
inline void dedup_blocks(std::vector<std::vector<int>>& blocks) {
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
}

}  // namespace detail

// N is S-normal when it is a union of S-superclasses.
inline bool is_sct_normal(const Sct& s, const Subgroup& N) {
    detail::require(same_group(s.group(), N.parent), "is_sct_normal: group mismatch");
    const CharacterTable& t = *s.table;
    for (const auto& blk : s.classes.blocks()) {
        bool inside = N.std_index_of[t.class_rep[blk[0]]] >= 0;
        for (int c : blk)
            for (int e : t.classes.block(c))
                if ((N.std_index_of[e] >= 0) != inside) return false;
    }
    return true;
}

// S *_N T for a G-invariant S over N and any T over G/N: superclasses are
// those of S plus the pulled-back nonidentity superclasses of T; character
// blocks are the inflated blocks of T plus the induced blocks X^G (computed
// by Frobenius reciprocity) for nontrivial X.
inline Sct star_product(const TablePtr& TG, const Subgroup& N, const Quotient& Q, const Sct& S,
                        const Sct& T) {
    detail::require(same_group(N.parent, TG->group) && same_group(Q.parent, TG->group),
                    "star_product: subgroup/quotient of a different group");
    detail::require(N.elements == Q.kernel, "star_product: quotient kernel differs from N");
    detail::require(same_group(S.group(), N.std_group), "star_product: S is not a theory of N");
    detail::require(same_group(T.group(), Q.group), "star_product: T is not a theory of G/N");
    detail::require(detail::is_normal_subset(*TG->group, N.elements),
                    "star_product: N is not normal");
    detail::require(is_invariant(S, conjugation_action(N)), "star_product: S is not G-invariant");

    const CharacterTable& tg = *TG;
    const CharacterTable& tn = *S.table;
    const CharacterTable& tq = *T.table;

    // Superclasses.
    std::vector<int> ids(tg.num_classes(), -1);
    int next = 0;
    for (const auto& blk : S.classes.blocks()) {
        int id = next++;
        for (int c : blk)
            for (int x : tn.classes.block(c)) {
                int gc = tg.class_of(N.embed.map[x]);
                detail::internal_check(ids[gc] < 0 || ids[gc] == id,
                                       "star_product: G-classes straddle S-superclasses");
                ids[gc] = id;
            }
    }
    int identity_block = T.classes.block_of(0);
    for (int b = 0; b < T.classes.size(); ++b) {
        if (b == identity_block) continue;
        int id = next++;
        for (int e = 0; e < tg.group->order; ++e)
            if (T.classes.block_of(tq.class_of(Q.proj.map[e])) == b) {
                int gc = tg.class_of(e);
                detail::internal_check(ids[gc] < 0 || ids[gc] == id,
                                       "star_product: pulled-back block not class-closed");
                ids[gc] = id;
            }
    }
    for (int v : ids) detail::internal_check(v >= 0, "star_product: classes left uncovered");

    // Character blocks: inflated T-blocks, then X^G for nontrivial S-blocks.
    std::vector<std::vector<int>> char_blocks;
    for (const auto& Y : T.chars.blocks()) {
        std::vector<int> blk;
        for (int rq : Y) {
            int rg = tg.row_of_values(inflate_row(tg, Q, tq, rq));
            detail::internal_check(rg >= 0, "star_product: inflation is not irreducible");
            blk.push_back(rg);
        }
        char_blocks.push_back(std::move(blk));
    }
    int trivial_block = S.chars.block_of(0);
    for (int b = 0; b < S.chars.size(); ++b) {
        if (b == trivial_block) continue;
        std::set<int> blk;
        for (int chi : S.chars.block(b))
            for (int rg : induced_constituents(tg, N, tn, chi)) blk.insert(rg);
        char_blocks.emplace_back(blk.begin(), blk.end());
    }

    Sct r = build_sct(TG, SetPartition::from_assignment(ids));
    detail::internal_check(r.chars == SetPartition::from_blocks(tg.num_rows(), char_blocks),
                           "star_product: character side mismatch");
    detail::internal_check(r.size() == S.size() + T.size() - 1, "star_product: size mismatch");
    return r;
}

// The minimal and maximal theories factoring over N:
// mm_N(G) = m_G(N) * m(G/N) and MM_N(G) = M(N) * M(G/N).
inline Sct sct_mm(const TablePtr& TG, const Subgroup& N, const Quotient& Q) {
    TablePtr tn = standard_table(N.std_group);
    TablePtr tq = standard_table(Q.group);
    return star_product(TG, N, Q, orbit_sct(tn, conjugation_action(N)), sct_m(tq));
}

inline Sct sct_MM(const TablePtr& TG, const Subgroup& N, const Quotient& Q) {
    TablePtr tn = standard_table(N.std_group);
    TablePtr tq = standard_table(Q.group);
    return star_product(TG, N, Q, sct_M(tn), sct_M(tq));
}

inline Sct sct_mm(const TablePtr& TG, long d) {
    return sct_mm(TG, divisor_subgroup(TG->group, d), quotient_by_divisor(TG->group, d));
}
inline Sct sct_MM(const TablePtr& TG, long d) {
    return sct_MM(TG, divisor_subgroup(TG->group, d), quotient_by_divisor(TG->group, d));
}

// Restriction to an S-normal subgroup: keep the superclasses inside N; the
// character blocks are the constituent sets of the restricted supercharacters
// with {1_N} adjoined.
inline Sct restricted_sct(const Sct& s, const Subgroup& N) {
    detail::require(is_sct_normal(s, N), "restricted_sct: N is not S-normal");
    const CharacterTable& tg = *s.table;
    TablePtr TN = standard_table(N.std_group);
    const CharacterTable& tn = *TN;

    std::vector<int> ids(tn.num_classes(), -1);
    int next = 0;
    for (const auto& blk : s.classes.blocks()) {
        if (N.std_index_of[tg.class_rep[blk[0]]] < 0) continue;
        int id = next++;
        for (int c : blk)
            for (int e : tg.classes.block(c)) ids[tn.class_of(N.std_index_of[e])] = id;
    }
    for (int v : ids) detail::internal_check(v >= 0, "restricted_sct: classes left uncovered");

    // Kernel test for "X lies in Irr(G/N)": every row value on N equals the degree.
    auto contains_N_in_kernel = [&](int row) {
        for (int e : N.elements)
            if (tg.value(row, tg.class_of(e)) != tg.value(row, 0)) return false;
        return true;
    };
    std::vector<std::vector<int>> char_blocks{{0}};
    for (const auto& X : s.chars.blocks()) {
        bool quotient_block = true;
        for (int r : X)
            if (!contains_N_in_kernel(r)) {
                quotient_block = false;
                break;
            }
        if (quotient_block) continue;
        std::set<int> blk;
        for (int r : X) {
            std::vector<Cyclo> res = restrict_row(tg, N, tn, r);
            for (int theta = 0; theta < tn.num_rows(); ++theta)
                if (!inner_product_scaled(tn, res, tn.rows[theta]).is_zero()) blk.insert(theta);
        }
        char_blocks.emplace_back(blk.begin(), blk.end());
    }
    detail::dedup_blocks(char_blocks);

    Sct r = build_sct(TN, SetPartition::from_assignment(ids));
    detail::internal_check(r.chars == SetPartition::from_blocks(tn.num_rows(), char_blocks),
                           "restricted_sct: character side mismatch");
    return r;
}

// Deflation to G/N for S-normal N: superclasses are {N} plus the coset
// images of the superclasses outside N; character blocks are those lying in
// Irr(G/N).
inline Sct deflated_sct(const Sct& s, const Subgroup& N, const Quotient& Q) {
    detail::require(is_sct_normal(s, N), "deflated_sct: N is not S-normal");
    detail::require(N.elements == Q.kernel, "deflated_sct: quotient kernel differs from N");
    const CharacterTable& tg = *s.table;
    TablePtr TQ = standard_table(Q.group);
    const CharacterTable& tq = *TQ;

    // Distinct superclasses may have identical coset images (the displayed
    // partition is a set, so such images merge); only a partial overlap is an
    // inconsistency.
    std::vector<int> ids(tq.num_classes(), -1);
    ids[0] = 0;
    std::map<std::vector<int>, int> image_ids;
    for (const auto& blk : s.classes.blocks()) {
        if (N.std_index_of[tg.class_rep[blk[0]]] >= 0) continue;
        std::set<int> image;
        for (int c : blk)
            for (int e : tg.classes.block(c)) image.insert(tq.class_of(Q.proj.map[e]));
        detail::internal_check(!image.count(0), "deflated_sct: image meets the identity coset");
        std::vector<int> key(image.begin(), image.end());
        int id = image_ids.emplace(key, (int)image_ids.size() + 1).first->second;
        for (int qc : key) {
            detail::internal_check(ids[qc] < 0 || ids[qc] == id,
                                   "deflated_sct: coset images overlap partially");
            ids[qc] = id;
        }
    }
    for (int v : ids) detail::internal_check(v >= 0, "deflated_sct: classes left uncovered");

    // Inflation-inverse on rows: G-row index -> Q-row index where defined.
    std::vector<int> to_quotient_row(tg.num_rows(), -1);
    for (int rq = 0; rq < tq.num_rows(); ++rq) {
        int rg = tg.row_of_values(inflate_row(tg, Q, tq, rq));
        detail::internal_check(rg >= 0, "deflated_sct: inflation is not irreducible");
        to_quotient_row[rg] = rq;
    }
    std::vector<std::vector<int>> char_blocks;
    for (const auto& X : s.chars.blocks()) {
        bool in_quotient = true;
        for (int r : X)
            if (to_quotient_row[r] < 0) {
                in_quotient = false;
                break;
            }
        if (!in_quotient) continue;
        std::vector<int> blk;
        for (int r : X) blk.push_back(to_quotient_row[r]);
        char_blocks.push_back(std::move(blk));
    }

    Sct r = build_sct(TQ, SetPartition::from_assignment(ids));
    detail::internal_check(r.chars == SetPartition::from_blocks(tq.num_rows(), char_blocks),
                           "deflated_sct: character side mismatch");
    return r;
}

inline Sct restricted_sct(const Sct& s, long d) {
    return restricted_sct(s, divisor_subgroup(s.group(), d));
}
inline Sct deflated_sct(const Sct& s, long d) {
    return deflated_sct(s, divisor_subgroup(s.group(), d), quotient_by_divisor(s.group(), d));
}

// ---------------------------------------------------------------------------
// Delta-product
// ---------------------------------------------------------------------------

// Delta-product over a chain N <= M <= G: S a G-invariant theory of M, T a
// theory of G/N, subject to (a) N S-normal, (b) M/N T-normal, (c) the
// deflation of S to M/N equals the restriction of T to M/N.  Each condition
// is checked, not assumed, and failures name the condition.
inline Sct delta_product(const TablePtr& TG, const Subgroup& N, const Subgroup& M, const Sct& S,
                         const Sct& T) {
    const GroupPtr& G = TG->group;
    detail::require(same_group(N.parent, G) && same_group(M.parent, G),
                    "delta_product: subgroups of a different group");
    detail::require(same_group(S.group(), M.std_group), "delta_product: S is not a theory of M");
    for (int e : N.elements)
        detail::require(M.std_index_of[e] >= 0, "delta_product: N is not contained in M");
    detail::require(is_invariant(S, conjugation_action(M)), "delta_product: S is not G-invariant");

    // N viewed inside M's standard form, and M/N viewed inside G/N.
    std::vector<int> n_in_m;
    for (int e : N.elements) n_in_m.push_back(M.std_index_of[e]);
    std::sort(n_in_m.begin(), n_in_m.end());
    Subgroup NinM = recognize_subgroup(M.std_group, n_in_m);

    Quotient QN = quotient(G, N.elements);
    detail::require(same_group(T.group(), QN.group), "delta_product: T is not a theory of G/N");
    std::set<int> m_image;
    for (int e : M.elements) m_image.insert(QN.proj.map[e]);
    Subgroup MoverN = recognize_subgroup(QN.group, {m_image.begin(), m_image.end()});

    detail::require(is_sct_normal(S, NinM), "delta_product: condition (a) fails, N not S-normal");
    detail::require(is_sct_normal(T, MoverN),
                    "delta_product: condition (b) fails, M/N not T-normal");
    Sct deflS = deflated_sct(S, NinM, quotient(M.std_group, NinM.elements));
    Sct restT = restricted_sct(T, MoverN);
    detail::require(same_group(deflS.group(), restT.group()) && same_theory(deflS, restT),
                    "delta_product: condition (c) fails, S^{M/N} != T_{M/N}");

    const CharacterTable& tg = *TG;
    const CharacterTable& tm = *S.table;
    const CharacterTable& tq = *T.table;

    // Superclasses: those of S, plus pullbacks of T-blocks not inside M/N.
    std::vector<int> ids(tg.num_classes(), -1);
    int next = 0;
    for (const auto& blk : S.classes.blocks()) {
        int id = next++;
        for (int c : blk)
            for (int x : tm.classes.block(c)) {
                int gc = tg.class_of(M.embed.map[x]);
                detail::internal_check(ids[gc] < 0 || ids[gc] == id,
                                       "delta_product: G-classes straddle S-superclasses");
                ids[gc] = id;
            }
    }
    for (int b = 0; b < T.classes.size(); ++b) {
        bool inside = true;
        for (int c : T.classes.block(b))
            for (int e : tq.classes.block(c))
                if (MoverN.std_index_of[e] < 0) inside = false;
        if (inside) continue;
        int id = next++;
        for (int e = 0; e < G->order; ++e)
            if (T.classes.block_of(tq.class_of(QN.proj.map[e])) == b) {
                int gc = tg.class_of(e);
                detail::internal_check(ids[gc] < 0 || ids[gc] == id,
                                       "delta_product: pulled-back block not class-closed");
                ids[gc] = id;
            }
    }
    for (int v : ids) detail::internal_check(v >= 0, "delta_product: classes left uncovered");

    // Character blocks: inflated T-blocks, plus X^G for S-blocks not inside
    // Irr(M/N), where X^G is the constituent set of Ind_M^G(sigma_X).
    auto n_in_kernel_of_m_row = [&](int row) {
        for (int x : NinM.elements)
            if (tm.value(row, tm.class_of(x)) != tm.value(row, 0)) return false;
        return true;
    };
    std::vector<std::vector<int>> char_blocks;
    for (const auto& Y : T.chars.blocks()) {
        std::vector<int> blk;
        for (int rq : Y) {
            int rg = tg.row_of_values(inflate_row(tg, QN, tq, rq));
            detail::internal_check(rg >= 0, "delta_product: inflation is not irreducible");
            blk.push_back(rg);
        }
        char_blocks.push_back(std::move(blk));
    }
    for (const auto& X : S.chars.blocks()) {
        bool inside = true;
        for (int r : X)
            if (!n_in_kernel_of_m_row(r)) {
                inside = false;
                break;
            }
        if (inside) continue;
        std::set<int> blk;
        for (int chi : X)
            for (int rg : induced_constituents(tg, M, tm, chi)) blk.insert(rg);
        char_blocks.emplace_back(blk.begin(), blk.end());
    }
    detail::dedup_blocks(char_blocks);

    Sct r = build_sct(TG, SetPartition::from_assignment(ids));
    detail::internal_check(r.chars == SetPartition::from_blocks(tg.num_rows(), char_blocks),
                           "delta_product: character side mismatch");
    return r;
}

// ---------------------------------------------------------------------------
// Factorization over a normal subgroup
// ---------------------------------------------------------------------------

// S factors over N iff mm_N(G) <= S <= MM_N(G); the unique preimage under
// the *-product injection is (S restricted to N, S deflated to G/N).
inline std::optional<std::pair<Sct, Sct>> factors_over(const Sct& s, const Subgroup& N,
                                                       const Quotient& Q) {
    Sct lo = sct_mm(s.table, N, Q);
    Sct hi = sct_MM(s.table, N, Q);
    if (!refines(lo, s) || !refines(s, hi)) return std::nullopt;
    Sct SN = restricted_sct(s, N);
    Sct TQ = deflated_sct(s, N, Q);
    Sct round_trip = star_product(s.table, N, Q, SN, TQ);
    detail::internal_check(same_theory(round_trip, s), "factors_over: round trip mismatch");
    return std::make_pair(std::move(SN), std::move(TQ));
}

inline std::optional<std::pair<Sct, Sct>> factors_over(const Sct& s, long d) {
    return factors_over(s, divisor_subgroup(s.group(), d), quotient_by_divisor(s.group(), d));
}

// ---------------------------------------------------------------------------
// Automorphism images on subgroup and quotient
// ---------------------------------------------------------------------------

// Image of Aut(G) in Aut(N) under restriction, for a characteristic N.
inline std::vector<GroupHom> restricted_automorphisms(const GroupPtr& G, const Subgroup& N) {
    std::set<std::vector<int>> seen;
    std::vector<GroupHom> out;
    for (const auto& alpha : cached_automorphisms(G)) {
        GroupHom h{N.std_group, N.std_group, std::vector<int>(N.std_group->order)};
        for (int j = 0; j < N.std_group->order; ++j) {
            int img = alpha.map[N.embed.map[j]];
            detail::require(N.std_index_of[img] >= 0,
                            "restricted_automorphisms: subgroup is not characteristic");
            h.map[j] = N.std_index_of[img];
        }
        if (seen.insert(h.map).second) out.push_back(std::move(h));
    }
    return out;
}

// Image of Aut(G) in Aut(G/N) under the canonical projection.
inline std::vector<GroupHom> projected_automorphisms(const GroupPtr& G, const Quotient& Q) {
    std::vector<int> section(Q.group->order, -1);
    for (int e = 0; e < G->order; ++e)
        if (section[Q.proj.map[e]] < 0) section[Q.proj.map[e]] = e;
    std::set<std::vector<int>> seen;
    std::vector<GroupHom> out;
    for (const auto& alpha : cached_automorphisms(G)) {
        GroupHom h{Q.group, Q.group, std::vector<int>(Q.group->order)};
        for (int x = 0; x < Q.group->order; ++x) h.map[x] = Q.proj.map[alpha.map[section[x]]];
        detail::internal_check(is_automorphism(h),
                               "projected_automorphisms: projection is not well defined");
        if (seen.insert(h.map).second) out.push_back(std::move(h));
    }
    return out;
}

}  // namespace sct
