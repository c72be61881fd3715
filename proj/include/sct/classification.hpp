#pragma once

#include "sct/constructions.hpp"

#include <sstream>

namespace sct {

// ---------------------------------------------------------------------------
// Dihedral predicates
// ---------------------------------------------------------------------------

// The reflection coset s<r> sits inside a single superclass.  For odd n the
// reflections form one conjugacy class, so every theory glues.
inline bool glues_reflections(const Sct& s) {
    const FiniteGroup& g = *s.group();
    detail::require(is_dihedral(g), "glues_reflections: dihedral group required");
    int N = (int)g.n;
    if (g.n % 2 == 1) return true;
    const CharacterTable& t = *s.table;
    return s.classes.block_of(t.class_of(N)) == s.classes.block_of(t.class_of(N + 1));
}

// Every rotation-only superclass contains exponents of a single parity.
inline bool respects_parity(const Sct& s) {
    const FiniteGroup& g = *s.group();
    detail::require(is_dihedral(g), "respects_parity: dihedral group required");
    int N = (int)g.n;
    const CharacterTable& t = *s.table;
    for (const auto& blk : s.classes.blocks()) {
        bool rotations_only = true;
        int parity = -1;
        for (int c : blk)
            for (int e : t.classes.block(c)) {
                if (e >= N) {
                    rotations_only = false;
                } else if (parity < 0) {
                    parity = e % 2;
                }
            }
        if (!rotations_only) continue;
        for (int c : blk)
            for (int e : t.classes.block(c))
                if (e % 2 != parity) return false;
    }
    return true;
}

// True when s<r> is exactly a union of superclasses (the non-gluing half of
// the characteristic criterion).
inline bool reflections_are_superclass_union(const Sct& s) {
    const FiniteGroup& g = *s.group();
    detail::require(is_dihedral(g), "reflections_are_superclass_union: dihedral group required");
    int N = (int)g.n;
    const CharacterTable& t = *s.table;
    std::set<int> reflection_blocks;
    for (int e = N; e < 2 * N; ++e) reflection_blocks.insert(s.classes.block_of(t.class_of(e)));
    for (int b : reflection_blocks)
        for (int c : s.classes.block(b))
            if (t.class_rep[c] < N) return false;
    return true;
}

namespace detail {

inline int reflection_block(const Sct& s) {
    return s.classes.block_of(s.table->class_of((int)s.group()->n));
}

// mu0/mu1 row indices on an even-n dihedral table.
inline std::pair<int, int> mu_rows(const CharacterTable& t) {
    int m0 = t.row_named("mu0"), m1 = t.row_named("mu1");
    require(m0 >= 0 && m1 >= 0, "mu characters require even n");
    return {m0, m1};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// F_d and C_d
// ---------------------------------------------------------------------------

namespace detail {

// Explicit superclass partition {e} | s<r> u {r^k : d !| k} | {r^k,r^(n-k)}
// for d | k, as class ids.
inline SetPartition fc_classes(const CharacterTable& t, long d, bool split_rotation_classes) {
    long n = t.group->n;
    int C = t.num_classes();
    std::vector<int> ids(C);
    int next = 3;
    for (int c = 1; c < C; ++c) {
        int rep = t.class_rep[c];
        if (rep >= n || rep % d != 0)
            ids[c] = 1;  // glued with s<r>
        else
            ids[c] = split_rotation_classes ? next++ : 2;
    }
    // The glued block is empty when d = n; compress ids into range.
    std::vector<int> relabel(next, -1);
    int used = 0;
    for (int c = 0; c < C; ++c) {
        if (relabel[ids[c]] < 0) relabel[ids[c]] = used++;
        ids[c] = relabel[ids[c]];
    }
    return SetPartition::from_assignment(ids);
}

}  // namespace detail

// F_d = m_G(<r^d>) * M(G/<r^d>), built two ways -- via the *-product and via
// the explicit partitions -- and asserted equal.
inline Sct build_F(const TablePtr& TD, long d) {
    const GroupPtr& G = TD->group;
    detail::require(is_dihedral(*G), "build_F: dihedral group required");
    long n = G->n;
    detail::require(d >= 1 && n % d == 0, "build_F: d must divide n");
    Subgroup N = divisor_subgroup(G, d);
    Quotient Q = quotient_by_divisor(G, d);
    TablePtr TN = standard_table(N.std_group);
    Sct via_star = star_product(TD, N, Q, orbit_sct(TN, conjugation_action(N)), sct_M(standard_table(Q.group)));

    Sct explicit_form = build_sct(TD, detail::fc_classes(*TD, d, true));
    std::vector<std::vector<int>> char_blocks{{0}};
    long nd = n / d;
    std::vector<int> lambda_block{1};
    for (long k = nd; 2 * k <= n; k += nd)
        for (int r : resolve_chi(*TD, k)) lambda_block.push_back(r);
    char_blocks.push_back(lambda_block);
    for (long l = 1; 2 * l * d <= n; ++l) {
        std::set<int> blk;
        for (long k = 1; 2 * k <= n; ++k)
            if (mod_norm(k - l, nd) == 0 || mod_norm(k + l, nd) == 0)
                for (int r : resolve_chi(*TD, k)) blk.insert(r);
        char_blocks.emplace_back(blk.begin(), blk.end());
    }
    detail::internal_check(explicit_form.chars ==
                               SetPartition::from_blocks(TD->num_rows(), char_blocks),
                           "build_F: explicit character partition mismatch");
    detail::internal_check(same_theory(via_star, explicit_form),
                           "build_F: star and explicit constructions disagree");
    return via_star;
}

// C_d = M(<r^d>) * M(G/<r^d>), same dual construction.
inline Sct build_C(const TablePtr& TD, long d) {
    const GroupPtr& G = TD->group;
    detail::require(is_dihedral(*G), "build_C: dihedral group required");
    long n = G->n;
    detail::require(d >= 1 && n % d == 0, "build_C: d must divide n");
    Subgroup N = divisor_subgroup(G, d);
    Quotient Q = quotient_by_divisor(G, d);
    Sct via_star = star_product(TD, N, Q, sct_M(standard_table(N.std_group)),
                                sct_M(standard_table(Q.group)));

    Sct explicit_form = build_sct(TD, detail::fc_classes(*TD, d, false));
    std::vector<std::vector<int>> char_blocks{{0}};
    long nd = n / d;
    std::vector<int> lambda_block{1};
    std::set<int> rest;
    for (long k = 1; 2 * k <= n; ++k) {
        if (k % nd == 0)
            for (int r : resolve_chi(*TD, k)) lambda_block.push_back(r);
        else
            for (int r : resolve_chi(*TD, k)) rest.insert(r);
    }
    char_blocks.push_back(lambda_block);
    if (!rest.empty()) char_blocks.emplace_back(rest.begin(), rest.end());
    detail::internal_check(explicit_form.chars ==
                               SetPartition::from_blocks(TD->num_rows(), char_blocks),
                           "build_C: explicit character partition mismatch");
    detail::internal_check(same_theory(via_star, explicit_form),
                           "build_C: star and explicit constructions disagree");
    return via_star;
}

// ---------------------------------------------------------------------------
// Subposets P_d, Q, R over an enumerated lattice
// ---------------------------------------------------------------------------

inline std::vector<Sct> subposet_P(const SctLattice& lat, long d) {
    return interval(lat, build_F(lat.table, d), build_C(lat.table, d));
}

// Q: members of P_1 whose character partition has {mu0, mu1} as a whole
// block (i.e. chi_{n/2} is a supercharacter).  Empty for odd n.
inline bool has_mu_pair_block(const Sct& s) {
    if (s.group()->n % 2 == 1) return false;
    auto [m0, m1] = detail::mu_rows(*s.table);
    return s.chars.same_block(m0, m1) && (int)s.chars.block(s.chars.block_of(m0)).size() == 2;
}

inline std::vector<Sct> subposet_Q(const SctLattice& lat) {
    if (lat.table->group->n % 2 == 1) return {};
    std::vector<Sct> out;
    for (const Sct& s : subposet_P(lat, 1))
        if (has_mu_pair_block(s)) out.push_back(s);
    return out;
}

// R: characteristic gluing theories that respect parity, the domain of the
// refining maps psi_0 / psi_1.  Only meaningful for even n.
inline std::vector<Sct> subposet_R(const SctLattice& lat) {
    if (lat.table->group->n % 2 == 1) return {};
    std::vector<Sct> out;
    for (const Sct& s : lat.theories)
        if (glues_reflections(s) && respects_parity(s) && is_characteristic(s))
            out.push_back(s);
    return out;
}

// ---------------------------------------------------------------------------
// The refining maps psi and psi_i
// ---------------------------------------------------------------------------

// psi_i(S) for S gluing and parity-respecting with even n: the reflection
// superclass s<r> u A u B (A even rotations, B odd) splits into
// s<r^2> u A | s*r<r^2> u B for i = 0 (A and B swap for i = 1), and mu_i
// leaves its character block as a singleton.
inline Sct psi_refine(const Sct& s, int i) {
    const FiniteGroup& g = *s.group();
    detail::require(is_dihedral(g) && g.n % 2 == 0, "psi_refine: even dihedral group required");
    detail::require(i == 0 || i == 1, "psi_refine: i must be 0 or 1");
    detail::require(glues_reflections(s), "psi_refine: S does not glue reflections");
    detail::require(respects_parity(s), "psi_refine: S does not respect parity");
    const CharacterTable& t = *s.table;
    int N = (int)g.n;

    int refl = detail::reflection_block(s);
    int cls_s = t.class_of(N), cls_sr = t.class_of(N + 1);
    std::vector<int> ids = s.classes.rgs();
    int even_id = s.classes.size(), odd_id = s.classes.size() + 1;
    for (int c : s.classes.block(refl)) {
        int rep = t.class_rep[c];
        if (c == cls_s)
            ids[c] = even_id;
        else if (c == cls_sr)
            ids[c] = odd_id;
        else
            ids[c] = rep % 2 == 0 ? even_id : odd_id;  // A with s<r^2>, B with s*r<r^2>
    }
    if (i == 1)  // swap A and B between the two reflection halves
        for (int c : s.classes.block(refl)) {
            if (c == cls_s || c == cls_sr) continue;
            ids[c] = ids[c] == even_id ? odd_id : even_id;
        }

    auto [m0, m1] = detail::mu_rows(t);
    detail::require(s.chars.same_block(m0, m1), "psi_refine: mu0 and mu1 are not glued in S");
    int mu_i = i == 0 ? m0 : m1;
    std::vector<int> rids = s.chars.rgs();
    rids[mu_i] = s.chars.size();

    Sct r = build_sct(s.table, SetPartition::from_assignment(ids));
    detail::internal_check(r.chars == SetPartition::from_assignment(rids),
                           "psi_refine: character side mismatch");
    detail::internal_check(r.size() == s.size() + 1 && refines(r, s),
                           "psi_refine: result does not refine S by one block");
    return r;
}

// psi(S) for S in Q: both psi_i coincide (A = B = empty).
inline Sct psi(const Sct& s) {
    detail::require(has_mu_pair_block(s), "psi: {mu0, mu1} is not a supercharacter block");
    const CharacterTable& t = *s.table;
    int refl = detail::reflection_block(s);
    for (int c : s.classes.block(refl))
        detail::require(t.class_rep[c] >= s.group()->n, "psi: S does not have s<r> as a superclass");
    Sct r0 = psi_refine(s, 0);
    detail::internal_check(same_theory(r0, psi_refine(s, 1)), "psi: psi_0 and psi_1 disagree on Q");
    detail::internal_check(!glues_reflections(r0), "psi: image still glues reflections");
    return r0;
}

// ---------------------------------------------------------------------------
// classify / verify
// ---------------------------------------------------------------------------

enum class TheoryOrigin { InPd, PsiImage, PsiIImage };

struct ClassifiedTheory {
    Sct sct;
    TheoryOrigin origin;
    long d = 0;                 // witness divisor for InPd
    int i = -1;                 // which psi_i for PsiIImage
    std::optional<Sct> source;  // the Q- or R-member a psi image came from
};

inline std::string origin_label(const ClassifiedTheory& c) {
    switch (c.origin) {
        case TheoryOrigin::InPd: return "P_" + std::to_string(c.d);
        case TheoryOrigin::PsiImage: return "psi(Q)";
        default: return "psi_" + std::to_string(c.i);
    }
}

// Build SCT(D_2n) purely from the classification theorems: the union of the
// intervals P_d (as *-products of G-invariant theories of <r^d> with
// M(G/<r^d>)), the psi images of Q, and for even n the psi_i images of the
// parity-respecting gluing theories outside Q.  No dihedral enumeration is
// involved; disjointness of the pieces is asserted.
inline std::vector<ClassifiedTheory> classify_dihedral(long n, EnumerateOptions opts = {}) {
    detail::require(n >= 1, "classify_dihedral: n must be positive");
    GroupPtr G = make_dihedral(n);
    TablePtr TD = standard_table(G);

    std::vector<ClassifiedTheory> out;
    std::map<std::vector<int>, std::size_t> seen;
    auto emit = [&](ClassifiedTheory c) {
        bool fresh = seen.emplace(c.sct.key(), out.size()).second;
        detail::internal_check(fresh, "classify_dihedral: classification pieces overlap");
        out.push_back(std::move(c));
    };

    std::vector<Sct> gluing;  // every P_d member, across all d
    for (long d : divisors(n)) {
        Subgroup N = divisor_subgroup(G, d);
        Quotient Q = quotient_by_divisor(G, d);
        TablePtr TN = standard_table(N.std_group);
        TablePtr TQ = standard_table(Q.group);
        Sct MQ = sct_M(TQ);
        auto action = conjugation_action(N);
        SctLattice latN = enumerate_scts(TN, opts);
        for (const Sct& T : latN.theories) {
            if (!is_invariant(T, action)) continue;
            Sct member = star_product(TD, N, Q, T, MQ);
            gluing.push_back(member);
            emit({member, TheoryOrigin::InPd, d, -1, std::nullopt});
        }
    }

    if (n % 2 == 0) {
        for (const Sct& s : gluing) {
            if (!respects_parity(s)) continue;  // the filter form of R
            if (reflections_are_superclass_union(s)) {
                // A = B = empty forces the exact {mu0, mu1} block, i.e. s in Q.
                emit({psi(s), TheoryOrigin::PsiImage, 0, -1, s});
            } else {
                for (int i = 0; i < 2; ++i)
                    emit({psi_refine(s, i), TheoryOrigin::PsiIImage, 0, i, s});
            }
        }
    }
    return out;
}

struct VerifyReport {
    long n = 0;
    int enumerated = 0;
    int classified = 0;
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
        std::optional<Sct> witness;  // offending theory, for triage output
    };
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::string render() const {
        std::ostringstream out;
        out << "D_" << 2 * n << " (n=" << n << "): " << enumerated << " theories";
        out << (all_pass() ? "  [ok]" : "  [FAIL]") << "\n";
        for (const auto& c : checks) {
            out << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name;
            if (!c.detail.empty()) out << "  (" << c.detail << ")";
            out << "\n";
        }
        return out.str();
    }
};

// Check the classification theorems against brute-force enumeration.
// Requires n >= 3: for n <= 2 the group is abelian and has automorphisms
// beyond the dihedral presentation, so the characteristic criterion below
// does not apply (classify_dihedral still produces the correct set there).
inline VerifyReport verify_classification(long n, EnumerateOptions opts = {}) {
    detail::require(n >= 3, "verify_classification: n must be at least 3");
    VerifyReport rep;
    rep.n = n;
    GroupPtr G = make_dihedral(n);
    TablePtr TD = standard_table(G);
    SctLattice lat = enumerate_scts(TD, opts);
    std::vector<ClassifiedTheory> cls = classify_dihedral(n, opts);
    rep.enumerated = (int)lat.theories.size();
    rep.classified = (int)cls.size();

    auto add = [&](const std::string& name, bool pass, const std::string& detail = "",
                   std::optional<Sct> witness = std::nullopt) {
        rep.checks.push_back({name, pass, detail, std::move(witness)});
    };

    // (i) classify equals enumeration as a set of theories.
    {
        std::set<std::vector<int>> a, b;
        for (const auto& c : cls) a.insert(c.sct.key());
        for (const auto& s : lat.theories) b.insert(s.key());
        std::optional<Sct> witness;
        for (const Sct& s : lat.theories)
            if (!a.count(s.key())) witness = s;
        for (const auto& c : cls)
            if (!b.count(c.sct.key())) witness = c.sct;
        add("classification equals enumeration", a == b,
            std::to_string(rep.classified) + " classified / " + std::to_string(rep.enumerated) +
                " enumerated",
            std::move(witness));
    }

    // (ii) characteristic <=> glues or s<r> is a union of superclasses.
    {
        bool ok = true;
        std::optional<Sct> witness;
        for (const Sct& s : lat.theories)
            if (is_characteristic(s) !=
                (glues_reflections(s) || reflections_are_superclass_union(s))) {
                ok = false;
                witness = s;
                break;
            }
        add("characteristic criterion", ok, "", std::move(witness));
    }

    // (iii) every gluing theory lies in [F_d, C_d] where <r^d> is the
    // complement of its reflection superclass.
    {
        bool ok = true;
        std::string why;
        std::optional<Sct> witness;
        for (const Sct& s : lat.theories) {
            if (!glues_reflections(s)) continue;
            int refl = detail::reflection_block(s);
            std::vector<int> complement;
            for (int e = 0; e < G->order; ++e)
                if (s.classes.block_of(TD->class_of(e)) != refl) complement.push_back(e);
            long d = n / (long)complement.size();
            if (G->order % (long)complement.size() != 0 || d < 1 || n % d != 0 ||
                divisor_subgroup(G, d).elements != complement) {
                ok = false;
                why = "complement is not a rotation subgroup";
                witness = s;
                break;
            }
            if (!refines(build_F(TD, d), s) || !refines(s, build_C(TD, d))) {
                ok = false;
                why = "theory is outside [F_d, C_d]";
                witness = s;
                break;
            }
        }
        add("gluing complement subgroup and interval", ok, why, std::move(witness));
    }

    // (iv) every non-characteristic S: S v S^tau lies in R and S = psi_i of it.
    {
        bool ok = true;
        std::optional<Sct> witness;
        GroupHom tau = dihedral_tau(G);
        for (const Sct& s : lat.theories) {
            if (is_characteristic(s)) continue;
            Sct j = join(s, act(tau, s));
            bool hit = glues_reflections(j) && respects_parity(j) && is_characteristic(j) &&
                       (same_theory(psi_refine(j, 0), s) || same_theory(psi_refine(j, 1), s));
            if (!hit) {
                ok = false;
                witness = s;
                break;
            }
        }
        add("non-characteristic round trip", ok, "", std::move(witness));
    }

    // (v) the P_d's and psi(Q) are pairwise disjoint.
    {
        std::vector<std::set<std::vector<int>>> pieces;
        for (long d : divisors(n)) {
            std::set<std::vector<int>> piece;
            for (const Sct& s : subposet_P(lat, d)) piece.insert(s.key());
            pieces.push_back(std::move(piece));
        }
        {
            std::set<std::vector<int>> piece;
            for (const Sct& s : subposet_Q(lat)) piece.insert(psi(s).key());
            pieces.push_back(std::move(piece));
        }
        bool ok = true;
        for (std::size_t a = 0; a < pieces.size() && ok; ++a)
            for (std::size_t b = a + 1; b < pieces.size() && ok; ++b)
                for (const auto& k : pieces[a])
                    if (pieces[b].count(k)) {
                        ok = false;
                        break;
                    }
        add("P_d and psi(Q) pairwise disjoint", ok);
    }

    return rep;
}

}  // namespace sct
