#pragma once

#include "sct/constructions.hpp"

#include <sstream>

namespace sct {

// The automorphism group itself as a multiplication-table group (index 0 is
// the identity map), so subgroup enumeration applies to it.
struct AutGroup {
    GroupPtr group;
    std::vector<GroupHom> homs;  // homs[i] corresponds to element i
};

inline AutGroup automorphisms_as_group(const GroupPtr& G) {
    std::vector<GroupHom> homs = cached_automorphisms(G);
    for (std::size_t i = 0; i < homs.size(); ++i)
        if (homs[i].map == identity_hom(G).map) {
            std::swap(homs[0], homs[i]);
            break;
        }
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < homs.size(); ++i) index.emplace(homs[i].map, (int)i);

    auto g = std::make_shared<FiniteGroup>();
    g->order = (int)homs.size();
    g->family = Family::Generic;
    g->mul.resize(g->order * g->order);
    for (int i = 0; i < g->order; ++i)
        for (int j = 0; j < g->order; ++j) {
            auto it = index.find(compose(homs[i], homs[j]).map);
            detail::internal_check(it != index.end(),
                                   "automorphisms_as_group: composition left the set");
            g->mul[i * g->order + j] = it->second;
        }
    detail::fill_inverses(*g);
    g->labels.resize(g->order);
    for (int i = 0; i < g->order; ++i) g->labels[i] = "a" + std::to_string(i);
    detail::validate_group(*g);
    return {g, std::move(homs)};
}

// Coverage check for the classified forms of SCT(Z_n): every theory other
// than M(Z_n) should match at least one of
//   (1) m_A(G) for a subgroup A of Aut(G),
//   (2) a direct product over a coprime decomposition G = H x K,
//   (3) a nontrivial Delta-product (chain {e} < N <= M < G).
// Reports which forms fire for each theory; an uncovered theory is a
// counterexample.
struct CyclicCoverageReport {
    long n = 0;
    struct Entry {
        int index = 0;
        bool is_M = false;
        std::vector<std::string> matches;
    };
    std::vector<Entry> entries;

    bool all_covered() const {
        for (const auto& e : entries)
            if (!e.is_M && e.matches.empty()) return false;
        return true;
    }
};

inline CyclicCoverageReport check_cyclic_coverage(const SctLattice& lat, EnumerateOptions opts = {}) {
    const GroupPtr& G = lat.table->group;
    detail::require(is_cyclic(*G), "check_cyclic_coverage: cyclic group required");
    long n = G->n;

    std::map<std::vector<int>, std::vector<std::string>> matched;

    // Form (1): orbit theories of automorphism subgroups.
    AutGroup aut = automorphisms_as_group(G);
    for (const auto& sub : all_subgroups(*aut.group)) {
        std::vector<GroupHom> A;
        for (int i : sub.elements) A.push_back(aut.homs[i]);
        Sct s = orbit_sct(lat.table, A);
        matched[s.key()].push_back("m_A with |A| = " + std::to_string(A.size()));
    }

    // Form (2): direct products along coprime splits n = a * b.
    for (long a = 2; a * a <= n; ++a) {
        if (n % a != 0) continue;
        long b = n / a;
        if (std::gcd(a, b) != 1) continue;
        TablePtr TA = table_cyclic(a), TB = table_cyclic(b);
        ProductCtx ctx = make_product_ctx(TA, TB);
        // CRT relabeling of the product onto Z_n.
        std::vector<int> iso(G->order);
        for (long x = 0; x < a; ++x)
            for (long y = 0; y < b; ++y)
                for (long z = 0; z < n; ++z)
                    if (z % a == x && z % b == y) iso[x * b + y] = (int)z;
        SctLattice latA = enumerate_scts(TA, opts), latB = enumerate_scts(TB, opts);
        for (const Sct& SA : latA.theories)
            for (const Sct& SB : latB.theories) {
                Sct prod = direct_product_sct(ctx, SA, SB);
                std::vector<int> ids(G->order);
                for (int p = 0; p < G->order; ++p)
                    ids[iso[p]] = prod.classes.block_of(ctx.table->class_of(p));
                Sct s = build_sct(lat.table, SetPartition::from_assignment(ids));
                matched[s.key()].push_back("Z_" + std::to_string(a) + " x Z_" + std::to_string(b));
            }
    }

    // Form (3): Delta-products over chains {e} < <d_N> <= <d_M> < G.
    for (long dM : divisors(n)) {
        if (dM == 1) continue;  // M = G
        Subgroup M = divisor_subgroup(G, dM);
        TablePtr TM = standard_table(M.std_group);
        SctLattice latM = enumerate_scts(TM, opts);
        for (long dN : divisors(n)) {
            if (dN == n || dN % dM != 0) continue;  // N = {e}, or N not inside M
            Subgroup N = divisor_subgroup(G, dN);
            TablePtr TQ = standard_table(quotient_by_divisor(G, dN).group);
            SctLattice latQ = enumerate_scts(TQ, opts);
            for (const Sct& S : latM.theories)
                for (const Sct& T : latQ.theories) {
                    try {
                        Sct s = delta_product(lat.table, N, M, S, T);
                        matched[s.key()].push_back("Delta over N = <" + std::to_string(dN) +
                                                   ">, M = <" + std::to_string(dM) + ">");
                    } catch (const std::invalid_argument&) {
                        // chain conditions (a)-(c) fail for this pair; not a match
                    }
                }
        }
    }

    CyclicCoverageReport rep;
    rep.n = n;
    std::vector<int> M_key = sct_M(lat.table).key();
    for (std::size_t i = 0; i < lat.theories.size(); ++i) {
        CyclicCoverageReport::Entry e;
        e.index = (int)i;
        e.is_M = lat.theories[i].key() == M_key;
        auto it = matched.find(lat.theories[i].key());
        if (it != matched.end()) {
            std::sort(it->second.begin(), it->second.end());
            it->second.erase(std::unique(it->second.begin(), it->second.end()), it->second.end());
            e.matches = it->second;
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace sct
