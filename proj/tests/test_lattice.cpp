#include "sct/cyclic_coverage.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sct;

namespace {

// Brute-force least upper bound from the order matrix; empty optional when
// it is not unique (which would disprove the join formula).
std::optional<int> brute_lub(const SctLattice& lat, int i, int j) {
    std::vector<int> ubs;
    for (int u = 0; u < (int)lat.theories.size(); ++u)
        if (lat.leq[i][u] && lat.leq[j][u]) ubs.push_back(u);
    std::vector<int> minimal;
    for (int u : ubs) {
        bool is_min = true;
        for (int v : ubs)
            if (v != u && lat.leq[v][u]) is_min = false;
        if (is_min) minimal.push_back(u);
    }
    if (minimal.size() != 1) return std::nullopt;
    return minimal[0];
}

std::optional<int> brute_glb(const SctLattice& lat, int i, int j) {
    std::vector<int> lbs;
    for (int u = 0; u < (int)lat.theories.size(); ++u)
        if (lat.leq[u][i] && lat.leq[u][j]) lbs.push_back(u);
    std::vector<int> maximal;
    for (int u : lbs) {
        bool is_max = true;
        for (int v : lbs)
            if (v != u && lat.leq[u][v]) is_max = false;
        if (is_max) maximal.push_back(u);
    }
    if (maximal.size() != 1) return std::nullopt;
    return maximal[0];
}

}  // namespace

TEST_CASE("exact theory counts") {
    CHECK(enumerate_scts(table_cyclic(3)).theories.size() == 2);
    CHECK(enumerate_scts(standard_table(make_dihedral(3))).theories.size() == 2);
    CHECK(enumerate_scts(table_cyclic(4)).theories.size() == 3);
    CHECK(enumerate_scts(table_cyclic(1)).theories.size() == 1);
    CHECK(enumerate_scts(table_cyclic(2)).theories.size() == 1);
}

TEST_CASE("enumeration guard") {
    EnumerateOptions tight;
    tight.max_classes = 3;
    CHECK_THROWS_AS(enumerate_scts(standard_table(make_dihedral(6)), tight), guard_exceeded);
}

TEST_CASE("threaded enumeration is identical") {
    EnumerateOptions par;
    par.threads = 4;
    SctLattice a = enumerate_scts(table_cyclic(8));
    SctLattice b = enumerate_scts(table_cyclic(8), par);
    REQUIRE(a.theories.size() == b.theories.size());
    for (std::size_t i = 0; i < a.theories.size(); ++i)
        CHECK(same_theory(a.theories[i], b.theories[i]));
}

TEST_CASE("order matrix is a partial order consistent with bounds") {
    for (auto t : {table_cyclic(8), standard_table(make_dihedral(4))}) {
        SctLattice lat = enumerate_scts(t);
        int k = (int)lat.theories.size();
        for (int i = 0; i < k; ++i) {
            CHECK(lat.leq[i][i]);
            CHECK(lat.leq[lat.bottom][i]);
            CHECK(lat.leq[i][lat.top]);
            for (int j = 0; j < k; ++j) {
                if (i != j && lat.leq[i][j]) CHECK(!lat.leq[j][i]);
                for (int u = 0; u < k; ++u)
                    if (lat.leq[i][j] && lat.leq[j][u]) CHECK(lat.leq[i][u]);
            }
        }
    }
}

TEST_CASE("join is the least upper bound; meet the greatest lower bound") {
    for (auto t : {table_cyclic(6), table_cyclic(8), standard_table(make_dihedral(4)),
                   standard_table(make_dihedral(6))}) {
        SctLattice lat = enumerate_scts(t);
        int k = (int)lat.theories.size();
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                Sct jn = join(lat.theories[i], lat.theories[j]);
                auto lub = brute_lub(lat, i, j);
                REQUIRE(lub.has_value());
                CHECK(same_theory(jn, lat.theories[*lub]));
                Sct mt = meet(lat, lat.theories[i], lat.theories[j]);
                auto glb = brute_glb(lat, i, j);
                REQUIRE(glb.has_value());
                CHECK(same_theory(mt, lat.theories[*glb]));
                // the lattice is closed under both operations
                CHECK(lat.find(jn) >= 0);
                CHECK(lat.find(mt) >= 0);
            }
    }
}

TEST_CASE("join and meet basics") {
    auto t = standard_table(make_dihedral(6));
    SctLattice lat = enumerate_scts(t);
    Sct m = sct_m(t), M = sct_M(t);
    for (const Sct& s : lat.theories) {
        CHECK(same_theory(join(s, m), s));
        CHECK(same_theory(join(s, M), M));
        CHECK(same_theory(meet(lat, s, M), s));
        CHECK(same_theory(meet(lat, m, s), m));
    }
    // absorption and idempotence on a sample of triples
    for (std::size_t i = 0; i < lat.theories.size(); ++i) {
        const Sct& a = lat.theories[i];
        const Sct& b = lat.theories[(3 * i + 1) % lat.theories.size()];
        CHECK(same_theory(join(a, a), a));
        CHECK(same_theory(meet(lat, a, join(a, b)), a));
        CHECK(same_theory(join(a, meet(lat, a, b)), a));
    }
    // meet superclass/supercharacter partitions refine the mutual refinements
    for (const Sct& a : lat.theories)
        for (const Sct& b : lat.theories) {
            Sct mt = meet(lat, a, b);
            CHECK(mt.classes.refines(a.classes.meet_refinement(b.classes)));
            CHECK(mt.chars.refines(a.chars.meet_refinement(b.chars)));
        }
}

TEST_CASE("intervals") {
    auto t = standard_table(make_dihedral(4));
    SctLattice lat = enumerate_scts(t);
    Sct m = sct_m(t), M = sct_M(t);
    CHECK(interval(lat, m, M).size() == lat.theories.size());
    for (const Sct& s : lat.theories) {
        auto single = interval(lat, s, s);
        REQUIRE(single.size() == 1);
        CHECK(same_theory(single[0], s));
    }
    CHECK_THROWS_AS(interval(lat, M, m), std::invalid_argument);
}

TEST_CASE("Hasse covers") {
    for (auto t : {table_cyclic(8), standard_table(make_dihedral(6))}) {
        SctLattice lat = enumerate_scts(t);
        int k = (int)lat.theories.size();
        std::set<std::pair<int, int>> cover_set(lat.covers.begin(), lat.covers.end());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j || !lat.leq[i][j]) continue;
                bool is_cover = true;
                for (int u = 0; u < k; ++u)
                    if (u != i && u != j && lat.leq[i][u] && lat.leq[u][j]) is_cover = false;
                CHECK(cover_set.count({i, j}) == (is_cover ? 1u : 0u));
                // S < T with |T| = |S| - 1 is always a covering relation
                if (lat.theories[j].size() == lat.theories[i].size() - 1) CHECK(is_cover);
            }
    }
}

TEST_CASE("cyclic three-form coverage") {
    // prime order: every non-M theory is an orbit theory m_A
    for (long p : {5L, 7L}) {
        SctLattice lat = enumerate_scts(table_cyclic(p));
        CyclicCoverageReport rep = check_cyclic_coverage(lat);
        CHECK(rep.all_covered());
        for (const auto& e : rep.entries) {
            if (e.is_M) continue;
            bool has_mA = false;
            for (const auto& m : e.matches) has_mA |= m.rfind("m_A", 0) == 0;
            CHECK(has_mA);
        }
    }

    // Z_6: everything is covered; the four *-products over <2> and <3>
    // (mm and MM flavors) are matched by form (3) only
    {
        SctLattice lat = enumerate_scts(table_cyclic(6));
        REQUIRE(lat.theories.size() == 7);
        CyclicCoverageReport rep = check_cyclic_coverage(lat);
        CHECK(rep.all_covered());
        int delta_only = 0;
        for (const auto& e : rep.entries) {
            if (e.is_M) continue;
            bool early_form = false;
            for (const auto& m : e.matches)
                early_form |= m.rfind("m_A", 0) == 0 || m.rfind("Z_", 0) == 0;
            if (!early_form) ++delta_only;
        }
        CHECK(delta_only == 4);
        Sct fine_star =
            build_sct(lat.table, SetPartition::from_blocks(6, {{0}, {2}, {4}, {1, 3, 5}}));
        int idx = lat.find(fine_star);
        REQUIRE(idx >= 0);
        bool delta_fired = false;
        for (const auto& m : rep.entries[idx].matches)
            delta_fired |= m.rfind("Delta", 0) == 0;
        CHECK(delta_fired);
    }

    // Z_4: {{0},{2},{1,3}} is m_A for A = {+-1}
    {
        SctLattice lat = enumerate_scts(table_cyclic(4));
        CyclicCoverageReport rep = check_cyclic_coverage(lat);
        Sct s = build_sct(lat.table, SetPartition::from_blocks(4, {{0}, {2}, {1, 3}}));
        int idx = lat.find(s);
        REQUIRE(idx >= 0);
        bool found = false;
        for (const auto& m : rep.entries[idx].matches) found |= m == "m_A with |A| = 2";
        CHECK(found);
    }

    // Z_8: the Delta-product over N = <4>, M = <2> fires
    {
        auto t8 = table_cyclic(8);
        SctLattice lat = enumerate_scts(t8);
        auto G = t8->group;
        Sct inner = sct_m(table_cyclic(4));  // over M = <2>, standard form Z_4
        Sct outer = sct_m(table_cyclic(4));  // over G/<4> = Z_4
        Sct delta = delta_product(t8, divisor_subgroup(G, 4), divisor_subgroup(G, 2), inner, outer);
        int idx = lat.find(delta);
        REQUIRE(idx >= 0);
        CyclicCoverageReport rep = check_cyclic_coverage(lat);
        bool found = false;
        for (const auto& m : rep.entries[idx].matches)
            found |= m == "Delta over N = <4>, M = <2>";
        CHECK(found);
        CHECK(rep.all_covered());
    }
}
