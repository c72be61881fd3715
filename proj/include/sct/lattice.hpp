#pragma once

#include "sct/sct.hpp"

#include <map>
#include <thread>

namespace sct {

struct EnumerateOptions {
    int max_classes = 13;  // Bell(12) candidate partitions at the limit
    int threads = 1;
};

// The full lattice of supercharacter theories of one group: theories in
// canonical order, the refinement order matrix, and the Hasse cover edges.
struct SctLattice {
    TablePtr table;
    std::vector<Sct> theories;
    std::map<std::vector<int>, int> index;  // class-partition key -> position
    std::vector<std::vector<char>> leq;
    std::vector<std::pair<int, int>> covers;
    int bottom = -1;  // m(G)
    int top = -1;     // M(G)

    int find(const Sct& s) const {
        auto it = index.find(s.key());
        return it == index.end() ? -1 : it->second;
    }

    bool less_eq(int i, int j) const { return leq[i][j] != 0; }
};

namespace detail {

// Cheap necessary condition: superclass partitions are closed under the
// inverse-class permutation, so candidates that are not can be dropped
// before the full subalgebra test.
inline bool closed_under_inverses(const CharacterTable& t, const std::vector<int>& ids,
                                  std::vector<int>& image_of, std::vector<char>& seen) {
    int C = t.num_classes();
    image_of.assign(C, -1);
    seen.assign(C, 0);
    for (int c = 0; c < C; ++c) {
        int b = ids[c], fb = ids[t.inverse_class[c]];
        if (image_of[b] < 0) {
            if (seen[fb]) return false;  // two blocks map onto one
            image_of[b] = fb;
            seen[fb] = 1;
        } else if (image_of[b] != fb) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

// Exhaustive, duplicate-free enumeration: all set partitions of the
// non-identity classes (restricted growth strings), the identity class
// prepended as a singleton, filtered by the subalgebra criterion.
inline SctLattice enumerate_scts(const TablePtr& t, EnumerateOptions opts = {}) {
    int C = t->num_classes();
    if (C > opts.max_classes)
        throw guard_exceeded("enumerate_scts: " + std::to_string(C) + " classes exceeds guard of " +
                             std::to_string(opts.max_classes));

    std::vector<std::vector<int>> candidates;
    std::vector<int> image_of;
    std::vector<char> seen;
    for_each_rgs(C - 1, [&](const std::vector<int>& rgs) {
        std::vector<int> ids(C);
        ids[0] = 0;
        for (int c = 1; c < C; ++c) ids[c] = rgs[c - 1] + 1;
        if (detail::closed_under_inverses(*t, ids, image_of, seen))
            candidates.push_back(std::move(ids));
    });

    std::vector<char> valid(candidates.size(), 0);
    auto run = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            valid[i] =
                is_valid_superclass_partition(*t, SetPartition::from_assignment(candidates[i]));
    };
    int workers = std::max(1, opts.threads);
    if (workers == 1 || candidates.size() < 64) {
        run(0, candidates.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (candidates.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::size_t lo = w * chunk, hi = std::min(candidates.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(run, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    SctLattice lat;
    lat.table = t;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (valid[i]) lat.theories.push_back(build_sct(t, SetPartition::from_assignment(candidates[i])));
    std::sort(lat.theories.begin(), lat.theories.end(),
              [](const Sct& a, const Sct& b) { return a.key() < b.key(); });

    int k = (int)lat.theories.size();
    for (int i = 0; i < k; ++i) lat.index.emplace(lat.theories[i].key(), i);
    detail::internal_check((int)lat.index.size() == k, "enumerate_scts: duplicate theories");

    lat.leq.assign(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            lat.leq[i][j] = refines(lat.theories[i], lat.theories[j]) ? 1 : 0;

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j || !lat.leq[i][j]) continue;
            bool cover = true;
            for (int u = 0; u < k && cover; ++u)
                if (u != i && u != j && lat.leq[i][u] && lat.leq[u][j]) cover = false;
            if (cover) lat.covers.emplace_back(i, j);
        }

    lat.bottom = lat.find(sct_m(t));
    lat.top = lat.find(sct_M(t));
    detail::internal_check(lat.bottom >= 0 && lat.top >= 0,
                           "enumerate_scts: extreme theories missing");
    for (int i = 0; i < k; ++i)
        detail::internal_check(lat.leq[lat.bottom][i] && lat.leq[i][lat.top],
                               "enumerate_scts: m/M are not bottom/top");
    return lat;
}

// Lattice join: mutual coarsening on both sides at once.  Validity of the
// joined class partition is a theorem, so a failure here is internal.
inline Sct join(const Sct& a, const Sct& b) {
    detail::require(same_group(a.group(), b.group()), "join: theories over different groups");
    SetPartition jc = a.classes.join(b.classes);
    detail::internal_check(is_valid_superclass_partition(*a.table, jc),
                           "join: joined partition is not a theory");
    Sct r = build_sct(a.table, jc);
    detail::internal_check(r.chars == a.chars.join(b.chars),
                           "join: character side is not the partition join");
    return r;
}

// Meet, realized from the enumerated lattice as the join of all common lower
// bounds.
inline Sct meet(const SctLattice& lat, const Sct& a, const Sct& b) {
    int ia = lat.find(a), ib = lat.find(b);
    detail::require(ia >= 0 && ib >= 0, "meet: theory not present in the lattice");
    Sct result = lat.theories[lat.bottom];
    for (std::size_t u = 0; u < lat.theories.size(); ++u)
        if (lat.leq[u][ia] && lat.leq[u][ib]) result = join(result, lat.theories[u]);
    detail::internal_check(refines(result, a) && refines(result, b),
                           "meet: result is not a lower bound");
    return result;
}

inline std::vector<Sct> interval(const SctLattice& lat, const Sct& lo, const Sct& hi) {
    int ilo = lat.find(lo), ihi = lat.find(hi);
    detail::require(ilo >= 0 && ihi >= 0, "interval: endpoint not present in the lattice");
    detail::require(lat.less_eq(ilo, ihi), "interval: endpoints are incomparable");
    std::vector<Sct> out;
    for (std::size_t u = 0; u < lat.theories.size(); ++u)
        if (lat.leq[ilo][u] && lat.leq[u][ihi]) out.push_back(lat.theories[u]);
    return out;
}

}  // namespace sct
