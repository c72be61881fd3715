#pragma once

#include "sct/partition.hpp"

#include <array>
#include <memory>
#include <set>
#include <string>

namespace sct {

enum class Family { Cyclic, Dihedral, Product, Generic };

// A finite group as a multiplication table over dense element indices
// 0..order-1, with index 0 always the identity.  Dihedral encoding: index
// k = r^k for k < n, index n + k = s*r^k.  Immutable after construction.
struct FiniteGroup {
    int order = 0;
    Family family = Family::Generic;
    long n = 0;  // family parameter for cyclic(n) / dihedral(n)
    std::vector<int> mul;  // row-major order x order
    std::vector<int> inv;
    std::vector<std::string> labels;

    int at(int a, int b) const { return mul[a * order + b]; }
    int conj(int g, int x) const { return at(at(g, x), inv[g]); }  // g x g^-1
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order == b.order && a.family == b.family && a.n == b.n && a.mul == b.mul;
}
inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
    return a == b || same_group(*a, *b);
}

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Cyclic: return "cyclic";
        case Family::Dihedral: return "dihedral";
        case Family::Product: return "product";
        default: return "generic";
    }
}

namespace detail {

// Exhaustive identity/inverse/associativity audit; cheap at desk scale.
inline void validate_group(const FiniteGroup& g) {
    require(g.order >= 1 && (int)g.mul.size() == g.order * g.order, "group: malformed table");
    for (int a = 0; a < g.order; ++a) {
        internal_check(g.at(0, a) == a && g.at(a, 0) == a, "group: identity law fails");
        internal_check(g.at(a, g.inv[a]) == 0 && g.at(g.inv[a], a) == 0, "group: inverse law fails");
    }
    if (g.order <= 64) {
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                for (int c = 0; c < g.order; ++c)
                    internal_check(g.at(g.at(a, b), c) == g.at(a, g.at(b, c)),
                                   "group: associativity fails");
    }
}

inline void fill_inverses(FiniteGroup& g) {
    g.inv.assign(g.order, -1);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (g.at(a, b) == 0) g.inv[a] = b;
}

}  // namespace detail

inline GroupPtr make_cyclic(long n) {
    detail::require(n >= 1, "make_cyclic: n must be positive");
    auto g = std::make_shared<FiniteGroup>();
    g->order = (int)n;
    g->family = Family::Cyclic;
    g->n = n;
    g->mul.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g->mul[a * n + b] = (int)((a + b) % n);
    detail::fill_inverses(*g);
    g->labels.resize(n);
    for (int a = 0; a < n; ++a) g->labels[a] = std::to_string(a);
    detail::validate_group(*g);
    return g;
}

inline GroupPtr make_dihedral(long n) {
    detail::require(n >= 1, "make_dihedral: n must be positive");
    auto g = std::make_shared<FiniteGroup>();
    int N = (int)n;
    g->order = 2 * N;
    g->family = Family::Dihedral;
    g->n = n;
    g->mul.resize(g->order * g->order);
    // r^a * r^b = r^(a+b);  r^a * s r^b = s r^(b-a);  s r^a * r^b = s r^(a+b);
    // s r^a * s r^b = r^(b-a)   (from s r^a = s * r^a and s r s = r^-1)
    auto idx = [&](bool refl, long k) { return (refl ? N : 0) + (int)mod_norm(k, n); };
    for (int i = 0; i < g->order; ++i) {
        bool ri = i >= N;
        long ki = i % N;
        for (int j = 0; j < g->order; ++j) {
            bool rj = j >= N;
            long kj = j % N;
            int prod;
            if (!ri && !rj) prod = idx(false, ki + kj);
            else if (!ri && rj) prod = idx(true, kj - ki);
            else if (ri && !rj) prod = idx(true, ki + kj);
            else prod = idx(false, kj - ki);
            g->mul[i * g->order + j] = prod;
        }
    }
    detail::fill_inverses(*g);
    g->labels.resize(g->order);
    for (int k = 0; k < N; ++k) {
        g->labels[k] = k == 0 ? "e" : (k == 1 ? "r" : "r^" + std::to_string(k));
        g->labels[N + k] = k == 0 ? "s" : (k == 1 ? "s*r" : "s*r^" + std::to_string(k));
    }
    detail::validate_group(*g);
    return g;
}

inline bool is_cyclic(const FiniteGroup& g) { return g.family == Family::Cyclic; }
inline bool is_dihedral(const FiniteGroup& g) { return g.family == Family::Dihedral; }

// A map of groups carried as an element-index table.
struct GroupHom {
    GroupPtr source;
    GroupPtr target;
    std::vector<int> map;

    int operator()(int e) const { return map[e]; }
};

inline bool is_hom(const GroupHom& h) {
    if ((int)h.map.size() != h.source->order) return false;
    if (h.map[0] != 0) return false;
    for (int a = 0; a < h.source->order; ++a)
        for (int b = 0; b < h.source->order; ++b)
            if (h.map[h.source->at(a, b)] != h.target->at(h.map[a], h.map[b])) return false;
    return true;
}

inline bool is_bijective(const GroupHom& h) {
    if (h.source->order != h.target->order) return false;
    std::vector<char> hit(h.target->order, 0);
    for (int v : h.map) {
        if (v < 0 || v >= h.target->order || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

inline bool is_automorphism(const GroupHom& h) {
    return same_group(h.source, h.target) && is_bijective(h) && is_hom(h);
}

inline GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
    detail::require(same_group(inner.target, outer.source), "compose: middle group mismatch");
    GroupHom r{inner.source, outer.target, {}};
    r.map.resize(inner.map.size());
    for (int e = 0; e < (int)inner.map.size(); ++e) r.map[e] = outer.map[inner.map[e]];
    return r;
}

inline GroupHom inverse_of(const GroupHom& h) {
    detail::require(is_bijective(h), "inverse_of: hom is not bijective");
    GroupHom r{h.target, h.source, std::vector<int>(h.map.size())};
    for (int e = 0; e < (int)h.map.size(); ++e) r.map[h.map[e]] = e;
    return r;
}

inline GroupHom identity_hom(const GroupPtr& g) {
    GroupHom h{g, g, std::vector<int>(g->order)};
    for (int e = 0; e < g->order; ++e) h.map[e] = e;
    return h;
}

inline int element_order(const FiniteGroup& g, int e) {
    int x = e, k = 1;
    while (x != 0) {
        x = g.at(x, e);
        ++k;
    }
    return k;
}

// Orbits of conjugation; block 0 is always {identity}.
inline SetPartition conjugacy_classes(const FiniteGroup& g) {
    std::vector<int> ids(g.order, -1);
    int next = 0;
    for (int e = 0; e < g.order; ++e) {
        if (ids[e] >= 0) continue;
        int id = next++;
        std::vector<int> stack{e};
        ids[e] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int h = 0; h < g.order; ++h) {
                int y = g.conj(h, x);
                if (ids[y] < 0) {
                    ids[y] = id;
                    stack.push_back(y);
                }
            }
        }
    }
    return SetPartition::from_assignment(ids);
}

namespace detail {

inline std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> seed) {
    std::set<int> have(seed.begin(), seed.end());
    have.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(have.begin(), have.end());
        for (int a : cur)
            for (int b : cur) {
                if (have.insert(g.at(a, b)).second) grew = true;
            }
        for (int a : cur)
            if (have.insert(g.inv[a]).second) grew = true;
    }
    return {have.begin(), have.end()};
}

inline bool is_normal_subset(const FiniteGroup& g, const std::vector<int>& h) {
    std::set<int> members(h.begin(), h.end());
    for (int x : h)
        for (int a = 0; a < g.order; ++a)
            if (!members.count(g.conj(a, x))) return false;
    return true;
}

}  // namespace detail

struct SubgroupInfo {
    std::vector<int> elements;  // sorted
    bool normal = false;
};

// Every subgroup exactly once, by breadth-first closure of generator sets.
inline std::vector<SubgroupInfo> all_subgroups(const FiniteGroup& g) {
    if (g.order > 64) throw guard_exceeded("all_subgroups: order limit 64 exceeded");
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> trivial{0};
    seen.insert(trivial);
    queue.push_back(trivial);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        std::vector<int> base = queue[q];
        for (int e = 0; e < g.order; ++e) {
            if (std::binary_search(base.begin(), base.end(), e)) continue;
            std::vector<int> seed = base;
            seed.push_back(e);
            std::vector<int> h = detail::subgroup_closure(g, seed);
            if (seen.insert(h).second) queue.push_back(h);
        }
    }
    std::vector<SubgroupInfo> result;
    for (const auto& h : queue) result.push_back({h, detail::is_normal_subset(g, h)});
    std::sort(result.begin(), result.end(), [](const SubgroupInfo& a, const SubgroupInfo& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return result;
}

// All automorphisms, by brute force over images of a greedy generating set.
// Each candidate assignment is extended to a full map along a BFS spanning
// tree and then audited as a bijective homomorphism.
inline std::vector<GroupHom> automorphism_group(const GroupPtr& gp) {
    const FiniteGroup& g = *gp;
    if (g.order > 64) throw guard_exceeded("automorphism_group: order limit 64 exceeded");

    std::vector<int> gens;
    std::vector<int> have{0};
    for (int e = 1; e < g.order && (int)have.size() < g.order; ++e) {
        if (std::binary_search(have.begin(), have.end(), e)) continue;
        gens.push_back(e);
        auto seed = have;
        seed.push_back(e);
        have = detail::subgroup_closure(g, seed);
    }

    // Spanning tree: word[e] = (previous element, generator index) with
    // e = previous * gens[gi].
    std::vector<std::array<int, 2>> word(g.order, {-1, -1});
    std::vector<int> bfs{0};
    for (std::size_t q = 0; q < bfs.size(); ++q)
        for (int gi = 0; gi < (int)gens.size(); ++gi) {
            int nxt = g.at(bfs[q], gens[gi]);
            if (nxt != 0 && word[nxt][0] < 0) {
                word[nxt] = {bfs[q], gi};
                bfs.push_back(nxt);
            }
        }

    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int ord = element_order(g, gens[i]);
        for (int e = 1; e < g.order; ++e)
            if (element_order(g, e) == ord) candidates[i].push_back(e);
    }

    std::vector<GroupHom> autos;
    std::set<std::vector<int>> dedup;
    std::vector<int> images(gens.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == gens.size()) {
            std::vector<int> map(g.order, -1);
            map[0] = 0;
            for (int e : bfs)
                if (e != 0) map[e] = g.at(map[word[e][0]], images[word[e][1]]);
            GroupHom h{gp, gp, std::move(map)};
            if (is_bijective(h) && is_hom(h) && dedup.insert(h.map).second)
                autos.push_back(std::move(h));
            return;
        }
        for (int img : candidates[i]) {
            images[i] = img;
            rec(i + 1);
        }
    };
    rec(0);
    return autos;
}

// For dihedral groups, the automorphism r -> r, s -> s*r that transposes the
// two reflection cosets of <r^2>.
inline GroupHom dihedral_tau(const GroupPtr& gp) {
    detail::require(is_dihedral(*gp), "dihedral_tau: dihedral group required");
    int N = (int)gp->n;
    GroupHom h{gp, gp, std::vector<int>(gp->order)};
    for (int k = 0; k < N; ++k) {
        h.map[k] = k;
        h.map[N + k] = N + (k + 1) % N;
    }
    detail::internal_check(is_automorphism(h), "dihedral_tau: not an automorphism");
    return h;
}

struct DirectProduct {
    GroupPtr group;
    GroupHom embed_left;   // G -> G x H
    GroupHom embed_right;  // H -> G x H
};

// Componentwise product on index pairs (a, b) -> a * |H| + b.
inline DirectProduct direct_product(const GroupPtr& G, const GroupPtr& H) {
    auto g = std::make_shared<FiniteGroup>();
    int nG = G->order, nH = H->order;
    g->order = nG * nH;
    g->family = Family::Product;
    g->n = 0;
    g->mul.resize(g->order * g->order);
    for (int a = 0; a < g->order; ++a)
        for (int b = 0; b < g->order; ++b) {
            int p = G->at(a / nH, b / nH);
            int q = H->at(a % nH, b % nH);
            g->mul[a * g->order + b] = p * nH + q;
        }
    detail::fill_inverses(*g);
    g->labels.resize(g->order);
    for (int a = 0; a < g->order; ++a)
        g->labels[a] = "(" + G->labels[a / nH] + "," + H->labels[a % nH] + ")";
    detail::validate_group(*g);

    GroupHom el{G, g, std::vector<int>(nG)};
    for (int a = 0; a < nG; ++a) el.map[a] = a * nH;
    GroupHom er{H, g, std::vector<int>(nH)};
    for (int b = 0; b < nH; ++b) er.map[b] = b;
    return {g, std::move(el), std::move(er)};
}

// Standard-form subgroup of the recognized families: the divisor subgroup
// <d> of a cyclic group, or the rotation subgroup <r^d> of a dihedral group.
// Both are cyclic of order n/d, embedded by j -> d*j.
struct Subgroup {
    GroupPtr parent;
    long d = 1;
    std::vector<int> elements;  // sorted element indices in the parent
    GroupPtr std_group;         // cyclic(n/d)
    GroupHom embed;             // std_group -> parent
    std::vector<int> std_index_of;  // parent element -> std index, or -1
};

inline Subgroup divisor_subgroup(const GroupPtr& G, long d) {
    detail::require(is_cyclic(*G) || is_dihedral(*G),
                    "divisor_subgroup: cyclic or dihedral parent required");
    long n = G->n;
    detail::require(d >= 1 && n % d == 0, "divisor_subgroup: d must divide n");
    Subgroup s;
    s.parent = G;
    s.d = d;
    s.std_group = make_cyclic(n / d);
    s.embed = GroupHom{s.std_group, G, {}};
    s.embed.map.resize(n / d);
    s.std_index_of.assign(G->order, -1);
    for (long j = 0; j < n / d; ++j) {
        int e = (int)(j * d);
        s.embed.map[j] = e;
        s.elements.push_back(e);
        s.std_index_of[e] = (int)j;
    }
    detail::internal_check(is_hom(s.embed), "divisor_subgroup: embedding is not a hom");
    return s;
}

// Recognize a sorted element subset as one of the standard divisor subgroups.
inline Subgroup recognize_subgroup(const GroupPtr& G, const std::vector<int>& elements) {
    detail::require(is_cyclic(*G) || is_dihedral(*G),
                    "recognize_subgroup: cyclic or dihedral parent required");
    detail::require(!elements.empty() && G->n % (long)elements.size() == 0,
                    "recognize_subgroup: size does not divide n");
    Subgroup s = divisor_subgroup(G, G->n / (long)elements.size());
    detail::require(s.elements == elements, "recognize_subgroup: not a standard divisor subgroup");
    return s;
}

// Quotient by a normal subgroup, recognized by shape: cyclic/cyclic and
// dihedral/rotation only.  Anything else is an error rather than an
// unlabeled coset table, because downstream character tables exist only for
// the recognized families.
struct Quotient {
    GroupPtr parent;
    std::vector<int> kernel;  // sorted
    GroupPtr group;
    GroupHom proj;  // parent -> group, surjective with the given kernel
};

inline Quotient quotient(const GroupPtr& G, const std::vector<int>& kernel_elements) {
    std::vector<int> N = kernel_elements;
    std::sort(N.begin(), N.end());
    detail::require(detail::subgroup_closure(*G, N) == N, "quotient: kernel is not a subgroup");
    detail::require(detail::is_normal_subset(*G, N), "quotient: kernel is not normal");
    Quotient q;
    q.parent = G;
    q.kernel = N;
    long m = G->order / (long)N.size();
    if (is_cyclic(*G)) {
        q.group = make_cyclic(m);
        q.proj = GroupHom{G, q.group, std::vector<int>(G->order)};
        for (int e = 0; e < G->order; ++e) q.proj.map[e] = (int)(e % m);
    } else if (is_dihedral(*G)) {
        for (int e : N)
            detail::require(e < G->n, "quotient: dihedral kernel must lie in the rotations");
        long d = G->n / (long)N.size();
        q.proj = GroupHom{G, nullptr, std::vector<int>(G->order)};
        if (d == 1) {
            q.group = make_cyclic(2);
            for (int e = 0; e < G->order; ++e) q.proj.map[e] = e < G->n ? 0 : 1;
        } else {
            q.group = make_dihedral(d);
            for (int e = 0; e < G->order; ++e) {
                long k = e % G->n;
                q.proj.map[e] = (int)((e < G->n ? 0 : d) + k % d);
            }
        }
        q.proj.target = q.group;
    } else {
        throw std::invalid_argument("quotient: unrecognized quotient shape");
    }
    detail::internal_check(is_hom(q.proj), "quotient: projection is not a hom");
    for (int e = 0; e < G->order; ++e)
        detail::internal_check((q.proj.map[e] == 0) == std::binary_search(N.begin(), N.end(), e),
                               "quotient: kernel mismatch");
    std::vector<char> hit(q.group->order, 0);
    for (int v : q.proj.map) hit[v] = 1;
    for (char c : hit) detail::internal_check(c == 1, "quotient: projection not surjective");
    return q;
}

inline Quotient quotient_by_divisor(const GroupPtr& G, long d) {
    return quotient(G, divisor_subgroup(G, d).elements);
}

// The conjugation action of the parent on a standard subgroup, as
// automorphisms of the subgroup's standard form (duplicates removed).
inline std::vector<GroupHom> conjugation_action(const Subgroup& N) {
    const FiniteGroup& G = *N.parent;
    std::set<std::vector<int>> seen;
    std::vector<GroupHom> action;
    int m = N.std_group->order;
    for (int gelt = 0; gelt < G.order; ++gelt) {
        GroupHom h{N.std_group, N.std_group, std::vector<int>(m)};
        bool ok = true;
        for (int j = 0; j < m && ok; ++j) {
            int image = G.conj(gelt, N.embed.map[j]);
            int sj = N.std_index_of[image];
            ok = sj >= 0;
            if (ok) h.map[j] = sj;
        }
        detail::internal_check(ok, "conjugation_action: subgroup is not normal");
        if (seen.insert(h.map).second) action.push_back(std::move(h));
    }
    return action;
}

}  // namespace sct
