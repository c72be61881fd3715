#pragma once

#include "sct/numeric.hpp"

#include <algorithm>
#include <functional>

namespace sct {

// Partition of {0, ..., n-1} in canonical form: every block sorted, blocks
// ordered by their minimal element.  Equality is therefore structural, and
// rgs() gives a compact canonical key (the restricted-growth string).
class SetPartition {
public:
    SetPartition() : n_(0) {}

    static SetPartition singletons(int n) {
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        return from_assignment(ids);
    }

    static SetPartition one_block(int n) {
        return from_assignment(std::vector<int>(n, 0));
    }

    // Arbitrary non-negative block ids per element; relabeled into canonical form.
    static SetPartition from_assignment(const std::vector<int>& ids) {
        SetPartition p;
        p.n_ = (int)ids.size();
        p.block_of_.assign(p.n_, -1);
        int max_id = -1;
        for (int v : ids) {
            detail::require(v >= 0, "SetPartition: negative block id");
            max_id = std::max(max_id, v);
        }
        std::vector<int> relabel(max_id + 1, -1);
        int next = 0;
        for (int i = 0; i < p.n_; ++i) {
            int& lbl = relabel[ids[i]];
            if (lbl < 0) {
                lbl = next++;
                p.blocks_.emplace_back();
            }
            p.block_of_[i] = lbl;
            p.blocks_[lbl].push_back(i);
        }
        return p;
    }

    static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
        std::vector<int> ids(n, -1);
        for (int b = 0; b < (int)blocks.size(); ++b) {
            detail::require(!blocks[b].empty(), "SetPartition: empty block");
            for (int e : blocks[b]) {
                detail::require(e >= 0 && e < n, "SetPartition: element out of range");
                detail::require(ids[e] < 0, "SetPartition: blocks overlap");
                ids[e] = b;
            }
        }
        for (int v : ids) detail::require(v >= 0, "SetPartition: blocks do not cover the set");
        return from_assignment(ids);
    }

    int ground_size() const { return n_; }
    int size() const { return (int)blocks_.size(); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int b) const { return blocks_[b]; }
    int block_of(int e) const { return block_of_[e]; }
    bool same_block(int a, int b) const { return block_of(a) == block_of(b); }

    // Canonical key: block_of in restricted-growth labeling.
    const std::vector<int>& rgs() const { return block_of_; }

    bool operator==(const SetPartition& o) const { return n_ == o.n_ && block_of_ == o.block_of_; }
    bool operator!=(const SetPartition& o) const { return !(*this == o); }
    bool operator<(const SetPartition& o) const { return block_of_ < o.block_of_; }

    // Refinement order: true when every block of this lies inside a block of o.
    bool refines(const SetPartition& o) const {
        detail::require(n_ == o.n_, "refines: partitions of different sets");
        for (const auto& blk : blocks_) {
            int target = o.block_of(blk[0]);
            for (int e : blk)
                if (o.block_of(e) != target) return false;
        }
        return true;
    }

    // Finest common coarsening: connected components of the two block graphs.
    SetPartition join(const SetPartition& o) const {
        detail::require(n_ == o.n_, "join: partitions of different sets");
        std::vector<int> parent(n_);
        for (int i = 0; i < n_; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (const auto& blk : blocks_)
            for (int i = 1; i < (int)blk.size(); ++i) unite(blk[0], blk[i]);
        for (const auto& blk : o.blocks_)
            for (int i = 1; i < (int)blk.size(); ++i) unite(blk[0], blk[i]);
        std::vector<int> ids(n_);
        for (int i = 0; i < n_; ++i) ids[i] = find(i);
        return from_assignment(ids);
    }

    // Coarsest common refinement (blockwise intersection).  This is the
    // "mutual refinement" that a lattice meet refines but need not equal.
    SetPartition meet_refinement(const SetPartition& o) const {
        detail::require(n_ == o.n_, "meet_refinement: partitions of different sets");
        std::vector<int> pair_ids(n_), ids(n_);
        for (int i = 0; i < n_; ++i) pair_ids[i] = block_of(i) * o.size() + o.block_of(i);
        std::vector<int> seen;
        for (int i = 0; i < n_; ++i) {
            auto it = std::find(seen.begin(), seen.end(), pair_ids[i]);
            if (it == seen.end()) {
                seen.push_back(pair_ids[i]);
                ids[i] = (int)seen.size() - 1;
            } else {
                ids[i] = (int)(it - seen.begin());
            }
        }
        return from_assignment(ids);
    }

    // Image under a permutation of the ground set.
    SetPartition mapped(const std::vector<int>& perm) const {
        detail::require((int)perm.size() == n_, "mapped: permutation size mismatch");
        std::vector<int> ids(n_, -1);
        for (int e = 0; e < n_; ++e) ids[perm[e]] = block_of(e);
        for (int v : ids) detail::require(v >= 0, "mapped: not a permutation");
        return from_assignment(ids);
    }

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

// Visit every set partition of {0,...,m-1} exactly once as a restricted-growth
// string: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).  Canonical, duplicate-free,
// and memory-light; Bell(m) leaves overall.
inline void for_each_rgs(int m, const std::function<void(const std::vector<int>&)>& visit) {
    if (m <= 0) {
        visit({});
        return;
    }
    std::vector<int> a(m, 0);
    std::function<void(int, int)> rec = [&](int i, int max_used) {
        if (i == m) {
            visit(a);
            return;
        }
        for (int v = 0; v <= max_used + 1; ++v) {
            a[i] = v;
            rec(i + 1, std::max(max_used, v));
        }
    };
    rec(1, 0);
}

}  // namespace sct
