#pragma once

#include "cograph/cotree.hpp"

#include <cstdint>
#include <vector>

namespace cograph {

/// Minimum number of deleted vertices admitting a (p,q,*)-partition, for
/// every (p,q) in the staircase region p <= max_p, p + q <= max_pq.
///
/// A cograph is (p,q,r)-partitionable exactly when r >= at(p,q), so the
/// table determines the whole feasible set over that region. The region is
/// closed under the join recursion: a child only ever needs (p',q') with
/// p' <= p and p'+q' <= p+q.
class DeletionTable {
public:
    DeletionTable() = default;
    DeletionTable(int max_p, int max_pq);

    /// Table of a single vertex.
    static DeletionTable leaf(int max_p, int max_pq);

    int max_p() const { return max_p_; }
    int max_pq() const { return max_pq_; }
    int max_q(int p) const { return max_pq_ - p; }
    bool in_region(int p, int q) const { return p >= 0 && q >= 0 && p <= max_p_ && p + q <= max_pq_; }

    std::int32_t at(int p, int q) const { return cells_[row_offset(p) + q]; }
    std::int32_t& at(int p, int q) { return cells_[row_offset(p) + q]; }
    const std::int32_t* row(int p) const { return cells_.data() + row_offset(p); }

    friend bool operator==(const DeletionTable&, const DeletionTable&) = default;

private:
    std::size_t row_offset(int p) const {
        // rows shrink by one cell per step of p
        return static_cast<std::size_t>(p) * (max_pq_ + 1) - static_cast<std::size_t>(p) * (p - 1) / 2;
    }

    int max_p_ = 0;
    int max_pq_ = 0;
    std::vector<std::int32_t> cells_;
};

DeletionTable combine_union(const DeletionTable& up, const DeletionTable& down);
DeletionTable combine_join(const DeletionTable& up, const DeletionTable& down);

/// How a join table entry splits between the two sides: the up side gets
/// target (p_up, q_up + t_down) and the down side (p_down, q - q_up + t_up).
struct JoinSplit {
    int p_up = 0;
    int p_down = 0;
    int t_up = 0;
    int t_down = 0;
    int q_up = 0;
};

/// First split, in a fixed lexicographic order, attaining the minimum.
JoinSplit best_join_split(const DeletionTable& up, const DeletionTable& down, int p, int q);

/// Bottom-up evaluation of the root table. Multi-child nodes are folded left
/// to right. Both entry points produce identical tables; the serial one is
/// kept as the reference for the OpenMP one.
DeletionTable evaluate_serial(const Cotree& t, int max_p, int max_pq);
DeletionTable evaluate_parallel(const Cotree& t, int max_p, int max_pq);

/// Every prefix of every fold, as needed to reconstruct a partition.
/// prefixes[x][i] is the table of children 0..i of internal node x.
struct DeletionTrace {
    DeletionTable leaf;
    std::vector<std::vector<DeletionTable>> prefixes;

    const DeletionTable& of(const Cotree& t, int node) const {
        return t.node(node).kind == NodeKind::leaf ? leaf : prefixes[node].back();
    }
};

DeletionTrace evaluate_traced(const Cotree& t, int max_p, int max_pq);

}  // namespace cograph
