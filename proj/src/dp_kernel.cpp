#include "cograph/dp_kernel.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cograph {

DeletionTable::DeletionTable(int max_p, int max_pq) : max_p_(max_p), max_pq_(max_pq) {
    if (max_p < 0 || max_pq < max_p) {
        throw std::invalid_argument("deletion table needs 0 <= max_p <= max_pq");
    }
    cells_.assign(row_offset(max_p + 1), 0);
}

DeletionTable DeletionTable::leaf(int max_p, int max_pq) {
    DeletionTable t(max_p, max_pq);
    t.at(0, 0) = 1;
    return t;
}

namespace {

void check_compatible(const DeletionTable& a, const DeletionTable& b) {
    if (a.max_p() != b.max_p() || a.max_pq() != b.max_pq()) {
        throw std::invalid_argument("deletion tables over different regions");
    }
}

}  // namespace

DeletionTable combine_union(const DeletionTable& up, const DeletionTable& down) {
    check_compatible(up, down);
    DeletionTable out(up.max_p(), up.max_pq());
    for (int p = 0; p <= out.max_p(); ++p) {
        for (int q = 0; q <= out.max_q(p); ++q) {
            out.at(p, q) = up.at(p, q) + down.at(p, q);
        }
    }
    return out;
}

DeletionTable combine_join(const DeletionTable& up, const DeletionTable& down) {
    check_compatible(up, down);
    DeletionTable out(up.max_p(), up.max_pq());
    const int width = out.max_pq() + 1;
    std::vector<std::int32_t> a(static_cast<std::size_t>(width));
    std::vector<std::int32_t> b(static_cast<std::size_t>(width));
    for (int p = 0; p <= out.max_p(); ++p) {
        const int q_limit = out.max_q(p);
        std::int32_t* row = &out.at(p, 0);
        std::fill(row, row + q_limit + 1, std::numeric_limits<std::int32_t>::max());
        for (int p_up = 0; p_up <= p; ++p_up) {
            for (int p_down = 0; p_up + p_down <= p; ++p_down) {
                const int crossing = p - p_up - p_down;
                for (int t_up = 0; t_up <= crossing; ++t_up) {
                    const int t_down = crossing - t_up;
                    // shifted child rows; indices stay inside each row since p >= p_up + t_down
                    const std::int32_t* u = up.row(p_up) + t_down;
                    const std::int32_t* d = down.row(p_down) + t_up;
                    for (int j = 0; j <= q_limit; ++j) {
                        a[j] = std::max(0, u[j] - t_up);
                        b[j] = std::max(0, d[j] - t_down);
                    }
                    // min-plus convolution of a and b
                    for (int q = 0; q <= q_limit; ++q) {
                        std::int32_t best = row[q];
                        for (int q_up = 0; q_up <= q; ++q_up) {
                            best = std::min(best, a[q_up] + b[q - q_up]);
                        }
                        row[q] = best;
                    }
                }
            }
        }
    }
    return out;
}

JoinSplit best_join_split(const DeletionTable& up, const DeletionTable& down, int p, int q) {
    check_compatible(up, down);
    if (!up.in_region(p, q)) {
        throw std::invalid_argument("best_join_split: target outside the table region");
    }
    JoinSplit best{};
    std::int32_t best_value = std::numeric_limits<std::int32_t>::max();
    for (int p_up = 0; p_up <= p; ++p_up) {
        for (int p_down = 0; p_up + p_down <= p; ++p_down) {
            const int crossing = p - p_up - p_down;
            for (int t_up = 0; t_up <= crossing; ++t_up) {
                const int t_down = crossing - t_up;
                for (int q_up = 0; q_up <= q; ++q_up) {
                    const std::int32_t a = std::max(0, up.at(p_up, q_up + t_down) - t_up);
                    const std::int32_t b = std::max(0, down.at(p_down, q - q_up + t_up) - t_down);
                    if (a + b < best_value) {
                        best_value = a + b;
                        best = {p_up, p_down, t_up, t_down, q_up};
                    }
                }
            }
        }
    }
    return best;
}

namespace {

// Fold the children of node x left to right. `child_table` yields the table
// of a child node (leaves map to the shared leaf table).
template <class ChildTable>
DeletionTable fold_node(const Cotree& t, int x, const ChildTable& child_table) {
    const auto& node = t.node(x);
    DeletionTable acc = child_table(node.children.front());
    for (std::size_t i = 1; i < node.children.size(); ++i) {
        const DeletionTable& next = child_table(node.children[i]);
        acc = node.kind == NodeKind::join ? combine_join(acc, next) : combine_union(acc, next);
    }
    return acc;
}

}  // namespace

DeletionTable evaluate_serial(const Cotree& t, int max_p, int max_pq) {
    const DeletionTable leaf = DeletionTable::leaf(max_p, max_pq);
    if (t.empty()) {
        return DeletionTable(max_p, max_pq);
    }
    std::vector<DeletionTable> tables(t.size());
    auto child_table = [&](int c) -> const DeletionTable& {
        return t.node(c).kind == NodeKind::leaf ? leaf : tables[c];
    };
    for (int x = 0; x < static_cast<int>(t.size()); ++x) {
        if (t.node(x).kind == NodeKind::leaf) {
            continue;
        }
        tables[x] = fold_node(t, x, child_table);
        for (int c : t.node(x).children) {
            tables[c] = DeletionTable();
        }
    }
    return t.node(t.root()).kind == NodeKind::leaf ? leaf : tables[t.root()];
}

DeletionTable evaluate_parallel(const Cotree& t, int max_p, int max_pq) {
    const DeletionTable leaf = DeletionTable::leaf(max_p, max_pq);
    if (t.empty()) {
        return DeletionTable(max_p, max_pq);
    }
    if (t.node(t.root()).kind == NodeKind::leaf) {
        return leaf;
    }
    // Level l holds the internal nodes of height l; all their children live
    // on lower levels, so each level is one data-parallel sweep.
    const int n_nodes = static_cast<int>(t.size());
    std::vector<int> level(t.size(), 0);
    int top = 0;
    for (int x = 0; x < n_nodes; ++x) {
        for (int c : t.node(x).children) {
            level[x] = std::max(level[x], level[c] + 1);
        }
        top = std::max(top, level[x]);
    }
    std::vector<std::vector<int>> by_level(static_cast<std::size_t>(top) + 1);
    for (int x = 0; x < n_nodes; ++x) {
        if (level[x] > 0) {
            by_level[level[x]].push_back(x);
        }
    }
    std::vector<DeletionTable> tables(t.size());
    auto child_table = [&](int c) -> const DeletionTable& {
        return t.node(c).kind == NodeKind::leaf ? leaf : tables[c];
    };
    for (int l = 1; l <= top; ++l) {
        const auto& nodes = by_level[l];
        const auto count = static_cast<std::ptrdiff_t>(nodes.size());
#pragma omp parallel for schedule(dynamic, 8)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            const int x = nodes[i];
            tables[x] = fold_node(t, x, child_table);
            // children belong to exactly one parent, so this write is private
            for (int c : t.node(x).children) {
                tables[c] = DeletionTable();
            }
        }
    }
    return tables[t.root()];
}

DeletionTrace evaluate_traced(const Cotree& t, int max_p, int max_pq) {
    DeletionTrace trace{DeletionTable::leaf(max_p, max_pq), std::vector<std::vector<DeletionTable>>(t.size())};
    for (int x = 0; x < static_cast<int>(t.size()); ++x) {
        const auto& node = t.node(x);
        if (node.kind == NodeKind::leaf) {
            continue;
        }
        auto& prefixes = trace.prefixes[x];
        prefixes.push_back(trace.of(t, node.children.front()));
        for (std::size_t i = 1; i < node.children.size(); ++i) {
            const DeletionTable& next = trace.of(t, node.children[i]);
            prefixes.push_back(node.kind == NodeKind::join ? combine_join(prefixes.back(), next)
                                                            : combine_union(prefixes.back(), next));
        }
    }
    return trace;
}

}  // namespace cograph
