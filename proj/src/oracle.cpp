#include "cograph/oracle.hpp"

#include "cograph/union_find.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace cograph {

namespace {

void check_size(const Graph& g, const OracleBudget& budget) {
    if (g.order() > budget.max_vertices) {
        throw OracleBudgetExceeded("oracle limited to " + std::to_string(budget.max_vertices) + " vertices, got " +
                                   std::to_string(g.order()));
    }
}

class PartitionSearch {
public:
    PartitionSearch(const Graph& g, Triple t, const OracleBudget& budget, std::vector<int> order)
        : g_(g),
          t_(t),
          budget_(budget),
          order_(std::move(order)),
          forests_(static_cast<std::size_t>(t.p), VertexSet(g.order())),
          independents_(static_cast<std::size_t>(t.q), VertexSet(g.order())),
          uf_(static_cast<std::size_t>(g.order())) {}

    bool run() { return place(0); }

private:
    bool place(std::size_t i) {
        if (i == order_.size()) {
            return true;
        }
        if (++assignments_ > budget_.max_assignments) {
            throw OracleBudgetExceeded("oracle assignment budget exhausted");
        }
        const int v = order_[i];
        const auto& nbrs = g_.neighbors(v);

        const int forest_limit = std::min(open_forests_ + 1, t_.p);
        for (int k = 0; k < forest_limit; ++k) {
            const std::size_t mark = uf_.checkpoint();
            bool acyclic = true;
            const VertexSet touching = nbrs & forests_[k];
            for (auto u = touching.find_first(); u != VertexSet::npos; u = touching.find_next(u)) {
                if (!uf_.unite(static_cast<int>(u), v)) {
                    acyclic = false;
                    break;
                }
            }
            if (acyclic) {
                const bool opened = k == open_forests_;
                open_forests_ += opened ? 1 : 0;
                forests_[k].set(v);
                const bool ok = place(i + 1);
                forests_[k].reset(v);
                open_forests_ -= opened ? 1 : 0;
                if (ok) {
                    uf_.rollback(mark);
                    return true;
                }
            }
            uf_.rollback(mark);
        }

        const int independent_limit = std::min(open_independents_ + 1, t_.q);
        for (int k = 0; k < independent_limit; ++k) {
            if (nbrs.intersects(independents_[k])) {
                continue;
            }
            const bool opened = k == open_independents_;
            open_independents_ += opened ? 1 : 0;
            independents_[k].set(v);
            const bool ok = place(i + 1);
            independents_[k].reset(v);
            open_independents_ -= opened ? 1 : 0;
            if (ok) {
                return true;
            }
        }

        if (deleted_ < t_.r) {
            ++deleted_;
            const bool ok = place(i + 1);
            --deleted_;
            if (ok) {
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    Triple t_;
    const OracleBudget& budget_;
    std::vector<int> order_;
    std::vector<VertexSet> forests_;
    std::vector<VertexSet> independents_;
    RollbackUnionFind uf_;
    int open_forests_ = 0;
    int open_independents_ = 0;
    int deleted_ = 0;
    std::uint64_t assignments_ = 0;
};

}  // namespace

bool brute_force_partitionable(const Graph& g, Triple t, const OracleBudget& budget, std::vector<int> order) {
    check_size(g, budget);
    if (t.p < 0 || t.q < 0 || t.r < 0) {
        throw InputError("triple components must be non-negative");
    }
    if (order.empty()) {
        order.resize(static_cast<std::size_t>(g.order()));
        std::iota(order.begin(), order.end(), 0);
        std::ranges::stable_sort(order, [&](int a, int b) { return g.degree(a) > g.degree(b); });
    } else {
        auto sorted = order;
        std::ranges::sort(sorted);
        std::vector<int> ids(static_cast<std::size_t>(g.order()));
        std::iota(ids.begin(), ids.end(), 0);
        if (sorted != ids) {
            throw InputError("oracle vertex order must be a permutation of the vertices");
        }
    }
    return PartitionSearch(g, t, budget, std::move(order)).run();
}

int brute_force_arboricity(const Graph& g, const OracleBudget& budget) {
    for (int p = 0;; ++p) {
        if (brute_force_partitionable(g, {p, 0, 0}, budget)) {
            return p;
        }
    }
}

int brute_force_chromatic(const Graph& g, const OracleBudget& budget) {
    for (int q = 0;; ++q) {
        if (brute_force_partitionable(g, {0, q, 0}, budget)) {
            return q;
        }
    }
}

int brute_force_min_deletions(const Graph& g, int p, int q, const OracleBudget& budget) {
    for (int r = 0;; ++r) {
        if (brute_force_partitionable(g, {p, q, r}, budget)) {
            return r;
        }
    }
}

StrengthProfile brute_force_strength(const Graph& g, const OracleBudget& budget) {
    check_size(g, budget);
    const int n = g.order();
    if (n == 0) {
        throw InputError("strength of the empty graph is undefined");
    }
    StrengthProfile out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v) {
            if (mask & (1u << v)) {
                members.push_back(v);
            }
        }
        const int size = static_cast<int>(members.size());
        bool clique = true;
        bool thick = size % 2 == 0;
        for (int a = 0; a < size && (clique || thick); ++a) {
            int non_adjacent = 0;
            for (int b = 0; b < size; ++b) {
                if (a != b && !g.adjacent(members[a], members[b])) {
                    ++non_adjacent;
                }
            }
            clique = clique && non_adjacent == 0;
            thick = thick && non_adjacent == 1;
        }
        if (clique) {
            out.omega = std::max(out.omega, size);
        }
        if (thick) {
            out.tau = std::max(out.tau, size / 2);
        }
    }
    out.strength = std::max(out.omega, out.tau + 1);
    return out;
}

bool brute_force_is_cograph(const Graph& g) {
    const int n = g.order();
    std::vector<int> quad(4);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                for (int d = c + 1; d < n; ++d) {
                    quad = {a, b, c, d};
                    int edges = 0;
                    std::array<int, 4> deg{};
                    for (int i = 0; i < 4; ++i) {
                        for (int j = i + 1; j < 4; ++j) {
                            if (g.adjacent(quad[i], quad[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                        }
                    }
                    std::ranges::sort(deg);
                    if (edges == 3 && deg == std::array<int, 4>{1, 1, 2, 2}) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace cograph
