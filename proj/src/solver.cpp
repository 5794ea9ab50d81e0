#include "cograph/solver.hpp"

#include <algorithm>

namespace cograph {

namespace {

std::string witness_text(const P4Witness& w) {
    return std::to_string(w.path[0]) + "-" + std::to_string(w.path[1]) + "-" + std::to_string(w.path[2]) + "-" +
           std::to_string(w.path[3]);
}

void check_triple(Triple t) {
    if (t.p < 0 || t.q < 0 || t.r < 0) {
        throw InputError("triple components must be non-negative: " + to_string(t));
    }
}

DeletionTable evaluate(const Cotree& t, int max_p, int max_pq, Execution exec) {
    return exec == Execution::serial ? evaluate_serial(t, max_p, max_pq) : evaluate_parallel(t, max_p, max_pq);
}

}  // namespace

NotCographError::NotCographError(const P4Witness& witness)
    : InputError("graph is not a cograph: induced P4 " + witness_text(witness)), witness_(witness) {}

Cotree require_cograph(const Graph& g) {
    auto result = recognize(g);
    if (auto* w = std::get_if<P4Witness>(&result)) {
        throw NotCographError(*w);
    }
    return std::get<Cotree>(std::move(result));
}

DeletionTable deletion_table(const Cotree& t, Box box, Execution exec) {
    check_triple({box.p, box.q, box.r});
    return evaluate(t, box.p, box.p + box.q, exec);
}

TripleSet feasible_set(const Cotree& t, Box box, Execution exec) {
    const DeletionTable table = deletion_table(t, box, exec);
    TripleSet out(box);
    for (int p = 0; p <= box.p; ++p) {
        for (int q = 0; q <= box.q; ++q) {
            for (int r = std::max(0, table.at(p, q)); r <= box.r; ++r) {
                out.insert({p, q, r});
            }
        }
    }
    return out;
}

bool is_partitionable(const Cotree& t, Triple triple) {
    return min_deletions(t, triple.p, triple.q) <= triple.r;
}

bool is_partitionable(const Graph& g, Triple triple) {
    check_triple(triple);
    return is_partitionable(require_cograph(g), triple);
}

namespace {

using Kind = VertexLabel::Kind;

// Reconstructs an optimal labelling for target (p,q) of a subtree; the
// number of deleted vertices equals the table entry exactly.
class CertificateBuilder {
public:
    CertificateBuilder(const Cotree& t, const DeletionTrace& trace, std::vector<VertexLabel>& labels)
        : t_(t), trace_(trace), labels_(labels) {}

    // Returns the vertices of the subtree.
    std::vector<int> build(int x, int p, int q) {
        const auto& node = t_.node(x);
        if (node.kind == NodeKind::leaf) {
            if (p >= 1) {
                labels_[node.vertex] = {Kind::forest, 1};
            } else if (q >= 1) {
                labels_[node.vertex] = {Kind::independent, 1};
            } else {
                labels_[node.vertex] = {Kind::deleted, 0};
            }
            return {node.vertex};
        }
        const auto& prefixes = trace_.prefixes[x];
        const std::size_t k = node.children.size();
        // Walk the fold backwards to fix every step's split before recursing.
        std::vector<std::pair<int, int>> child_target(k);
        std::vector<JoinSplit> splits(k);
        int cur_p = p;
        int cur_q = q;
        for (std::size_t i = k - 1; i >= 1; --i) {
            if (node.kind == NodeKind::disjoint_union) {
                child_target[i] = {cur_p, cur_q};
            } else {
                const JoinSplit s =
                    best_join_split(prefixes[i - 1], trace_.of(t_, node.children[i]), cur_p, cur_q);
                splits[i] = s;
                child_target[i] = {s.p_down, cur_q - s.q_up + s.t_up};
                cur_p = s.p_up;
                cur_q = s.q_up + s.t_down;
            }
        }
        child_target[0] = {cur_p, cur_q};

        std::vector<int> acc = build(node.children[0], child_target[0].first, child_target[0].second);
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<int> next = build(node.children[i], child_target[i].first, child_target[i].second);
            if (node.kind == NodeKind::join) {
                merge_join(acc, next, splits[i], child_target[i].second);
            }
            acc.insert(acc.end(), next.begin(), next.end());
        }
        return acc;
    }

private:
    // up side labelled for (p_up, q_up + t_down), down side for
    // (p_down, q_down + t_up). Crossing stars become forests
    // p_up+p_down+1 .. p_up+p_down+t_up (centre up) and the next t_down
    // (centre down).
    void merge_join(const std::vector<int>& up, const std::vector<int>& down, const JoinSplit& s, int down_q) {
        const int q_down = down_q - s.t_up;
        const int first_star_up = s.p_up + s.p_down;
        const int first_star_down = first_star_up + s.t_up;
        relabel(up, 0, 0, s.q_up, first_star_down, s.t_up, first_star_up);
        relabel(down, s.p_up, s.q_up, q_down, first_star_up, s.t_down, first_star_down);
    }

    // Shift forests by forest_shift; independent classes <= keep_q move by
    // q_shift, later ones become star leaves of forest leaf_base + (j-keep_q);
    // the `centres` smallest deleted vertices become centres of forests
    // centre_base + 1, ....
    void relabel(const std::vector<int>& side, int forest_shift, int q_shift, int keep_q, int leaf_base, int centres,
                 int centre_base) {
        std::vector<int> deleted;
        for (int v : side) {
            auto& label = labels_[v];
            switch (label.kind) {
                case Kind::forest:
                    label.index += forest_shift;
                    break;
                case Kind::independent:
                    if (label.index <= keep_q) {
                        label.index += q_shift;
                    } else {
                        label = {Kind::forest, leaf_base + (label.index - keep_q)};
                    }
                    break;
                case Kind::deleted:
                    deleted.push_back(v);
                    break;
            }
        }
        std::ranges::sort(deleted);
        const int used = std::min(centres, static_cast<int>(deleted.size()));
        for (int i = 0; i < used; ++i) {
            labels_[deleted[i]] = {Kind::forest, centre_base + i + 1};
        }
    }

    const Cotree& t_;
    const DeletionTrace& trace_;
    std::vector<VertexLabel>& labels_;
};

}  // namespace

PartitionCertificate extract_certificate(const Cotree& t, Triple triple) {
    check_triple(triple);
    PartitionCertificate cert;
    cert.labels.resize(static_cast<std::size_t>(t.vertex_count()));
    if (t.empty()) {
        return cert;
    }
    const DeletionTrace trace = evaluate_traced(t, triple.p, triple.p + triple.q);
    if (trace.of(t, t.root()).at(triple.p, triple.q) > triple.r) {
        throw InfeasibleError("no " + to_string(triple) + "-partition exists");
    }
    CertificateBuilder(t, trace, cert.labels).build(t.root(), triple.p, triple.q);
    return cert;
}

bool check_partition(const Graph& g, const PartitionCertificate& cert, Triple triple) {
    const int n = g.order();
    if (static_cast<int>(cert.labels.size()) != n) {
        throw InputError("certificate labels " + std::to_string(cert.labels.size()) + " vertices, graph has " +
                         std::to_string(n));
    }
    std::vector<VertexSet> forests(static_cast<std::size_t>(std::max(triple.p, 0)), VertexSet(n));
    std::vector<VertexSet> independents(static_cast<std::size_t>(std::max(triple.q, 0)), VertexSet(n));
    int deleted = 0;
    bool within = true;
    for (int v = 0; v < n; ++v) {
        const auto& label = cert.labels[v];
        if (label.kind == Kind::deleted) {
            ++deleted;
            continue;
        }
        if (label.index < 1) {
            throw InputError("class index must be >= 1 (vertex " + std::to_string(v) + ")");
        }
        auto& pool = label.kind == Kind::forest ? forests : independents;
        if (label.index > static_cast<int>(pool.size())) {
            within = false;
            continue;
        }
        pool[label.index - 1].set(v);
    }
    if (!within || deleted > triple.r) {
        return false;
    }
    for (const auto& f : forests) {
        if (!induces_forest(g, f)) {
            return false;
        }
    }
    for (const auto& s : independents) {
        if (!is_independent(g, s)) {
            return false;
        }
    }
    return true;
}

namespace {

// Doubles `bound` until `probe(bound)` reports the answer, capped at `cap`.
template <class Probe>
int doubling_search(int cap, Probe&& probe) {
    int bound = 1;
    for (;;) {
        bound = std::min(bound, cap);
        if (auto found = probe(bound); found >= 0) {
            return found;
        }
        if (bound == cap) {
            throw std::logic_error("parameter search exceeded its upper bound");
        }
        bound *= 2;
    }
}

}  // namespace

int vertex_arboricity(const Cotree& t) {
    const int n = t.vertex_count();
    if (n == 0) {
        return 0;
    }
    // any two vertices induce a forest
    return doubling_search((n + 1) / 2, [&](int bound) {
        const DeletionTable table = evaluate_parallel(t, bound, bound);
        for (int p = 0; p <= bound; ++p) {
            if (table.at(p, 0) == 0) {
                return p;
            }
        }
        return -1;
    });
}

int chromatic_number(const Cotree& t) {
    const int n = t.vertex_count();
    if (n == 0) {
        return 0;
    }
    return doubling_search(n, [&](int bound) {
        const DeletionTable table = evaluate_parallel(t, 0, bound);
        for (int q = 0; q <= bound; ++q) {
            if (table.at(0, q) == 0) {
                return q;
            }
        }
        return -1;
    });
}

int min_deletions(const Cotree& t, int p, int q) {
    check_triple({p, q, 0});
    return evaluate_parallel(t, p, p + q).at(p, q);
}

int min_q_feedback(const Cotree& t) {
    const int n = t.vertex_count();
    if (n == 0) {
        return 0;
    }
    return doubling_search(n, [&](int bound) {
        const DeletionTable table = evaluate_parallel(t, 1, 1 + bound);
        for (int q = 0; q <= bound; ++q) {
            if (table.at(1, q) == 0) {
                return q;
            }
        }
        return -1;
    });
}

int vertex_arboricity(const Graph& g) { return vertex_arboricity(require_cograph(g)); }
int chromatic_number(const Graph& g) { return chromatic_number(require_cograph(g)); }
int min_deletions(const Graph& g, int p, int q) { return min_deletions(require_cograph(g), p, q); }
int min_q_feedback(const Graph& g) { return min_q_feedback(require_cograph(g)); }

}  // namespace cograph
