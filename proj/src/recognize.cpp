#include "cograph/cotree.hpp"

#include <optional>

namespace cograph {

namespace {

// Any induced P4 a-b-c-d has middle edge bc with a in N(b)\N[c] and
// d in N(c)\N[b], a and d non-adjacent. Scanning all edges finds one
// whenever g[s] and its complement are both connected (|s| >= 2).
std::optional<P4Witness> find_p4(const Graph& g, const VertexSet& s) {
    for (auto b = s.find_first(); b != VertexSet::npos; b = s.find_next(b)) {
        const auto& nb = g.neighbors(static_cast<int>(b));
        const VertexSet mids = nb & s;
        for (auto c = mids.find_first(); c != VertexSet::npos; c = mids.find_next(c)) {
            const auto& nc = g.neighbors(static_cast<int>(c));
            VertexSet ends_b = (nb - nc) & s;
            ends_b.reset(c);
            VertexSet ends_c = (nc - nb) & s;
            ends_c.reset(b);
            if (ends_b.none() || ends_c.none()) {
                continue;
            }
            for (auto a = ends_b.find_first(); a != VertexSet::npos; a = ends_b.find_next(a)) {
                const VertexSet far = ends_c - g.neighbors(static_cast<int>(a));
                if (far.any()) {
                    return P4Witness{{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c),
                                      static_cast<int>(far.find_first())}};
                }
            }
        }
    }
    return std::nullopt;
}

class Recognizer {
public:
    explicit Recognizer(const Graph& g) : g_(g) {}

    // Returns the index of the node built for g[s], or -1 after recording a witness.
    int build(const VertexSet& s) {
        if (s.count() == 1) {
            nodes_.push_back({NodeKind::leaf, static_cast<int>(s.find_first()), {}});
            return static_cast<int>(nodes_.size()) - 1;
        }
        auto parts = components(g_, s);
        NodeKind kind = NodeKind::disjoint_union;
        if (parts.size() == 1) {
            parts = co_components(g_, s);
            kind = NodeKind::join;
        }
        if (parts.size() == 1) {
            witness_ = find_p4(g_, s);
            return -1;
        }
        CotreeNode node{kind, -1, {}};
        for (const auto& part : parts) {
            const int child = build(part);
            if (child < 0) {
                return -1;
            }
            node.children.push_back(child);
        }
        nodes_.push_back(std::move(node));
        return static_cast<int>(nodes_.size()) - 1;
    }

    std::vector<CotreeNode> nodes_;
    std::optional<P4Witness> witness_;

private:
    const Graph& g_;
};

}  // namespace

Recognition recognize(const Graph& g) {
    if (g.order() == 0) {
        return Cotree{};
    }
    Recognizer rec(g);
    const int root = rec.build(g.all_vertices());
    if (root < 0) {
        if (!rec.witness_) {
            throw std::logic_error("recognize: prime subgraph without an induced P4");
        }
        return *rec.witness_;
    }
    return Cotree::from_nodes(rec.nodes_, root);
}

}  // namespace cograph
