#include "cograph/cotree.hpp"

#include <map>

namespace cograph {

namespace {

// Unlabelled cotree shapes, shared across sizes. Shape 0 is the single leaf.
struct Shape {
    NodeKind kind;
    std::vector<int> children;
};

class ShapeCatalog {
public:
    ShapeCatalog() { shapes_.push_back({NodeKind::leaf, {}}); }

    // Shapes on n leaves whose root has the given kind (n >= 2).
    const std::vector<int>& rooted(NodeKind kind, int n) {
        auto key = std::make_pair(kind, n);
        if (auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
        std::vector<int> out;
        std::vector<int> parts;
        partitions(n, n - 1, parts, [&](const std::vector<int>& p) { expand(kind, p, out); });
        return cache_.emplace(key, std::move(out)).first->second;
    }

    // Candidate children of a `parent`-rooted node with k leaves.
    std::vector<int> pieces(NodeKind parent, int k) {
        if (k == 1) {
            return {0};
        }
        return rooted(parent == NodeKind::join ? NodeKind::disjoint_union : NodeKind::join, k);
    }

    Cotree build(int shape) const {
        std::vector<CotreeNode> nodes;
        int next_leaf = 0;
        const int root = emit(shape, nodes, next_leaf);
        return Cotree::from_nodes(nodes, root);
    }

private:
    // Non-increasing partitions of n into at least two parts, largest part <= cap.
    template <class F>
    void partitions(int n, int cap, std::vector<int>& acc, F&& visit) {
        if (n == 0) {
            if (acc.size() >= 2) {
                visit(acc);
            }
            return;
        }
        for (int part = std::min(n, cap); part >= 1; --part) {
            acc.push_back(part);
            partitions(n - part, part, acc, visit);
            acc.pop_back();
        }
    }

    // For each maximal run of equal part sizes choose a multiset of pieces
    // (non-decreasing indices), then take the product over runs.
    void expand(NodeKind kind, const std::vector<int>& parts, std::vector<int>& out) {
        struct Run {
            std::vector<int> pieces;
            int count;
        };
        std::vector<Run> runs;
        for (std::size_t i = 0; i < parts.size();) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) {
                ++j;
            }
            runs.push_back({pieces(kind, parts[i]), static_cast<int>(j - i)});
            i = j;
        }
        std::vector<int> chosen;
        choose(kind, runs, 0, 0, 0, chosen, out);
    }

    template <class Runs>
    void choose(NodeKind kind, const Runs& runs, std::size_t run, int taken, std::size_t min_index,
                std::vector<int>& chosen, std::vector<int>& out) {
        if (run == runs.size()) {
            shapes_.push_back({kind, chosen});
            out.push_back(static_cast<int>(shapes_.size()) - 1);
            return;
        }
        if (taken == runs[run].count) {
            choose(kind, runs, run + 1, 0, 0, chosen, out);
            return;
        }
        const auto& options = runs[run].pieces;
        for (std::size_t idx = min_index; idx < options.size(); ++idx) {
            chosen.push_back(options[idx]);
            choose(kind, runs, run, taken + 1, idx, chosen, out);
            chosen.pop_back();
        }
    }

    int emit(int shape, std::vector<CotreeNode>& nodes, int& next_leaf) const {
        const auto& s = shapes_[shape];
        if (s.kind == NodeKind::leaf) {
            nodes.push_back({NodeKind::leaf, next_leaf++, {}});
            return static_cast<int>(nodes.size()) - 1;
        }
        CotreeNode node{s.kind, -1, {}};
        for (int c : s.children) {
            node.children.push_back(emit(c, nodes, next_leaf));
        }
        nodes.push_back(std::move(node));
        return static_cast<int>(nodes.size()) - 1;
    }

    std::vector<Shape> shapes_;
    std::map<std::pair<NodeKind, int>, std::vector<int>> cache_;
};

}  // namespace

void for_each_cograph(int n, const std::function<void(const Cotree&)>& visit) {
    if (n < 1) {
        throw InputError("enumerate_cographs needs n >= 1");
    }
    if (n == 1) {
        visit(Cotree::leaf());
        return;
    }
    ShapeCatalog catalog;
    for (NodeKind kind : {NodeKind::disjoint_union, NodeKind::join}) {
        const std::vector<int> ids = catalog.rooted(kind, n);
        for (int id : ids) {
            visit(catalog.build(id));
        }
    }
}

std::vector<Cotree> enumerate_cographs(int n) {
    std::vector<Cotree> out;
    for_each_cograph(n, [&](const Cotree& t) { out.push_back(t); });
    return out;
}

}  // namespace cograph
