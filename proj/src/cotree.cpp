#include "cograph/cotree.hpp"

#include <algorithm>
#include <numeric>

namespace cograph {

namespace {

// Re-emit the subtree at `root` of `src` in post-order, appending to `out`.
// Returns the index of the emitted root.
int emit_post_order(const std::vector<CotreeNode>& src, int root, std::vector<CotreeNode>& out) {
    struct Frame {
        int node;
        std::size_t next_child;
        std::vector<int> emitted;
    };
    std::vector<Frame> stack;
    stack.push_back({root, 0, {}});
    int last = -1;
    while (!stack.empty()) {
        auto& top = stack.back();
        const auto& node = src[top.node];
        if (top.next_child < node.children.size()) {
            const int child = node.children[top.next_child++];
            stack.push_back({child, 0, {}});
            continue;
        }
        CotreeNode copy;
        copy.kind = node.kind;
        copy.vertex = node.vertex;
        copy.children = std::move(top.emitted);
        out.push_back(std::move(copy));
        last = static_cast<int>(out.size()) - 1;
        stack.pop_back();
        if (!stack.empty()) {
            stack.back().emitted.push_back(last);
        }
    }
    return last;
}

}  // namespace

Cotree Cotree::leaf(int vertex) {
    Cotree t;
    t.nodes_.push_back({NodeKind::leaf, vertex, {}});
    t.vertex_count_ = 1;
    if (vertex != 0) {
        throw InputError("a single-leaf cotree must carry vertex 0");
    }
    return t;
}

Cotree Cotree::complete(int k) {
    if (k < 1) {
        throw InputError("K(k) needs k >= 1");
    }
    return combine(NodeKind::join, std::vector<Cotree>(static_cast<std::size_t>(k), leaf()));
}

Cotree Cotree::edgeless(int k) {
    if (k < 1) {
        throw InputError("I(k) needs k >= 1");
    }
    return combine(NodeKind::disjoint_union, std::vector<Cotree>(static_cast<std::size_t>(k), leaf()));
}

Cotree Cotree::combine(NodeKind kind, const std::vector<Cotree>& parts) {
    if (kind == NodeKind::leaf) {
        throw InputError("combine needs an internal node kind");
    }
    std::vector<CotreeNode> nodes;
    CotreeNode top{kind, -1, {}};
    int offset = 0;
    for (const auto& part : parts) {
        if (part.empty()) {
            continue;
        }
        const int base = static_cast<int>(nodes.size());
        for (const auto& node : part.nodes_) {
            CotreeNode copy = node;
            for (int& c : copy.children) {
                c += base;
            }
            if (copy.kind == NodeKind::leaf) {
                copy.vertex += offset;
            }
            nodes.push_back(std::move(copy));
        }
        top.children.push_back(base + part.root());
        offset += part.vertex_count_;
    }
    if (top.children.empty()) {
        return {};
    }
    nodes.push_back(std::move(top));
    const int root = static_cast<int>(nodes.size()) - 1;
    return from_nodes(nodes, root);
}

Cotree Cotree::from_nodes(const std::vector<CotreeNode>& nodes, int root) {
    if (nodes.empty()) {
        return {};
    }
    if (root < 0 || root >= static_cast<int>(nodes.size())) {
        throw InputError("cotree root index out of range");
    }
    // Pass 1: post-order over the input, building collapsed/flattened nodes
    // into `scratch`; rep[x] is the scratch index standing for input node x.
    std::vector<CotreeNode> scratch;
    std::vector<int> rep(nodes.size(), -1);
    std::vector<char> seen(nodes.size(), 0);
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    seen[root] = 1;
    std::vector<int> leaf_ids;
    while (!stack.empty()) {
        auto& [x, next] = stack.back();
        const auto& node = nodes[x];
        if (node.kind != NodeKind::leaf && next < node.children.size()) {
            const int c = node.children[next++];
            if (c < 0 || c >= static_cast<int>(nodes.size()) || seen[c]) {
                throw InputError("cotree node structure is not a tree");
            }
            seen[c] = 1;
            stack.emplace_back(c, 0);
            continue;
        }
        if (node.kind == NodeKind::leaf) {
            leaf_ids.push_back(node.vertex);
            scratch.push_back({NodeKind::leaf, node.vertex, {}});
            rep[x] = static_cast<int>(scratch.size()) - 1;
        } else {
            if (node.children.empty()) {
                throw InputError("internal cotree node without children");
            }
            std::vector<int> merged;
            for (int c : node.children) {
                const int e = rep[c];
                if (scratch[e].kind == node.kind) {
                    const auto& grand = scratch[e].children;
                    merged.insert(merged.end(), grand.begin(), grand.end());
                } else {
                    merged.push_back(e);
                }
            }
            if (merged.size() == 1) {
                rep[x] = merged.front();
            } else {
                scratch.push_back({node.kind, -1, std::move(merged)});
                rep[x] = static_cast<int>(scratch.size()) - 1;
            }
        }
        stack.pop_back();
    }
    const int n = static_cast<int>(leaf_ids.size());
    std::vector<char> hit(n, 0);
    for (int v : leaf_ids) {
        if (v < 0 || v >= n || hit[v]) {
            throw InputError("cotree leaf ids must be a permutation of 0..n-1");
        }
        hit[v] = 1;
    }
    // Pass 2: drop orphaned scratch nodes by re-emitting from the new root.
    Cotree t;
    emit_post_order(scratch, rep[root], t.nodes_);
    t.vertex_count_ = n;
    return t;
}

int Cotree::subtree_begin(int node) const {
    int x = node;
    while (nodes_[x].kind != NodeKind::leaf) {
        x = nodes_[x].children.front();
    }
    return x;
}

std::vector<int> Cotree::leaves_under(int node) const {
    std::vector<int> out;
    for (int i = subtree_begin(node); i <= node; ++i) {
        if (nodes_[i].kind == NodeKind::leaf) {
            out.push_back(nodes_[i].vertex);
        }
    }
    return out;
}

bool operator==(const Cotree& a, const Cotree& b) {
    if (a.nodes_.size() != b.nodes_.size() || a.vertex_count_ != b.vertex_count_) {
        return false;
    }
    for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
        const auto& x = a.nodes_[i];
        const auto& y = b.nodes_[i];
        if (x.kind != y.kind || x.vertex != y.vertex || x.children != y.children) {
            return false;
        }
    }
    return true;
}

Cotree complement(const Cotree& t) {
    auto nodes = t.nodes();
    for (auto& node : nodes) {
        if (node.kind == NodeKind::disjoint_union) {
            node.kind = NodeKind::join;
        } else if (node.kind == NodeKind::join) {
            node.kind = NodeKind::disjoint_union;
        }
    }
    return Cotree::from_nodes(nodes, t.root());
}

Cotree disjoint_union(const std::vector<Cotree>& parts) {
    return Cotree::combine(NodeKind::disjoint_union, parts);
}

Cotree join(const std::vector<Cotree>& parts) {
    return Cotree::combine(NodeKind::join, parts);
}

Cotree repeat(int k, const Cotree& t) {
    if (k < 1) {
        throw InputError("repetition count must be >= 1");
    }
    return disjoint_union(std::vector<Cotree>(static_cast<std::size_t>(k), t));
}

Graph realize(const Cotree& t) {
    Graph g(t.vertex_count());
    const auto& nodes = t.nodes();
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        if (nodes[i].kind != NodeKind::join) {
            continue;
        }
        std::vector<std::vector<int>> sides;
        for (int c : nodes[i].children) {
            sides.push_back(t.leaves_under(c));
        }
        for (std::size_t a = 0; a < sides.size(); ++a) {
            for (std::size_t b = a + 1; b < sides.size(); ++b) {
                for (int u : sides[a]) {
                    for (int v : sides[b]) {
                        g.add_edge(u, v);
                    }
                }
            }
        }
    }
    return g;
}

int height(const Cotree& t) {
    const auto& nodes = t.nodes();
    std::vector<int> h(nodes.size(), 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (int c : nodes[i].children) {
            h[i] = std::max(h[i], h[c] + 1);
        }
    }
    return nodes.empty() ? 0 : h.back();
}

int max_join_children(const Cotree& t) {
    int best = 0;
    for (const auto& node : t.nodes()) {
        if (node.kind == NodeKind::join) {
            best = std::max(best, static_cast<int>(node.children.size()));
        }
    }
    return best;
}

std::string CanonicalCode::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

CanonicalCode canonical_code(const Cotree& t) {
    const auto& nodes = t.nodes();
    std::vector<std::string> code(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& node = nodes[i];
        if (node.kind == NodeKind::leaf) {
            code[i] = "L";
            continue;
        }
        std::vector<std::string> parts;
        parts.reserve(node.children.size());
        for (int c : node.children) {
            parts.push_back(std::move(code[c]));
        }
        std::ranges::sort(parts);
        std::string s(1, node.kind == NodeKind::join ? 'J' : 'U');
        for (const auto& p : parts) {
            s += p;
        }
        s += ')';
        code[i] = std::move(s);
    }
    return CanonicalCode{nodes.empty() ? std::string{} : std::move(code.back())};
}

Cotree random_cotree(int leaves, std::mt19937_64& rng, RandomCotreeShape shape) {
    if (leaves <= 0) {
        return {};
    }
    const int max_arity = std::max(2, shape.max_arity);
    struct Pending {
        int node;
        int size;
    };
    std::vector<CotreeNode> nodes;
    std::vector<Pending> work;
    std::bernoulli_distribution coin(0.5);
    nodes.push_back({coin(rng) ? NodeKind::join : NodeKind::disjoint_union, -1, {}});
    work.push_back({0, leaves});
    int next_leaf = 0;
    while (!work.empty()) {
        const auto [id, size] = work.back();
        work.pop_back();
        if (size == 1) {
            nodes[id].kind = NodeKind::leaf;
            nodes[id].vertex = next_leaf++;
            continue;
        }
        const int k = std::uniform_int_distribution<int>(2, std::min(max_arity, size))(rng);
        std::vector<int> parts(k, 1);
        if (shape.balanced) {
            for (int i = 0; i < k; ++i) {
                parts[i] = size / k + (i < size % k ? 1 : 0);
            }
        } else {
            std::uniform_int_distribution<int> pick(0, k - 1);
            for (int extra = size - k; extra > 0; --extra) {
                ++parts[pick(rng)];
            }
        }
        const NodeKind child_kind = nodes[id].kind == NodeKind::join ? NodeKind::disjoint_union : NodeKind::join;
        for (int part : parts) {
            const int child = static_cast<int>(nodes.size());
            nodes.push_back({child_kind, -1, {}});
            nodes[id].children.push_back(child);
            work.push_back({child, part});
        }
    }
    std::vector<int> perm(static_cast<std::size_t>(leaves));
    std::iota(perm.begin(), perm.end(), 0);
    std::ranges::shuffle(perm, rng);
    for (auto& node : nodes) {
        if (node.kind == NodeKind::leaf) {
            node.vertex = perm[node.vertex];
        }
    }
    return Cotree::from_nodes(nodes, 0);
}

Cotree shuffle_children(const Cotree& t, std::mt19937_64& rng) {
    if (t.empty()) {
        return t;
    }
    auto nodes = t.nodes();
    for (auto& node : nodes) {
        std::ranges::shuffle(node.children, rng);
    }
    return Cotree::from_nodes(nodes, t.root());
}

}  // namespace cograph
