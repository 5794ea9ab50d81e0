#include "cograph/graph.hpp"

#include <algorithm>
#include <numeric>

namespace cograph {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n))) {
    if (n < 0) {
        throw InputError("negative vertex count");
    }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::complete(int n) {
    return complement(Graph(n));
}

Graph Graph::edgeless(int n) {
    return Graph(n);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw InputError("self-loop at vertex " + std::to_string(u));
    }
    rows_[u].set(v);
    rows_[v].set(u);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : rows_) {
        twice += row.count();
    }
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        for (auto v = rows_[u].find_next(u); v != VertexSet::npos; v = rows_[u].find_next(v)) {
            out.emplace_back(u, static_cast<int>(v));
        }
    }
    return out;
}

VertexSet Graph::all_vertices() const {
    VertexSet s(n_);
    s.set();
    return s;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) {
                out.add_edge(u, v);
            }
        }
    }
    return out;
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross) {
    const int a = g.order();
    const int b = h.order();
    Graph out(a + b);
    for (auto [u, v] : g.edges()) {
        out.add_edge(u, v);
    }
    for (auto [u, v] : h.edges()) {
        out.add_edge(a + u, a + v);
    }
    if (cross) {
        for (int u = 0; u < a; ++u) {
            for (int v = 0; v < b; ++v) {
                out.add_edge(u, a + v);
            }
        }
    }
    return out;
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
    return combine(g, h, false);
}

Graph join(const Graph& g, const Graph& h) {
    return combine(g, h, true);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (static_cast<int>(s.size()) != g.order()) {
        throw InputError("vertex set universe does not match graph order");
    }
    return induced_subgraph(g, to_vector(s));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    const int k = static_cast<int>(vertices.size());
    for (int v : vertices) {
        if (v < 0 || v >= g.order()) {
            throw InputError("vertex " + std::to_string(v) + " out of range");
        }
    }
    Graph out(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (vertices[i] == vertices[j]) {
                throw InputError("repeated vertex in induced subgraph");
            }
            if (g.adjacent(vertices[i], vertices[j])) {
                out.add_edge(i, j);
            }
        }
    }
    return out;
}

Graph delete_vertex(const Graph& g, int v) {
    auto s = g.all_vertices();
    if (v < 0 || v >= g.order()) {
        throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    s.reset(v);
    return induced_subgraph(g, s);
}

VertexSet make_vertex_set(int n, std::span<const int> vertices) {
    VertexSet s(n);
    for (int v : vertices) {
        if (v < 0 || v >= n) {
            throw InputError("vertex " + std::to_string(v) + " out of range");
        }
        s.set(v);
    }
    return s;
}

std::vector<int> to_vector(const VertexSet& s) {
    std::vector<int> out;
    out.reserve(s.count());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        out.push_back(static_cast<int>(v));
    }
    return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        if (g.neighbors(static_cast<int>(v)).intersects(s)) {
            return false;
        }
    }
    return true;
}

bool is_forest(const Graph& g) {
    // Iterative DFS; a non-tree edge to a visited vertex other than the parent closes a cycle.
    const int n = g.order();
    std::vector<int> parent(n, -2);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (parent[root] != -2) {
            continue;
        }
        parent[root] = -1;
        stack.push_back(root);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            const auto& row = g.neighbors(u);
            for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w)) {
                const int v = static_cast<int>(w);
                if (v == parent[u]) {
                    continue;
                }
                if (parent[v] != -2) {
                    return false;
                }
                parent[v] = u;
                stack.push_back(v);
            }
        }
    }
    return true;
}

bool induces_forest(const Graph& g, const VertexSet& s) {
    std::size_t twice_edges = 0;
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        twice_edges += (g.neighbors(static_cast<int>(v)) & s).count();
    }
    const std::size_t vertices = s.count();
    const std::size_t edges = twice_edges / 2;
    if (vertices == 0) {
        return true;
    }
    if (edges >= vertices) {
        return false;
    }
    return edges + components(g, s).size() == vertices;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> out;
    VertexSet left = s;
    while (left.any()) {
        VertexSet comp(s.size());
        VertexSet frontier(s.size());
        frontier.set(left.find_first());
        while (frontier.any()) {
            comp |= frontier;
            VertexSet next(s.size());
            for (auto v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v)) {
                next |= g.neighbors(static_cast<int>(v));
            }
            next &= left;
            next -= comp;
            frontier = std::move(next);
        }
        left -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (const auto& c : components(g, g.all_vertices())) {
        out.push_back(to_vector(c));
    }
    return out;
}

std::vector<VertexSet> co_components(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> out;
    VertexSet left = s;
    while (left.any()) {
        VertexSet comp(s.size());
        VertexSet frontier(s.size());
        frontier.set(left.find_first());
        left -= frontier;
        while (frontier.any()) {
            comp |= frontier;
            VertexSet next(s.size());
            for (auto v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v)) {
                // non-neighbours of v still unvisited
                next |= left - g.neighbors(static_cast<int>(v));
            }
            left -= next;
            frontier = std::move(next);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

class InducedCopySearch {
public:
    InducedCopySearch(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {
        const int k = pattern.order();
        const int n = host.order();
        // Connectivity-first order: next pattern vertex has most already-ordered neighbours.
        std::vector<bool> placed(k, false);
        for (int step = 0; step < k; ++step) {
            int best = -1;
            int best_links = -1;
            for (int u = 0; u < k; ++u) {
                if (placed[u]) {
                    continue;
                }
                int links = 0;
                for (int w : order_) {
                    links += pattern.adjacent(u, w) ? 1 : 0;
                }
                if (links > best_links || (links == best_links && pattern.degree(u) > pattern.degree(best))) {
                    best = u;
                    best_links = links;
                }
            }
            placed[best] = true;
            order_.push_back(best);
        }
        domain_.assign(k, VertexSet(n));
        for (int u = 0; u < k; ++u) {
            const int deg = pattern.degree(u);
            const int nondeg = k - 1 - deg;
            for (int v = 0; v < n; ++v) {
                if (host.degree(v) >= deg && n - 1 - host.degree(v) >= nondeg) {
                    domain_[u].set(v);
                }
            }
        }
        image_.assign(k, -1);
    }

    std::optional<std::vector<int>> run() {
        if (pattern_.order() > host_.order()) {
            return std::nullopt;
        }
        VertexSet used(host_.order());
        if (extend(0, used)) {
            return image_;
        }
        return std::nullopt;
    }

private:
    bool extend(std::size_t depth, VertexSet& used) {
        if (depth == order_.size()) {
            return true;
        }
        const int u = order_[depth];
        VertexSet cand = domain_[u] - used;
        for (std::size_t i = 0; i < depth && cand.any(); ++i) {
            const int w = order_[i];
            const auto& row = host_.neighbors(image_[w]);
            if (pattern_.adjacent(u, w)) {
                cand &= row;
            } else {
                cand -= row;
            }
        }
        for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v)) {
            image_[u] = static_cast<int>(v);
            used.set(v);
            if (extend(depth + 1, used)) {
                return true;
            }
            used.reset(v);
        }
        image_[u] = -1;
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::vector<int> order_;
    std::vector<VertexSet> domain_;
    std::vector<int> image_;
};

}  // namespace

std::optional<std::vector<int>> find_induced_copy(const Graph& host, const Graph& pattern) {
    return InducedCopySearch(host, pattern).run();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
        return false;
    }
    std::vector<int> da(a.order());
    std::vector<int> db(b.order());
    for (int v = 0; v < a.order(); ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    std::ranges::sort(da);
    std::ranges::sort(db);
    if (da != db) {
        return false;
    }
    return find_induced_copy(a, b).has_value();
}

}  // namespace cograph
