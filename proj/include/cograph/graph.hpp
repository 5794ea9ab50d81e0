#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cograph {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<int, int>;

/// Thrown for malformed user input: bad vertex ids, bad files, bad syntax.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1 with one adjacency bitset per
/// vertex. Symmetric and irreflexive; the empty graph (n = 0) is legal.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Duplicate edges collapse; out-of-range endpoints and self-loops throw.
    static Graph from_edges(int n, std::span<const Edge> edges);

    static Graph complete(int n);
    static Graph edgeless(int n);

    int order() const { return n_; }
    std::size_t edge_count() const;

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const VertexSet& neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return static_cast<int>(rows_[v].count()); }

    void add_edge(int u, int v);

    std::vector<Edge> edges() const;

    /// All-ones set over the vertex range.
    VertexSet all_vertices() const;
    VertexSet empty_set() const { return VertexSet(n_); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<VertexSet> rows_;
};

Graph complement(const Graph& g);

/// Vertices of g keep their ids, h's are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

/// Vertices of the result are the members of s in increasing order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph delete_vertex(const Graph& g, int v);

VertexSet make_vertex_set(int n, std::span<const int> vertices);
std::vector<int> to_vector(const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_forest(const Graph& g);
/// Acyclicity of the subgraph induced by s.
bool induces_forest(const Graph& g, const VertexSet& s);

/// Connected components of g[s], each sorted, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);
std::vector<std::vector<int>> components(const Graph& g);

/// Components of the complement of g[s] without materializing it.
std::vector<VertexSet> co_components(const Graph& g, const VertexSet& s);

/// Backtracking search for an induced copy of `pattern` inside `host`.
/// Returns the host vertex assigned to each pattern vertex, or nothing.
/// Exponential in the worst case; meant for graphs of a dozen vertices.
std::optional<std::vector<int>> find_induced_copy(const Graph& host, const Graph& pattern);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace cograph
