#pragma once

#include "cograph/graph.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cograph {

enum class NodeKind : std::uint8_t { leaf, disjoint_union, join };

struct CotreeNode {
    NodeKind kind = NodeKind::leaf;
    int vertex = -1;  ///< leaves only
    std::vector<int> children;
};

/// Normalized cotree of a cograph.
///
/// Nodes are stored in post-order (every child precedes its parent, the root
/// is last), no internal node has a child of its own kind, and every internal
/// node has at least two children. Leaf vertex ids form a bijection with
/// 0..n-1. A default-constructed cotree is the empty cograph.
class Cotree {
public:
    Cotree() = default;

    static Cotree leaf(int vertex = 0);
    static Cotree complete(int k);
    static Cotree edgeless(int k);

    /// Union or join of `parts`; vertices are renumbered left operand first.
    /// Empty parts are skipped and nested same-kind nodes are flattened.
    static Cotree combine(NodeKind kind, const std::vector<Cotree>& parts);

    /// Normalizes an arbitrary tree: collapses unary nodes, flattens
    /// same-kind nesting, reorders into post-order. Throws InputError on
    /// malformed input (cycles, childless internal nodes, bad leaf ids).
    static Cotree from_nodes(const std::vector<CotreeNode>& nodes, int root);

    bool empty() const { return nodes_.empty(); }
    int vertex_count() const { return vertex_count_; }
    int root() const { return static_cast<int>(nodes_.size()) - 1; }
    const std::vector<CotreeNode>& nodes() const { return nodes_; }
    const CotreeNode& node(int i) const { return nodes_[i]; }
    std::size_t size() const { return nodes_.size(); }

    /// Leaf vertex ids in the subtree of `node`, in post-order.
    std::vector<int> leaves_under(int node) const;
    /// Index of the first node of the contiguous post-order range of `node`'s subtree.
    int subtree_begin(int node) const;

    friend bool operator==(const Cotree&, const Cotree&);

private:
    std::vector<CotreeNode> nodes_;
    int vertex_count_ = 0;
};

Cotree complement(const Cotree& t);
Cotree disjoint_union(const std::vector<Cotree>& parts);
Cotree join(const std::vector<Cotree>& parts);
/// k disjoint copies.
Cotree repeat(int k, const Cotree& t);

Graph realize(const Cotree& t);

/// Four vertices a-b-c-d inducing a path, in path order.
struct P4Witness {
    std::array<int, 4> path{};
};

using Recognition = std::variant<Cotree, P4Witness>;

/// Cotree of g with leaf ids equal to the vertices of g, or an induced P4.
Recognition recognize(const Graph& g);

/// Syntax error in a cotree expression; `position` is a byte offset.
class ParseError : public InputError {
public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses the expression language
///   expr := K(int) | I(int) | U(expr,...) | J(expr,...) | int*expr | C(expr)
/// Inside an argument list `k*e` contributes k copies of e as separate
/// arguments; elsewhere it denotes k disjoint copies. C complements.
Cotree parse_expr(std::string_view text);

/// Inverse of parse_expr up to leaf renumbering.
std::string to_expr(const Cotree& t);

/// Longest root-to-leaf path counted in edges (a single leaf has height 0).
int height(const Cotree& t);
int max_join_children(const Cotree& t);

struct CanonicalCode {
    std::string bytes;
    std::string hex() const;
    auto operator<=>(const CanonicalCode&) const = default;
};

/// Equal codes if and only if the realized graphs are isomorphic.
CanonicalCode canonical_code(const Cotree& t);

/// One cotree per isomorphism class of cographs on n vertices (n >= 1),
/// in a fixed deterministic order. Practical up to n of about 14.
std::vector<Cotree> enumerate_cographs(int n);
void for_each_cograph(int n, const std::function<void(const Cotree&)>& visit);

struct RandomCotreeShape {
    bool balanced = false;
    int max_arity = 4;
};

/// Random cotree with the given number of leaves. Balanced trees split each
/// node's leaves as evenly as possible; leaf ids are shuffled.
Cotree random_cotree(int leaves, std::mt19937_64& rng, RandomCotreeShape shape = {});

/// Same cotree with the children of every internal node randomly permuted.
Cotree shuffle_children(const Cotree& t, std::mt19937_64& rng);

}  // namespace cograph
