#pragma once

#include "cograph/cotree.hpp"
#include "cograph/solver.hpp"

#include <string>
#include <vector>

namespace cograph {

/// The set of admissible budgets in a minimal-obstruction question.
struct TripleGoalSet {
    std::vector<Triple> triples;
};

/// Parses "(1,0,0)", "(2,0,0),(1,1,0)", "2,0,0" or "2,0,0;1,1,0".
TripleGoalSet parse_goal(const std::string& text);
std::string to_string(const TripleGoalSet& goal);

struct VertexWitness {
    int vertex = -1;
    Triple triple;
    /// Labels of G - vertex, whose vertices are those of G except `vertex`
    /// in increasing order.
    PartitionCertificate certificate;
};

struct ObstructionReport {
    Cotree tree;
    std::string graph6;
    std::string dsl;
    TripleGoalSet goal;
    bool is_obstruction = false;
    bool is_minimal = false;
    /// First vertex whose deletion leaves an obstruction, when not minimal.
    int surviving_vertex = -1;
    std::vector<VertexWitness> witnesses;
};

// Named catalogue of the seven minimal obstructions for arboricity 2.
inline constexpr const char* kA2Expressions[] = {
    "K(5)",                             // K_5
    "C(U(3*K(3)))",                     // complement of 3K_3
    "J(U(2*K(3)),I(2))",                // 2K_3 join complement of K_2
    "J(U(2*J(2*I(2))),I(3))",           // 2 C_4 join complement of K_3
    "J(J(2*I(2)),U(K(1),K(2)))",        // C_4 join (K_1 + K_2)
    "J(U(J(2*I(2)),K(3)),I(2))",        // (C_4 + K_3) join complement of K_2
    "C(U(3*K(2),K(1)))",                // complement of 3K_2 + K_1
};

std::vector<Cotree> family_A2();

/// The arboricity-p family: six fixed shapes followed by the complements
/// of (p+1+i)K_2 + (p-1-2i)K_1 for 0 <= i <= (p-1)/2. Requires p >= 2.
std::vector<std::string> family_Ap_expressions(int p);
std::vector<Cotree> family_Ap(int p);

/// Number of integer partitions of m.
long long partition_count(int m);

/// Cograph forests on m vertices with at least one edge: one disjoint union
/// of stars per integer partition of m other than 1+1+...+1.
std::vector<Cotree> star_forests(int m);

/// Complement of (p+1-i)K_{p+1-i} joined with each of the i forests, which
/// must come from star_forests(p+2-i).
Cotree family_Oi(int p, int i, const std::vector<Cotree>& forests);

/// Distinct O_i graphs (deduplicated by canonical code) over all multisets
/// of i forests, in generation order.
std::vector<Cotree> all_Oi(int p, int i);

struct OiCount {
    long long generated = 0;       ///< distinct graphs actually built
    long long multisets = 0;       ///< multisets of size i from the forests
    double formula = 0.0;          ///< (pi(p+2-i) - 1)^i / i!
    bool formula_matches = false;  ///< formula equals `generated`
};

OiCount count_Oi(int p, int i);

/// (G1 + G2) joined with an independent set of size p+2. Both inputs must
/// be minimal obstructions for (p,0,0) with rho = chi = p+1; violations
/// throw InputError.
Cotree build_H(const Cotree& g1, const Cotree& g2, int p);

/// Checks both conditions of a minimal obstruction for `goal`: no goal
/// triple is feasible for G, and every G - v admits some goal triple.
/// Vertex-deleted graphs are re-recognized from scratch.
ObstructionReport is_minimal_obstruction(const Cotree& t, const TripleGoalSet& goal);

bool contains_induced(const Graph& g, const Graph& h);
bool is_family_free(const Graph& g, const std::vector<Graph>& family);

/// All minimal obstructions for `goal` among cographs on 1..n_max vertices,
/// sorted by vertex count then canonical code. `jobs` > 1 spreads the
/// per-cograph checks over OpenMP threads; the result does not depend on it.
std::vector<ObstructionReport> search_minimal_obstructions(int n_max, const TripleGoalSet& goal, int jobs = 1);

/// Height bound 4p+1 counted in nodes and, unless G = K_{2p+1}, join
/// arity at most 2p.
struct StructuralBounds {
    int height_nodes = 0;
    int max_join_children = 0;
    bool is_complete_2p1 = false;
    bool height_ok = false;
    bool join_ok = false;
};

StructuralBounds structural_bounds(const Cotree& t, int p);

/// For a disconnected minimal obstruction for (0,q,r): each component G_i
/// must be a minimal obstruction for (0,q,r_i) with r_i = mindel(G_i) - 1,
/// and |I| - 1 + sum r_i = r.
struct Decomposition {
    std::vector<Cotree> components;
    std::vector<int> component_r;
    bool components_minimal = false;
    bool sum_matches = false;
};

Decomposition decompose_disconnected(const Cotree& t, int q, int r);

}  // namespace cograph
