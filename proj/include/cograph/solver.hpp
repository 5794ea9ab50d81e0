#pragma once

#include "cograph/cotree.hpp"
#include "cograph/dp_kernel.hpp"
#include "cograph/triple.hpp"

#include <stdexcept>
#include <vector>

namespace cograph {

/// Raised when an operation that needs a cograph receives a graph with an
/// induced P4.
class NotCographError : public InputError {
public:
    explicit NotCographError(const P4Witness& witness);
    const P4Witness& witness() const { return witness_; }

private:
    P4Witness witness_;
};

/// Raised when a certificate is requested for an infeasible triple.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Cotree require_cograph(const Graph& g);

enum class Execution { serial, parallel };

/// Minimum-deletion table over the region needed for queries inside `box`.
DeletionTable deletion_table(const Cotree& t, Box box, Execution exec = Execution::parallel);

/// Exact set of feasible triples inside `box`.
TripleSet feasible_set(const Cotree& t, Box box, Execution exec = Execution::parallel);

bool is_partitionable(const Cotree& t, Triple triple);
bool is_partitionable(const Graph& g, Triple triple);

struct VertexLabel {
    enum class Kind : std::uint8_t { forest, independent, deleted };
    Kind kind = Kind::deleted;
    int index = 0;  ///< 1-based class index; 0 for deleted vertices

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// One label per vertex witnessing a (p,q,r)-partition.
struct PartitionCertificate {
    std::vector<VertexLabel> labels;
};

/// Deterministic certificate: the deletion set has minimum size, stars
/// crossing a join take the smallest available vertex ids as centres.
PartitionCertificate extract_certificate(const Cotree& t, Triple triple);

/// Validates forest classes, independent classes and the deletion budget.
/// Throws InputError when the label count differs from the order of g or a
/// class index is below 1; an index above p or q just fails the check.
bool check_partition(const Graph& g, const PartitionCertificate& cert, Triple triple);

/// rho(G): least p with (p,0,0) feasible.
int vertex_arboricity(const Cotree& t);
/// chi(G): least q with (0,q,0) feasible.
int chromatic_number(const Cotree& t);
/// Least r with (p,q,r) feasible. (0,1): vertex cover, (0,2): odd cycle
/// transversal, (1,0): feedback vertex set.
int min_deletions(const Cotree& t, int p, int q);
/// q(G): least q with (1,q,0) feasible.
int min_q_feedback(const Cotree& t);

int vertex_arboricity(const Graph& g);
int chromatic_number(const Graph& g);
int min_deletions(const Graph& g, int p, int q);
int min_q_feedback(const Graph& g);

}  // namespace cograph
