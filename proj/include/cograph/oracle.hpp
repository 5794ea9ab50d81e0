#pragma once

#include "cograph/graph.hpp"
#include "cograph/strength.hpp"
#include "cograph/triple.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cograph {

// Brute-force ground truth. Nothing here looks at cograph structure.

struct OracleBudget {
    int max_vertices = 12;
    std::uint64_t max_assignments = 200'000'000;
};

/// The search was aborted; the oracle never guesses.
class OracleBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive backtracking over class assignments with incremental
/// acyclicity (rollback union-find) and independence checks. Classes of one
/// kind are opened in order, which removes their permutation symmetry.
/// `order` fixes the vertex order; empty means descending degree.
bool brute_force_partitionable(const Graph& g, Triple t, const OracleBudget& budget = {},
                               std::vector<int> order = {});

int brute_force_arboricity(const Graph& g, const OracleBudget& budget = {});
int brute_force_chromatic(const Graph& g, const OracleBudget& budget = {});
int brute_force_min_deletions(const Graph& g, int p, int q, const OracleBudget& budget = {});

/// Subset enumeration for the largest K_s and the largest induced
/// complement of sK_2.
StrengthProfile brute_force_strength(const Graph& g, const OracleBudget& budget = {});

/// Checks every 4-subset for an induced P4.
bool brute_force_is_cograph(const Graph& g);

}  // namespace cograph
