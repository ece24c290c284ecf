#pragma once

#include <optional>
#include <utility>

#include "cactus/disjoint_solver.hpp"
#include "cactus/multigraph.hpp"
#include "cactus/recognizer.hpp"

namespace cactus {

/// Decides whether g has a deletion set of size at most k whose removal
/// leaves the target class, and returns one if so. Vertices are processed
/// in ascending label order; whenever the carried solution reaches size
/// k + 1 it is recompressed through the disjoint solver, trying every
/// split of the oversized set in ascending subset size.
std::optional<Solution> solve(const MultiGraph& g, int k, ClassMode mode,
                              const SolveOptions& opts = {},
                              SearchStats* stats = nullptr);

/// Sweeps k = 0, 1, ... up to k_cap (default: the vertex count) and
/// returns the first feasible budget with its solution; nullopt when the
/// cap is exhausted.
std::optional<std::pair<int, Solution>> find_min(const MultiGraph& g, ClassMode mode,
                                                 std::optional<int> k_cap = std::nullopt,
                                                 const SolveOptions& opts = {},
                                                 SearchStats* stats = nullptr);

}  // namespace cactus
