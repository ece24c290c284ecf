#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cactus/multigraph.hpp"
#include "cactus/recognizer.hpp"

namespace cactus {

/// Result of brute-force minimization. `min_size` is empty when every
/// deletion set up to the cardinality cap fails.
struct OracleResult {
    std::optional<int> min_size;
    std::vector<VertexId> witness;  // sorted; empty when infeasible at cap
};

/// Exhaustive reference solver: enumerates vertex subsets by ascending
/// cardinality, then ascending lexicographic label order, and returns the
/// first one whose removal leaves the target class. Deliberately free of
/// pruning so it stays obviously correct. Graphs above `vertex_guard`
/// vertices are rejected; raise the guard explicitly for larger runs.
OracleResult min_deletion_set(const MultiGraph& g, ClassMode mode,
                              std::optional<int> k_cap = std::nullopt,
                              std::size_t vertex_guard = 20);

}  // namespace cactus
