#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cactus/multigraph.hpp"
#include "cactus/recognizer.hpp"

namespace cactus {

/// Instance-generation parameters. Identical configuration produces an
/// identical graph: randomness comes from std::mt19937_64 seeded with
/// `seed`, and every bounded draw uses rejection sampling, so output is
/// reproducible across platforms.
struct GenConfig {
    std::uint64_t seed = 0;
    int n = 10;
    ClassMode mode = ClassMode::Cactus;
    // Cycle lengths used when growing class graphs; 0 selects the mode
    // default ([2,6] unweighted, odd values in [3,7] weighted).
    int cycle_min = 0;
    int cycle_max = 0;
    double pendant_prob = 0.35;
    // Attachment degree range for planted noise vertices.
    int plant_degree_min = 3;
    int plant_degree_max = 6;
};

/// Grows a connected member of the target class on cfg.n vertices
/// (labels 1..n) by repeatedly attaching a pendant edge or a cycle at a
/// uniformly chosen existing vertex. All edges carry weight 1.
MultiGraph gen_class_graph(const GenConfig& cfg);

/// Adds r noise vertices to `base`, each joined by plant_degree_min..max
/// edges to uniformly chosen existing vertices (random bit weights in
/// OddCactus mode). Deleting the returned vertex set restores `base`, so
/// the optimum deletion size is at most r.
std::pair<MultiGraph, std::vector<VertexId>> plant(const MultiGraph& base, int r,
                                                   const GenConfig& cfg);

/// m edges drawn uniformly over unordered distinct vertex pairs of
/// {1..n}, rejecting pairs already at max_mult; uniform bit weights when
/// weighted, else weight 1. Rejects infeasible (n, m, max_mult).
MultiGraph gen_random_multigraph(int n, int m, int max_mult, bool weighted,
                                 std::uint64_t seed);

}  // namespace cactus
