#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cactus/multigraph.hpp"

namespace cactus {

enum class ClassMode { Cactus, OddCactus };

std::string to_string(ClassMode mode);

/// Membership verdict; on failure, `witness` holds the vertex set of a
/// block violating the class condition.
struct Verdict {
    bool member = true;
    std::optional<std::vector<VertexId>> witness;

    explicit operator bool() const { return member; }
};

/// A graph is a cactus forest iff every block B satisfies |E(B)| <= |V(B)|,
/// i.e. each block is an isolated vertex, a single edge, or a single cycle.
Verdict is_cactus_forest(const MultiGraph& g);

/// Cactus forest in which every cycle block has odd total edge weight.
Verdict is_odd_cactus_forest(const MultiGraph& g);

Verdict class_check(const MultiGraph& g, ClassMode mode);

/// Admissibility test for keep branches: class_check(g[s | a], mode).
/// s and a must be disjoint vertex subsets of g.
bool guard_with(const MultiGraph& g, const std::set<VertexId>& s,
                const std::set<VertexId>& a, ClassMode mode);

}  // namespace cactus
