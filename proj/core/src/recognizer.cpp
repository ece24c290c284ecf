#include "cactus/recognizer.hpp"

#include <stdexcept>

namespace cactus {

std::string to_string(ClassMode mode) {
    return mode == ClassMode::Cactus ? "cactus" : "odd-cactus";
}

Verdict is_cactus_forest(const MultiGraph& g) {
    BlockDecomposition dec = g.block_decomposition();
    for (const Block& b : dec.blocks)
        if (b.edges.size() > b.vertices.size()) return {false, b.vertices};
    return {true, std::nullopt};
}

Verdict is_odd_cactus_forest(const MultiGraph& g) {
    BlockDecomposition dec = g.block_decomposition();
    for (const Block& b : dec.blocks) {
        if (b.edges.size() > b.vertices.size()) return {false, b.vertices};
        if (b.is_cycle()) {
            int parity = 0;
            for (EdgeId id : b.edges) parity ^= g.edge(id).weight & 1;
            if (parity == 0) return {false, b.vertices};
        }
    }
    return {true, std::nullopt};
}

Verdict class_check(const MultiGraph& g, ClassMode mode) {
    return mode == ClassMode::Cactus ? is_cactus_forest(g) : is_odd_cactus_forest(g);
}

bool guard_with(const MultiGraph& g, const std::set<VertexId>& s,
                const std::set<VertexId>& a, ClassMode mode) {
    std::set<VertexId> keep = s;
    for (VertexId v : a)
        if (!keep.insert(v).second)
            throw std::invalid_argument("guard sets must be disjoint");
    return class_check(g.induced(keep), mode).member;
}

}  // namespace cactus
