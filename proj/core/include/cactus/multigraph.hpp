#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace cactus {

using VertexId = int;
using EdgeId = int;

/// Undirected edge with a binary weight. Endpoints are normalized so u < v.
/// Parallel edges are distinct objects with distinct ids.
struct Edge {
    EdgeId id = -1;
    VertexId u = -1;
    VertexId v = -1;
    int weight = 1;

    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool touches(VertexId x) const { return x == u || x == v; }
    bool operator==(const Edge&) const = default;
};

/// A block: maximal vertex set inducing a connected subgraph with no cut
/// vertex. Isolated vertices form single-vertex blocks with no edges.
struct Block {
    std::vector<VertexId> vertices;  // sorted ascending
    std::vector<EdgeId> edges;       // sorted ascending

    bool is_isolated_vertex() const { return edges.empty() && vertices.size() == 1; }
    /// True for blocks whose induced subgraph is a single cycle
    /// (includes the two-vertex parallel pair).
    bool is_cycle() const { return edges.size() >= 2 && edges.size() == vertices.size(); }
};

struct BlockDecomposition {
    std::vector<Block> blocks;           // sorted by vertex list, lexicographic
    std::vector<VertexId> cut_vertices;  // sorted
    std::vector<EdgeId> bridges;         // sorted; exactly the single-edge blocks

    bool is_cut_vertex(VertexId v) const;
    std::size_t cut_vertex_count_in(const Block& b) const;
    /// Indices of blocks containing at most one cut vertex.
    std::vector<std::size_t> leaf_block_indices() const;
};

/// Multigraph without self-loops. Vertex labels are opaque non-negative
/// integers, stable under subgraph operations; edge ids likewise.
class MultiGraph {
public:
    MultiGraph() = default;

    /// Adds a vertex with the smallest label above the current maximum
    /// (labels start at 1) and returns it.
    VertexId add_vertex();
    /// Adds a vertex with an explicit label. Rejects duplicates and
    /// negative labels.
    void add_vertex(VertexId label);
    /// Adds an edge; weight must be 0 or 1. Rejects self-loops and
    /// missing endpoints.
    EdgeId add_edge(VertexId u, VertexId v, int weight = 1);

    bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return adj_.empty(); }

    std::vector<VertexId> vertices() const;  // ascending
    std::vector<Edge> edges() const;         // ascending id
    const Edge& edge(EdgeId id) const;
    const std::vector<EdgeId>& incident_edges(VertexId v) const;  // ascending id

    std::size_t multiplicity(VertexId u, VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;  // sorted, distinct
    std::size_t degree(VertexId v) const;               // counts parallel edges

    /// Induced subgraph on V minus xs; labels and edge ids preserved.
    MultiGraph delete_vertices(const std::set<VertexId>& xs) const;
    /// Induced subgraph on keep; labels and edge ids preserved.
    MultiGraph induced(const std::set<VertexId>& keep) const;

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest label. The empty graph has zero components.
    std::vector<std::vector<VertexId>> connected_components() const;
    std::size_t component_count() const;

    std::vector<EdgeId> bridges() const;
    std::vector<VertexId> cut_vertices() const;
    BlockDecomposition block_decomposition() const;

    /// Structural equality: same vertex set and the same edges
    /// (id, endpoints, weight).
    bool operator==(const MultiGraph& rhs) const {
        return adj_ == rhs.adj_ && edges_ == rhs.edges_;
    }

private:
    std::map<VertexId, std::vector<EdgeId>> adj_;  // incident edge ids, ascending
    std::map<EdgeId, Edge> edges_;
    EdgeId next_edge_id_ = 0;
};

/// Blocks of g with at most one cut vertex.
std::vector<Block> leaf_blocks(const MultiGraph& g);

/// Three consecutive vertices of the cycle block `block_vertices`, none of
/// them a cut vertex of g, scanning windows in cycle order from the lowest
/// label; empty if no such window exists. Rejects vertex sets that are not
/// a block of g and blocks that are not cycles on >= 3 vertices.
std::optional<std::array<VertexId, 3>> consecutive_noncut_triple(
    const MultiGraph& g, const std::vector<VertexId>& block_vertices);

}  // namespace cactus
