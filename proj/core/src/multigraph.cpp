#include "cactus/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace cactus {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

bool BlockDecomposition::is_cut_vertex(VertexId v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::size_t BlockDecomposition::cut_vertex_count_in(const Block& b) const {
    std::size_t n = 0;
    for (VertexId v : b.vertices)
        if (is_cut_vertex(v)) ++n;
    return n;
}

std::vector<std::size_t> BlockDecomposition::leaf_block_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (cut_vertex_count_in(blocks[i]) <= 1) out.push_back(i);
    return out;
}

VertexId MultiGraph::add_vertex() {
    VertexId label = adj_.empty() ? 1 : adj_.rbegin()->first + 1;
    adj_.emplace(label, std::vector<EdgeId>{});
    return label;
}

void MultiGraph::add_vertex(VertexId label) {
    if (label < 0) fail("vertex labels must be non-negative");
    if (!adj_.emplace(label, std::vector<EdgeId>{}).second)
        fail("vertex " + std::to_string(label) + " already present");
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v, int weight) {
    if (u == v) fail("self-loops are not allowed");
    if (!has_vertex(u)) fail("unknown vertex " + std::to_string(u));
    if (!has_vertex(v)) fail("unknown vertex " + std::to_string(v));
    if (weight != 0 && weight != 1) fail("edge weight must be 0 or 1");
    EdgeId id = next_edge_id_++;
    edges_.emplace(id, Edge{id, std::min(u, v), std::max(u, v), weight});
    adj_[u].push_back(id);
    adj_[v].push_back(id);
    return id;
}

std::vector<VertexId> MultiGraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
}

std::vector<Edge> MultiGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& [_, e] : edges_) out.push_back(e);
    return out;
}

const Edge& MultiGraph::edge(EdgeId id) const {
    auto it = edges_.find(id);
    if (it == edges_.end()) fail("unknown edge id " + std::to_string(id));
    return it->second;
}

const std::vector<EdgeId>& MultiGraph::incident_edges(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) fail("unknown vertex " + std::to_string(v));
    return it->second;
}

std::size_t MultiGraph::multiplicity(VertexId u, VertexId v) const {
    if (!has_vertex(v)) fail("unknown vertex " + std::to_string(v));
    std::size_t n = 0;
    for (EdgeId id : incident_edges(u))
        if (edges_.at(id).other(u) == v) ++n;
    return n;
}

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (EdgeId id : incident_edges(v)) out.push_back(edges_.at(id).other(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t MultiGraph::degree(VertexId v) const { return incident_edges(v).size(); }

MultiGraph MultiGraph::delete_vertices(const std::set<VertexId>& xs) const {
    for (VertexId v : xs)
        if (!has_vertex(v)) fail("unknown vertex " + std::to_string(v));
    MultiGraph out;
    out.next_edge_id_ = next_edge_id_;
    for (const auto& [v, _] : adj_)
        if (!xs.count(v)) out.adj_.emplace(v, std::vector<EdgeId>{});
    for (const auto& [id, e] : edges_) {
        if (xs.count(e.u) || xs.count(e.v)) continue;
        out.edges_.emplace(id, e);
        out.adj_[e.u].push_back(id);
        out.adj_[e.v].push_back(id);
    }
    return out;
}

MultiGraph MultiGraph::induced(const std::set<VertexId>& keep) const {
    std::set<VertexId> drop;
    for (VertexId v : keep)
        if (!has_vertex(v)) fail("unknown vertex " + std::to_string(v));
    for (const auto& [v, _] : adj_)
        if (!keep.count(v)) drop.insert(v);
    return delete_vertices(drop);
}

std::vector<std::vector<VertexId>> MultiGraph::connected_components() const {
    std::vector<std::vector<VertexId>> comps;
    std::set<VertexId> seen;
    for (const auto& [start, _] : adj_) {
        if (seen.count(start)) continue;
        std::vector<VertexId> comp{start};
        seen.insert(start);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (EdgeId id : adj_.at(comp[i])) {
                VertexId w = edges_.at(id).other(comp[i]);
                if (seen.insert(w).second) comp.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::size_t MultiGraph::component_count() const {
    std::size_t n = 0;
    std::set<VertexId> seen;
    for (const auto& [start, _] : adj_) {
        if (seen.count(start)) continue;
        ++n;
        std::vector<VertexId> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            VertexId v = queue.back();
            queue.pop_back();
            for (EdgeId id : adj_.at(v)) {
                VertexId w = edges_.at(id).other(v);
                if (seen.insert(w).second) queue.push_back(w);
            }
        }
    }
    return n;
}

std::vector<EdgeId> MultiGraph::bridges() const { return block_decomposition().bridges; }

std::vector<VertexId> MultiGraph::cut_vertices() const { return block_decomposition().cut_vertices; }

BlockDecomposition MultiGraph::block_decomposition() const {
    const std::vector<VertexId> vs = vertices();
    const std::size_t n = vs.size();
    auto index_of = [&](VertexId v) {
        return static_cast<std::size_t>(
            std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> cut(n, 0);
    std::vector<EdgeId> edge_stack;
    BlockDecomposition dec;
    int timer = 0;

    struct Frame {
        std::size_t v;
        EdgeId in_edge;       // tree edge used to enter v, -1 at a root
        std::size_t edge_pos; // scan position in the incidence list
    };
    std::vector<Frame> frames;

    auto emit_block = [&](std::vector<EdgeId> block_edges) {
        Block b;
        std::sort(block_edges.begin(), block_edges.end());
        for (EdgeId id : block_edges) {
            const Edge& e = edges_.at(id);
            b.vertices.push_back(e.u);
            b.vertices.push_back(e.v);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        b.edges = std::move(block_edges);
        dec.blocks.push_back(std::move(b));
    };

    for (std::size_t r = 0; r < n; ++r) {
        if (disc[r] != -1) continue;
        if (adj_.at(vs[r]).empty()) {
            disc[r] = timer++;
            dec.blocks.push_back(Block{{vs[r]}, {}});
            continue;
        }
        disc[r] = low[r] = timer++;
        frames.push_back({r, -1, 0});
        int root_children = 0;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const std::vector<EdgeId>& inc = adj_.at(vs[f.v]);
            if (f.edge_pos < inc.size()) {
                EdgeId eid = inc[f.edge_pos++];
                if (eid == f.in_edge) continue;  // the tree edge itself; twins count
                const Edge& e = edges_.at(eid);
                std::size_t w = index_of(e.other(vs[f.v]));
                if (disc[w] == -1) {
                    edge_stack.push_back(eid);
                    disc[w] = low[w] = timer++;
                    if (f.in_edge == -1) ++root_children;
                    frames.push_back({w, eid, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(eid);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                // disc[w] > disc[v]: already recorded from w's side
            } else {
                std::size_t v = f.v;
                EdgeId in = f.in_edge;
                frames.pop_back();
                if (in == -1) continue;
                std::size_t u = index_of(edges_.at(in).other(vs[v]));
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    std::vector<EdgeId> block_edges;
                    EdgeId popped;
                    do {
                        popped = edge_stack.back();
                        edge_stack.pop_back();
                        block_edges.push_back(popped);
                    } while (popped != in);
                    emit_block(std::move(block_edges));
                    if (frames.back().in_edge != -1) cut[u] = 1;  // non-root separator
                }
            }
        }
        if (root_children >= 2) cut[r] = 1;
    }

    for (std::size_t i = 0; i < n; ++i)
        if (cut[i]) dec.cut_vertices.push_back(vs[i]);
    std::sort(dec.blocks.begin(), dec.blocks.end(),
              [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
    for (const Block& b : dec.blocks)
        if (b.edges.size() == 1) dec.bridges.push_back(b.edges.front());
    std::sort(dec.bridges.begin(), dec.bridges.end());
    return dec;
}

std::vector<Block> leaf_blocks(const MultiGraph& g) {
    BlockDecomposition dec = g.block_decomposition();
    std::vector<Block> out;
    for (std::size_t i : dec.leaf_block_indices()) out.push_back(dec.blocks[i]);
    return out;
}

std::optional<std::array<VertexId, 3>> consecutive_noncut_triple(
    const MultiGraph& g, const std::vector<VertexId>& block_vertices) {
    std::vector<VertexId> want = block_vertices;
    std::sort(want.begin(), want.end());

    BlockDecomposition dec = g.block_decomposition();
    const Block* block = nullptr;
    for (const Block& b : dec.blocks)
        if (b.vertices == want) {
            block = &b;
            break;
        }
    if (!block) fail("vertex set is not a block of the graph");
    if (block->vertices.size() < 3) fail("triple query requires a block on >= 3 vertices");

    // Walk the cycle; a >=3-vertex block that admits a consecutive scan
    // must be a single cycle (two incident block edges per vertex).
    std::map<VertexId, std::array<EdgeId, 2>> local;
    for (VertexId v : block->vertices) local[v] = {-1, -1};
    for (EdgeId id : block->edges) {
        const Edge& e = g.edge(id);
        for (VertexId x : {e.u, e.v}) {
            auto& slots = local[x];
            if (slots[0] == -1)
                slots[0] = id;
            else if (slots[1] == -1)
                slots[1] = id;
            else
                fail("block is not a cycle");
        }
    }
    for (const auto& [v, slots] : local)
        if (slots[1] == -1) fail("block is not a cycle");

    VertexId start = block->vertices.front();
    const auto& first = local[start];
    VertexId n0 = g.edge(first[0]).other(start);
    VertexId n1 = g.edge(first[1]).other(start);
    EdgeId via = (n0 <= n1) ? first[0] : first[1];

    std::vector<VertexId> order{start};
    VertexId cur = g.edge(via).other(start);
    while (cur != start) {
        order.push_back(cur);
        const auto& slots = local[cur];
        EdgeId next = (slots[0] == via) ? slots[1] : slots[0];
        via = next;
        cur = g.edge(next).other(cur);
    }
    if (order.size() != block->vertices.size()) fail("block is not a cycle");

    const std::size_t t = order.size();
    for (std::size_t i = 0; i < t; ++i) {
        std::array<VertexId, 3> w{order[i], order[(i + 1) % t], order[(i + 2) % t]};
        bool ok = true;
        for (VertexId v : w)
            if (dec.is_cut_vertex(v)) ok = false;
        if (ok) return w;
    }
    return std::nullopt;
}

}  // namespace cactus
