#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "cactus/generator.hpp"
#include "cactus/multigraph.hpp"
#include "test_support.hpp"

using namespace cactus;

namespace {

MultiGraph path(int n) {
    MultiGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

MultiGraph cycle(int n) {
    MultiGraph g = path(n);
    g.add_edge(n, 1);
    return g;
}

MultiGraph obstruction_d() {
    MultiGraph g;
    VertexId a = g.add_vertex(), b = g.add_vertex();
    g.add_edge(a, b);
    g.add_edge(a, b);
    g.add_edge(a, b);
    return g;
}

}  // namespace

TEST_CASE("vertex and edge insertion") {
    MultiGraph g;
    VertexId a = g.add_vertex();
    VertexId b = g.add_vertex();
    CHECK(a == 1);
    CHECK(b == 2);
    g.add_edge(a, b, 1);
    CHECK(g.multiplicity(a, b) == 1);
    g.add_edge(a, b, 1);
    CHECK(g.multiplicity(a, b) == 2);

    CHECK_THROWS_AS(g.add_edge(a, a), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(a, 99), std::invalid_argument);
    CHECK_THROWS_AS(g.add_vertex(a), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(a, b, 2), std::invalid_argument);
}

TEST_CASE("delete_vertices keeps labels and drops incident edges") {
    MultiGraph tri = cycle(3);
    MultiGraph rest = tri.delete_vertices({1});
    CHECK(rest.vertices() == std::vector<VertexId>{2, 3});
    CHECK(rest.edge_count() == 1);
    CHECK(rest.multiplicity(2, 3) == 1);

    CHECK(tri.delete_vertices({}) == tri);
    CHECK_THROWS_AS(tri.delete_vertices({9}), std::invalid_argument);

    MultiGraph d = obstruction_d();
    MultiGraph lone = d.delete_vertices({1});
    CHECK(lone.vertex_count() == 1);
    CHECK(lone.edge_count() == 0);
}

TEST_CASE("delete_vertices composes over disjoint sets") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        MultiGraph g = gen_random_multigraph(9, 12, 2, false, seed);
        std::set<VertexId> x{1, 4}, y{7, 9};
        std::set<VertexId> both{1, 4, 7, 9};
        CHECK(g.delete_vertices(x).delete_vertices(y) == g.delete_vertices(both));
    }
}

TEST_CASE("degree counts parallel edges, neighbors do not") {
    MultiGraph g;
    VertexId u = g.add_vertex(), v = g.add_vertex();
    g.add_edge(u, v);
    g.add_edge(u, v);
    CHECK(g.degree(u) == 2);
    CHECK(g.neighbors(u) == std::vector<VertexId>{v});

    VertexId iso = g.add_vertex();
    CHECK(g.degree(iso) == 0);
    CHECK(g.neighbors(iso).empty());

    MultiGraph p = path(3);
    CHECK(p.degree(2) == 2);
    CHECK(p.neighbors(2) == std::vector<VertexId>{1, 3});
    CHECK_THROWS_AS(p.degree(42), std::invalid_argument);
}

TEST_CASE("connected components") {
    MultiGraph g = cycle(3);
    g.add_vertex();
    CHECK(g.component_count() == 2);
    CHECK(g.connected_components().size() == 2);

    CHECK(MultiGraph{}.component_count() == 0);
    CHECK(path(5).component_count() == 1);
}

TEST_CASE("bridges and cut vertices on small shapes") {
    MultiGraph p = path(3);
    CHECK(p.bridges().size() == 2);
    CHECK(p.cut_vertices() == std::vector<VertexId>{2});

    MultiGraph c4 = cycle(4);
    CHECK(c4.bridges().empty());
    CHECK(c4.cut_vertices().empty());

    MultiGraph pair;
    pair.add_vertex();
    pair.add_vertex();
    pair.add_edge(1, 2);
    pair.add_edge(1, 2);
    CHECK(pair.bridges().empty());  // the parallel pair is a 2-cycle
}

TEST_CASE("bridges and cut vertices match their definitions") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        int n = 2 + static_cast<int>(seed % 9);
        int m = static_cast<int>(seed % 13);
        m = std::min<long long>(m, static_cast<long long>(n) * (n - 1));
        MultiGraph g = gen_random_multigraph(n, m, 2, false, seed * 77 + 5);
        CAPTURE(seed);
        CHECK(g.bridges().size() == testsupport::naive_bridge_count(g));
        CHECK(g.cut_vertices() == testsupport::naive_cut_vertices(g));
        CHECK(g.component_count() == testsupport::naive_component_count(g));
    }
}

TEST_CASE("component plus bridge count never exceeds the vertex count") {
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        int n = 1 + static_cast<int>(seed % 14);
        int m = static_cast<int>((seed * 31) % (2 * n));
        m = std::min<long long>(m, 3LL * n * (n - 1) / 2);
        MultiGraph g = gen_random_multigraph(n, m, 3, seed % 2 == 0, seed);
        CHECK(g.component_count() + g.bridges().size() <= g.vertex_count());
        ++checked;
    }
    CHECK(checked >= 1000);
}

TEST_CASE("block decomposition partitions the edges") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        int n = 1 + static_cast<int>(seed % 10);
        int m = static_cast<int>((seed * 13) % 15);
        m = std::min<long long>(m, 2LL * n * (n - 1) / 2);
        MultiGraph g = gen_random_multigraph(n, m, 2, false, seed + 1000);
        BlockDecomposition dec = g.block_decomposition();

        std::size_t edge_total = 0;
        std::set<EdgeId> seen;
        for (const Block& b : dec.blocks) {
            edge_total += b.edges.size();
            for (EdgeId id : b.edges) CHECK(seen.insert(id).second);
        }
        CHECK(edge_total == g.edge_count());

        // Non-cut vertices lie in exactly one block.
        std::map<VertexId, int> block_count;
        for (const Block& b : dec.blocks)
            for (VertexId v : b.vertices) block_count[v]++;
        for (VertexId v : g.vertices()) {
            if (!dec.is_cut_vertex(v)) CHECK(block_count[v] == 1);
            else CHECK(block_count[v] >= 2);
        }

        // Bridges are exactly the single-edge blocks.
        std::set<EdgeId> single_edge_blocks;
        for (const Block& b : dec.blocks)
            if (b.edges.size() == 1) single_edge_blocks.insert(b.edges.front());
        std::set<EdgeId> bridges(dec.bridges.begin(), dec.bridges.end());
        CHECK(bridges == single_edge_blocks);
    }
}

TEST_CASE("leaf blocks of a cycle with a pendant edge") {
    MultiGraph g = cycle(5);
    VertexId p = g.add_vertex();
    g.add_edge(1, p);

    std::vector<Block> leaves = leaf_blocks(g);
    REQUIRE(leaves.size() == 2);
    CHECK(leaves[0].vertices == std::vector<VertexId>{1, 2, 3, 4, 5});
    CHECK(leaves[1].vertices == std::vector<VertexId>{1, 6});

    auto triple = consecutive_noncut_triple(g, leaves[0].vertices);
    REQUIRE(triple.has_value());
    for (VertexId v : *triple) CHECK(v != 1);  // 1 is the cut vertex
}

TEST_CASE("consecutive triple on a triangle starts at the lowest label") {
    MultiGraph tri = cycle(3);
    auto triple = consecutive_noncut_triple(tri, {1, 2, 3});
    REQUIRE(triple.has_value());
    CHECK(*triple == std::array<VertexId, 3>{1, 2, 3});
}

TEST_CASE("consecutive triple skips the cut vertex of a C4") {
    MultiGraph g = cycle(4);  // cycle order 1-2-3-4
    VertexId p = g.add_vertex();
    g.add_edge(2, p);  // 2 becomes the cut vertex

    auto triple = consecutive_noncut_triple(g, {1, 2, 3, 4});
    REQUIRE(triple.has_value());
    CHECK(*triple == std::array<VertexId, 3>{3, 4, 1});
}

TEST_CASE("consecutive triple rejects non-blocks") {
    MultiGraph g = cycle(4);
    CHECK_THROWS_AS(consecutive_noncut_triple(g, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(consecutive_noncut_triple(g, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("triple is empty when every window hits a cut vertex") {
    MultiGraph tri = cycle(3);
    VertexId p = tri.add_vertex();
    tri.add_edge(1, p);
    CHECK_FALSE(consecutive_noncut_triple(tri, {1, 2, 3}).has_value());
}
