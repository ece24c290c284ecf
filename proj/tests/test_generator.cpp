#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "cactus/generator.hpp"
#include "cactus/oracle.hpp"
#include "cactus/recognizer.hpp"

using namespace cactus;

TEST_CASE("grown graphs are in their class") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n = 1 + static_cast<int>(seed % 30);
        cfg.mode = ClassMode::Cactus;
        MultiGraph g = gen_class_graph(cfg);
        CHECK(g.vertex_count() == static_cast<std::size_t>(cfg.n));
        CHECK(is_cactus_forest(g).member);

        cfg.mode = ClassMode::OddCactus;
        MultiGraph h = gen_class_graph(cfg);
        CHECK(h.vertex_count() == static_cast<std::size_t>(cfg.n));
        CHECK(is_odd_cactus_forest(h).member);
    }
}

TEST_CASE("identical configuration, identical graph") {
    GenConfig cfg;
    cfg.seed = 1;
    cfg.n = 10;
    CHECK(gen_class_graph(cfg) == gen_class_graph(cfg));

    auto a = plant(gen_class_graph(cfg), 3, cfg);
    auto b = plant(gen_class_graph(cfg), 3, cfg);
    CHECK(a.first == b.first);
    CHECK(a.second == b.second);

    CHECK(gen_random_multigraph(6, 9, 2, true, 42) == gen_random_multigraph(6, 9, 2, true, 42));
}

TEST_CASE("planting keeps the base restorable") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n = 9;
        cfg.mode = seed % 2 == 0 ? ClassMode::Cactus : ClassMode::OddCactus;
        MultiGraph base = gen_class_graph(cfg);
        auto [g, planted] = plant(base, 3, cfg);

        CHECK(planted.size() == 3);
        std::set<VertexId> xs(planted.begin(), planted.end());
        CHECK(g.delete_vertices(xs) == base);
        CHECK(class_check(g.delete_vertices(xs), cfg.mode).member);

        OracleResult r = min_deletion_set(g, cfg.mode);
        REQUIRE(r.min_size.has_value());
        CHECK(*r.min_size <= 3);
    }
}

TEST_CASE("random multigraphs respect their contracts") {
    MultiGraph empty_edges = gen_random_multigraph(5, 0, 1, false, 0);
    CHECK(empty_edges.vertex_count() == 5);
    CHECK(empty_edges.edge_count() == 0);
    CHECK(empty_edges.component_count() == 5);

    MultiGraph d = gen_random_multigraph(2, 3, 3, false, 1);
    CHECK(d.multiplicity(1, 2) == 3);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        MultiGraph g = gen_random_multigraph(7, 12, 2, true, seed);
        CHECK(g.edge_count() == 12);
        for (const Edge& e : g.edges()) {
            CHECK(e.u != e.v);
            CHECK((e.weight == 0 || e.weight == 1));
            CHECK(g.multiplicity(e.u, e.v) <= 2);
        }
    }

    CHECK_THROWS_AS(gen_random_multigraph(3, 10, 1, false, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_multigraph(2, 1, 0, false, 0), std::invalid_argument);
}
