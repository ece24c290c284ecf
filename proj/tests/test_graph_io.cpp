#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "cactus/generator.hpp"
#include "cactus/graph_io.hpp"
#include "cactus/recognizer.hpp"

using namespace cactus;

namespace {

GraphFile parse(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

int line_of(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("parses the unweighted obstruction") {
    GraphFile f = parse("c tiny\np cvd 2 3\ne 1 2\ne 1 2\ne 1 2\n");
    CHECK(f.mode == ClassMode::Cactus);
    CHECK(f.graph.vertex_count() == 2);
    CHECK(f.graph.multiplicity(1, 2) == 3);
    CHECK_FALSE(is_cactus_forest(f.graph).member);
}

TEST_CASE("parses weighted triangles") {
    GraphFile f = parse("p ect 3 3\ne 1 2 1\ne 2 3 1\ne 3 1 0\n");
    CHECK(f.mode == ClassMode::OddCactus);
    CHECK_FALSE(is_odd_cactus_forest(f.graph).member);
    CHECK(is_cactus_forest(f.graph).member);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(line_of("p cvd 2 1\ne 1 1\n") == 2);              // self-loop
    CHECK(line_of("p cvd 2 1\ne 1 3\n") == 2);              // out of range
    CHECK(line_of("p ect 2 1\ne 1 2\n") == 2);              // missing weight
    CHECK(line_of("p cvd 2 1\ne 1 2 1\n") == 2);            // stray weight
    CHECK(line_of("p cvd x 1\ne 1 2\n") == 1);              // bad header
    CHECK(line_of("p foo 2 1\ne 1 2\n") == 1);              // unknown problem
    CHECK(line_of("e 1 2\n") == 1);                         // edge before header
    CHECK(line_of("p cvd 2 2\ne 1 2\n") == 2);              // fewer edges than declared
    CHECK(line_of("p cvd 2 0\ne 1 2\n") == 2);              // more edges than declared
    CHECK(line_of("q cvd 2 0\n") == 1);                     // unknown tag
    CHECK(line_of("p ect 2 1\ne 1 2 7\n") == 2);            // weight out of range
    CHECK(line_of("") == 0);                                // missing header
}

TEST_CASE("write then read reproduces the graph") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        bool weighted = seed % 2 == 0;
        MultiGraph g = gen_random_multigraph(8, static_cast<int>(seed % 14), 3, weighted, seed);
        ClassMode mode = weighted ? ClassMode::OddCactus : ClassMode::Cactus;

        std::ostringstream out;
        write_graph(out, g, mode, "round trip");
        GraphFile back = parse(out.str());
        CHECK(back.mode == mode);
        CHECK(back.graph.vertex_count() == g.vertex_count());
        CHECK(back.graph.edge_count() == g.edge_count());
        for (const Edge& e : g.edges()) {
            CHECK(back.graph.multiplicity(e.u, e.v) == g.multiplicity(e.u, e.v));
        }
        if (weighted) {
            // Weight multisets per vertex pair must survive the trip.
            auto weight_sum = [](const MultiGraph& h) {
                int total = 0;
                for (const Edge& e : h.edges()) total += e.weight;
                return total;
            };
            CHECK(weight_sum(back.graph) == weight_sum(g));
        }
    }
}

TEST_CASE("writer compacts sparse labels") {
    MultiGraph g;
    g.add_vertex(3);
    g.add_vertex(9);
    g.add_edge(3, 9);
    std::ostringstream out;
    write_graph(out, g, ClassMode::Cactus);
    GraphFile back = parse(out.str());
    CHECK(back.graph.vertex_count() == 2);
    CHECK(back.graph.multiplicity(1, 2) == 1);
}
