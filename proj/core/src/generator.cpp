#include "cactus/generator.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace cactus {

namespace {

// Uniform draw from [0, n) via rejection; avoids distribution objects,
// whose output is not specified portably.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw std::logic_error("draw_below(0)");
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

int draw_range(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

bool draw_event(std::mt19937_64& rng, double prob) {
    return static_cast<double>(rng()) <
           prob * static_cast<double>(std::numeric_limits<std::uint64_t>::max());
}

}  // namespace

MultiGraph gen_class_graph(const GenConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("gen_class_graph requires n >= 1");
    const bool odd = cfg.mode == ClassMode::OddCactus;
    int lo = cfg.cycle_min > 0 ? cfg.cycle_min : (odd ? 3 : 2);
    int hi = cfg.cycle_max > 0 ? cfg.cycle_max : (odd ? 7 : 6);
    if (odd) {
        if (lo < 3) lo = 3;
        if (lo % 2 == 0) ++lo;
        if (hi % 2 == 0) --hi;
    }
    if (lo < 2 || hi < lo) throw std::invalid_argument("bad cycle length range");

    std::mt19937_64 rng(cfg.seed);
    MultiGraph g;
    std::vector<VertexId> present{g.add_vertex()};

    while (static_cast<int>(present.size()) < cfg.n) {
        const int remaining = cfg.n - static_cast<int>(present.size());
        VertexId anchor = present[draw_below(rng, present.size())];
        int min_cycle_cost = lo - 1;  // new vertices a cycle of length lo needs
        if (draw_event(rng, cfg.pendant_prob) || remaining < min_cycle_cost) {
            VertexId b = g.add_vertex();
            g.add_edge(anchor, b, 1);
            present.push_back(b);
            continue;
        }
        int len = draw_range(rng, lo, hi);
        if (odd && len % 2 == 0) --len;
        len = std::min(len, remaining + 1);
        if (odd && len % 2 == 0) --len;
        // Attach a cycle of `len` vertices through the anchor.
        VertexId prev = anchor;
        for (int i = 0; i < len - 1; ++i) {
            VertexId b = g.add_vertex();
            g.add_edge(prev, b, 1);
            present.push_back(b);
            prev = b;
        }
        g.add_edge(prev, anchor, 1);
    }
    return g;
}

std::pair<MultiGraph, std::vector<VertexId>> plant(const MultiGraph& base, int r,
                                                   const GenConfig& cfg) {
    if (r < 1) throw std::invalid_argument("plant requires r >= 1");
    if (base.empty()) throw std::invalid_argument("plant requires a non-empty base");
    std::mt19937_64 rng(cfg.seed);
    MultiGraph g = base;
    std::vector<VertexId> planted;
    const bool odd = cfg.mode == ClassMode::OddCactus;

    for (int i = 0; i < r; ++i) {
        std::vector<VertexId> pool = g.vertices();
        VertexId x = g.add_vertex();
        int d = draw_range(rng, cfg.plant_degree_min, cfg.plant_degree_max);
        for (int j = 0; j < d; ++j) {
            VertexId target = pool[draw_below(rng, pool.size())];
            int w = odd ? static_cast<int>(draw_below(rng, 2)) : 1;
            g.add_edge(x, target, w);
        }
        planted.push_back(x);
    }
    return {std::move(g), std::move(planted)};
}

MultiGraph gen_random_multigraph(int n, int m, int max_mult, bool weighted,
                                 std::uint64_t seed) {
    if (n < 0 || m < 0) throw std::invalid_argument("negative size");
    if (max_mult < 1) throw std::invalid_argument("max_mult must be >= 1");
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (static_cast<long long>(m) > pairs * max_mult)
        throw std::invalid_argument("too many edges for the multiplicity cap");

    std::mt19937_64 rng(seed);
    MultiGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    const std::vector<VertexId> vs = g.vertices();
    for (int i = 0; i < m; ++i) {
        VertexId u, v;
        do {
            u = vs[draw_below(rng, vs.size())];
            v = vs[draw_below(rng, vs.size())];
        } while (u == v ||
                 g.multiplicity(u, v) >= static_cast<std::size_t>(max_mult));
        int w = weighted ? static_cast<int>(draw_below(rng, 2)) : 1;
        g.add_edge(u, v, w);
    }
    return g;
}

}  // namespace cactus
