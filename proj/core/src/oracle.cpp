#include "cactus/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cactus {

namespace {

// Visits all size-c index combinations in lexicographic order.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t c, Fn&& fn) {
    std::vector<std::size_t> idx(c);
    for (std::size_t i = 0; i < c; ++i) idx[i] = i;
    while (true) {
        if (fn(idx)) return true;
        // advance
        std::size_t i = c;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - c) {
                ++idx[i];
                for (std::size_t j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
        if (c == 0) return false;
    }
}

}  // namespace

OracleResult min_deletion_set(const MultiGraph& g, ClassMode mode,
                              std::optional<int> k_cap, std::size_t vertex_guard) {
    const std::vector<VertexId> vs = g.vertices();
    if (vs.size() > vertex_guard)
        throw std::invalid_argument("graph exceeds the oracle vertex guard (" +
                                    std::to_string(vertex_guard) + " vertices)");
    const std::size_t cap =
        k_cap ? std::min<std::size_t>(std::max(0, *k_cap), vs.size()) : vs.size();

    OracleResult result;
    for (std::size_t c = 0; c <= cap; ++c) {
        std::set<VertexId> x;
        bool found = for_each_combination(vs.size(), c, [&](const std::vector<std::size_t>& idx) {
            x.clear();
            for (std::size_t i : idx) x.insert(vs[i]);
            return class_check(g.delete_vertices(x), mode).member;
        });
        if (found) {
            result.min_size = static_cast<int>(c);
            result.witness.assign(x.begin(), x.end());
            return result;
        }
    }
    return result;  // infeasible at cap
}

}  // namespace cactus
