#include "cactus/compression.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <vector>

namespace cactus {

namespace {

// Subsets of `pool` of size c in lexicographic order over the sorted pool.
template <typename Fn>
bool for_each_subset_of_size(const std::vector<VertexId>& pool, std::size_t c, Fn&& fn) {
    const std::size_t n = pool.size();
    std::vector<std::size_t> idx(c);
    for (std::size_t i = 0; i < c; ++i) idx[i] = i;
    while (true) {
        std::set<VertexId> subset;
        for (std::size_t i : idx) subset.insert(pool[i]);
        if (fn(subset)) return true;
        if (c == 0) return false;
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
    }
}

}  // namespace

std::optional<Solution> solve(const MultiGraph& g, int k, ClassMode mode,
                              const SolveOptions& opts, SearchStats* stats) {
    if (k < 0) throw std::invalid_argument("budget must be non-negative");
    opts.params.validate();

    const std::vector<VertexId> order = g.vertices();
    std::set<VertexId> solution;   // current deletion set for the prefix
    std::set<VertexId> suffix(order.begin(), order.end());

    for (VertexId next : order) {
        suffix.erase(next);
        std::set<VertexId> grown = solution;
        grown.insert(next);
        if (static_cast<int>(grown.size()) <= k) {
            solution = std::move(grown);
            continue;
        }

        // The carried set is one too large; recompress it.
        const MultiGraph prefix = g.delete_vertices(suffix);
        const std::vector<VertexId> pool(grown.begin(), grown.end());
        bool repaired = false;
        for (std::size_t c = 0; c <= pool.size() && !repaired; ++c) {
            repaired = for_each_subset_of_size(pool, c, [&](const std::set<VertexId>& keep_deleted) {
                MultiGraph reduced = prefix.delete_vertices(keep_deleted);
                std::set<VertexId> protect;
                for (VertexId v : pool)
                    if (!keep_deleted.count(v)) protect.insert(v);
                if (!class_check(reduced.induced(protect), mode).member) return false;

                Instance inst{std::move(reduced), std::move(protect),
                              k - static_cast<int>(c), mode};
                auto part = disjoint_solve(inst, opts, stats);
                if (!part) return false;
                solution = keep_deleted;
                solution.insert(part->vertices.begin(), part->vertices.end());
                return true;
            });
        }
        if (!repaired) return std::nullopt;  // hereditary: the full graph fails too
        assert(class_check(prefix.delete_vertices(solution), mode).member);
    }

    Solution out;
    out.vertices.assign(solution.begin(), solution.end());
    std::set<VertexId> xs(solution.begin(), solution.end());
    if (!class_check(g.delete_vertices(xs), mode).member)
        throw std::logic_error("compression produced an invalid deletion set");
    return out;
}

std::optional<std::pair<int, Solution>> find_min(const MultiGraph& g, ClassMode mode,
                                                 std::optional<int> k_cap,
                                                 const SolveOptions& opts,
                                                 SearchStats* stats) {
    const int cap = k_cap ? *k_cap : static_cast<int>(g.vertex_count());
    for (int k = 0; k <= cap; ++k) {
        auto sol = solve(g, k, mode, opts, stats);
        if (sol) return std::make_pair(k, std::move(*sol));
    }
    return std::nullopt;
}

}  // namespace cactus
