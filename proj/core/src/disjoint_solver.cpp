#include "cactus/disjoint_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cactus {

namespace {

struct RuleContext {
    MultiGraph rest;                                  // graph minus the protected set
    std::vector<std::vector<VertexId>> s_components;  // components of the protected subgraph
    std::map<VertexId, int> s_component_of;
};

RuleContext make_context(const Instance& inst) {
    RuleContext ctx;
    ctx.rest = inst.graph.delete_vertices(inst.protected_set);
    ctx.s_components = inst.graph.induced(inst.protected_set).connected_components();
    for (std::size_t i = 0; i < ctx.s_components.size(); ++i)
        for (VertexId v : ctx.s_components[i])
            ctx.s_component_of.emplace(v, static_cast<int>(i));
    return ctx;
}

bool in_protected(const Instance& inst, VertexId v) {
    return inst.protected_set.count(v) != 0;
}

Instance delete_child(const Instance& inst, const std::set<VertexId>& xs, int budget_drop) {
    Instance child;
    child.graph = inst.graph.delete_vertices(xs);
    child.protected_set = inst.protected_set;
    child.budget = inst.budget - budget_drop;
    child.mode = inst.mode;
    return child;
}

RuleOutcome branch_on_pair(const Instance& inst, VertexId u, VertexId v,
                           const char* rule_id) {
    RuleOutcome out{rule_id, RuleKind::Branch, {}};
    out.children.push_back({delete_child(inst, {u}, 1), {u}});
    out.children.push_back({delete_child(inst, {v}, 1), {v}});
    return out;
}

// Whether adding v to the protected set breaks the class. Checked on the
// protected components v touches; the untouched ones stay valid.
bool breaks_class_with(const Instance& inst, const RuleContext& ctx, VertexId v) {
    std::set<VertexId> part{v};
    std::set<int> touched;
    for (VertexId w : inst.graph.neighbors(v)) {
        auto it = ctx.s_component_of.find(w);
        if (it != ctx.s_component_of.end()) touched.insert(it->second);
    }
    for (int ci : touched)
        for (VertexId w : ctx.s_components[static_cast<std::size_t>(ci)]) part.insert(w);
    return !class_check(inst.graph.induced(part), inst.mode).member;
}

std::optional<RuleOutcome> cleanup_impl(const Instance& inst, CleanupPhase phase,
                                        const RuleContext& ctx) {
    if (phase == CleanupPhase::IsolatedAndDegreeOne) {
        for (const std::vector<VertexId>& comp : ctx.rest.connected_components()) {
            bool attached = false;
            for (VertexId v : comp) {
                for (VertexId w : inst.graph.neighbors(v))
                    if (in_protected(inst, w)) {
                        attached = true;
                        break;
                    }
                if (attached) break;
            }
            if (attached) continue;
            // Always true when the free part is in the class; the check
            // keeps the rule safe on inputs that arrive outside it.
            std::set<VertexId> cs(comp.begin(), comp.end());
            if (!class_check(inst.graph.induced(cs), inst.mode).member) continue;
            RuleOutcome out{kRuleIsolatedComponent, RuleKind::Reduce, {}};
            out.children.push_back({delete_child(inst, cs, 0), {}});
            return out;
        }
        for (VertexId v : ctx.rest.vertices())
            if (inst.graph.degree(v) == 1) {
                RuleOutcome out{kRuleDegreeOne, RuleKind::Reduce, {}};
                out.children.push_back({delete_child(inst, {v}, 0), {}});
                return out;
            }
        return std::nullopt;
    }
    // Single-neighbor rule; safe once multiplicities are capped at two
    // and (weighted) parallel pairs have odd total weight, which the
    // dispatcher order guarantees.
    for (VertexId v : ctx.rest.vertices())
        if (inst.graph.neighbors(v).size() == 1) {
            RuleOutcome out{kRuleSingleNeighbor, RuleKind::Reduce, {}};
            out.children.push_back({delete_child(inst, {v}, 0), {}});
            return out;
        }
    return std::nullopt;
}

std::optional<RuleOutcome> forced_delete_impl(const Instance& inst, const RuleContext& ctx) {
    for (VertexId v : ctx.rest.vertices())
        if (breaks_class_with(inst, ctx, v)) {
            RuleOutcome out{kRuleForcedDelete, RuleKind::Reduce, {}};
            out.children.push_back({delete_child(inst, {v}, 1), {v}});
            return out;
        }
    return std::nullopt;
}

std::optional<RuleOutcome> parallel_conflict_impl(const Instance& inst,
                                                  const RuleContext& ctx) {
    for (VertexId u : ctx.rest.vertices()) {
        for (VertexId v : inst.graph.neighbors(u)) {
            if (v <= u || in_protected(inst, v)) continue;
            std::size_t m = inst.graph.multiplicity(u, v);
            if (m >= 3) return branch_on_pair(inst, u, v, kRuleParallelConflict);
            if (m == 2 && inst.mode == ClassMode::OddCactus) {
                int parity = 0;
                for (EdgeId id : inst.graph.incident_edges(u)) {
                    const Edge& e = inst.graph.edge(id);
                    if (e.other(u) == v) parity ^= e.weight & 1;
                }
                if (parity == 0)  // equal weights: the pair is an even cycle
                    return branch_on_pair(inst, u, v, kRuleParallelConflict);
            }
        }
    }
    return std::nullopt;
}

std::optional<RuleOutcome> s_attachment_impl(const Instance& inst, const RuleContext& ctx) {
    for (VertexId v : ctx.rest.vertices()) {
        std::size_t contacts = 0;
        for (VertexId w : inst.graph.neighbors(v))
            if (in_protected(inst, w)) ++contacts;
        if (contacts < 2) continue;
        RuleOutcome out{kRuleSAttachment, RuleKind::Branch, {}};
        out.children.push_back({delete_child(inst, {v}, 1), {v}});
        Instance keep = inst;
        keep.protected_set.insert(v);
        out.children.push_back({std::move(keep), {}});
        return out;
    }
    return std::nullopt;
}

std::optional<RuleOutcome> contract_degree_two_impl(const Instance& inst,
                                                    const RuleContext& ctx) {
    for (VertexId v : ctx.rest.vertices()) {
        std::vector<VertexId> nbrs = inst.graph.neighbors(v);
        if (nbrs.size() != 2) continue;
        VertexId u = nbrs[0], w = nbrs[1];
        if (in_protected(inst, u) && in_protected(inst, w))
            throw std::logic_error(
                "contraction with both endpoints protected: rule order violated");
        const std::size_t mu = inst.graph.multiplicity(v, u);
        const std::size_t mw = inst.graph.multiplicity(v, w);
        const std::size_t p = std::max(mu, mw);
        if (p > 2)
            throw std::logic_error("contraction past multiplicity two: rule order violated");

        Instance child;
        child.protected_set = inst.protected_set;
        child.budget = inst.budget;
        child.mode = inst.mode;
        child.graph = inst.graph.delete_vertices({v});
        if (p == 1) {
            int weight = 1;
            if (inst.mode == ClassMode::OddCactus) {
                int sum = 0;
                for (EdgeId id : inst.graph.incident_edges(v)) sum += inst.graph.edge(id).weight;
                weight = sum & 1;  // combined parity of the two replaced edges
            }
            child.graph.add_edge(u, w, weight);
        } else {
            // Replacement pair carries both parities; weight 0 takes the
            // lower edge id.
            child.graph.add_edge(u, w, inst.mode == ClassMode::OddCactus ? 0 : 1);
            child.graph.add_edge(u, w, 1);
        }
        RuleOutcome out{kRuleContractDegreeTwo, RuleKind::Reduce, {}};
        out.children.push_back({std::move(child), {}});
        return out;
    }
    return std::nullopt;
}

std::optional<RuleOutcome> leaf_block_impl(const Instance& inst, const RuleContext& ctx) {
    if (ctx.rest.empty()) return std::nullopt;
    BlockDecomposition dec = ctx.rest.block_decomposition();
    const Block* leaf = nullptr;
    for (std::size_t i : dec.leaf_block_indices()) {
        leaf = &dec.blocks[i];
        break;  // blocks are sorted; the first leaf has the lowest label
    }
    if (!leaf) throw std::logic_error("graph without a leaf block");
    if (leaf->vertices.size() < 3)
        throw std::logic_error("leaf block smaller than a cycle: rule order violated");
    if (!leaf->is_cycle())
        throw std::logic_error("leaf block is not a cycle: free part outside the class");

    VertexId u, v, w;
    if (leaf->vertices.size() == 3) {
        std::vector<VertexId> noncut, cutv;
        for (VertexId x : leaf->vertices)
            (dec.is_cut_vertex(x) ? cutv : noncut).push_back(x);
        if (noncut.size() < 2)
            throw std::logic_error("leaf block with two cut vertices");
        u = noncut[0];
        v = noncut[1];
        w = cutv.empty() ? noncut[2] : cutv[0];
    } else {
        auto triple = consecutive_noncut_triple(ctx.rest, leaf->vertices);
        if (!triple) throw std::logic_error("leaf block without a non-cut triple");
        u = (*triple)[0];
        v = (*triple)[1];
        w = (*triple)[2];
    }

    for (VertexId x : {u, v, w}) {
        if (dec.is_cut_vertex(x)) continue;
        std::size_t contacts = 0;
        for (VertexId y : inst.graph.neighbors(x))
            if (in_protected(inst, y)) ++contacts;
        if (contacts != 1)
            throw std::logic_error(
                "non-cut leaf-block vertex without exactly one protected neighbor");
    }

    RuleOutcome out{kRuleLeafBlock, RuleKind::Branch, {}};
    for (VertexId x : {u, v, w})
        out.children.push_back({delete_child(inst, {x}, 1), {x}});
    if (guard_with(inst.graph, inst.protected_set, {u, v, w}, inst.mode)) {
        Instance keep = inst;
        keep.protected_set.insert({u, v, w});
        out.children.push_back({std::move(keep), {}});
    }
    return out;
}

}  // namespace

bool Instance::invariants_hold() const {
    for (VertexId v : protected_set)
        if (!graph.has_vertex(v)) return false;
    if (!class_check(graph.delete_vertices(protected_set), mode).member) return false;
    if (!class_check(graph.induced(protected_set), mode).member) return false;
    return true;
}

void MeasureParams::validate() const {
    if (alpha < 0 || beta < 0 || gamma < 0)
        throw std::invalid_argument("measure coefficients must be non-negative");
    if (beta < gamma) throw std::invalid_argument("measure requires beta >= gamma");
}

double measure(const Instance& inst, const MeasureParams& p) {
    MultiGraph sub = inst.graph.induced(inst.protected_set);
    return p.alpha * inst.budget + p.beta * static_cast<double>(sub.component_count()) +
           p.gamma * static_cast<double>(sub.bridges().size());
}

std::optional<RuleOutcome> rr_cleanup(const Instance& inst, CleanupPhase phase) {
    return cleanup_impl(inst, phase, make_context(inst));
}

std::optional<RuleOutcome> rr_forced_delete(const Instance& inst) {
    return forced_delete_impl(inst, make_context(inst));
}

std::optional<RuleOutcome> br_parallel_conflict(const Instance& inst) {
    return parallel_conflict_impl(inst, make_context(inst));
}

std::optional<RuleOutcome> br_s_attachment(const Instance& inst) {
    return s_attachment_impl(inst, make_context(inst));
}

std::optional<RuleOutcome> rr_contract_degree_two(const Instance& inst) {
    return contract_degree_two_impl(inst, make_context(inst));
}

std::optional<RuleOutcome> br_leaf_block(const Instance& inst) {
    return leaf_block_impl(inst, make_context(inst));
}

RuleOutcome next_rule(const Instance& inst) {
    if (inst.budget < 0) return {kTerminalNo, RuleKind::TerminalNo, {}};
    if (class_check(inst.graph, inst.mode).member)
        return {kTerminalYes, RuleKind::TerminalYes, {}};

    RuleContext ctx = make_context(inst);
    if (auto out = cleanup_impl(inst, CleanupPhase::IsolatedAndDegreeOne, ctx)) return *out;
    if (auto out = forced_delete_impl(inst, ctx)) return *out;
    if (auto out = parallel_conflict_impl(inst, ctx)) return *out;
    if (auto out = cleanup_impl(inst, CleanupPhase::SingleNeighbor, ctx)) return *out;
    if (auto out = s_attachment_impl(inst, ctx)) return *out;
    if (auto out = contract_degree_two_impl(inst, ctx)) return *out;
    if (auto out = leaf_block_impl(inst, ctx)) return *out;
    throw std::logic_error("no rule applies to a non-terminal instance");
}

double tabulated_bound(const std::string& rule_id, bool keep_child,
                       const MeasureParams& p) {
    if (rule_id == kRuleForcedDelete) return p.alpha;
    if (rule_id == kRuleParallelConflict) return p.alpha;
    if (rule_id == kRuleSAttachment)
        return keep_child ? std::min(p.beta - 2 * p.gamma, p.gamma) : p.alpha;
    if (rule_id == kRuleLeafBlock)
        return keep_child ? std::min(p.beta - 2 * p.gamma, 2 * p.beta - 5 * p.gamma)
                          : p.alpha;
    return 0.0;  // plain reductions never increase the measure
}

std::string audit_to_json_lines(const AuditRecord& rec) {
    std::string out;
    char buf[256];
    for (std::size_t i = 0; i < rec.children.size(); ++i) {
        std::snprintf(buf, sizeof(buf),
                      "{\"rule\":\"%s\",\"mu_parent\":%.17g,\"child_index\":%zu,"
                      "\"mu_child\":%.17g,\"bound\":%.17g}\n",
                      rec.rule.c_str(), rec.mu_parent, i, rec.children[i].mu_child,
                      rec.children[i].bound);
        out += buf;
    }
    return out;
}

namespace {

std::optional<std::vector<VertexId>> search(const Instance& inst, const SolveOptions& opts,
                                            SearchStats& stats) {
    ++stats.nodes;
    RuleOutcome out = next_rule(inst);
    ++stats.rule_applications[out.rule_id];
    if (out.kind == RuleKind::TerminalYes) return std::vector<VertexId>{};
    if (out.kind == RuleKind::TerminalNo) return std::nullopt;
    if (out.kind == RuleKind::Branch) ++stats.branch_nodes;

    if (opts.audit) {
        AuditRecord rec{out.rule_id, out.kind, measure(inst, opts.params), {}};
        for (const RuleChild& ch : out.children)
            rec.children.push_back(
                {measure(ch.instance, opts.params),
                 tabulated_bound(out.rule_id, ch.deleted.empty(), opts.params)});
        opts.audit(rec);
    }
    if (opts.check_invariants)
        for (const RuleChild& ch : out.children)
            if (ch.instance.budget >= 0 && !ch.instance.invariants_hold())
                throw std::logic_error("rule " + out.rule_id +
                                       " produced an invariant-violating child");

    for (const RuleChild& ch : out.children) {
        auto sub = search(ch.instance, opts, stats);
        if (sub) {
            sub->insert(sub->end(), ch.deleted.begin(), ch.deleted.end());
            return sub;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Solution> disjoint_solve(const Instance& inst, const SolveOptions& opts,
                                       SearchStats* stats) {
    opts.params.validate();
    for (VertexId v : inst.protected_set)
        if (!inst.graph.has_vertex(v))
            throw std::invalid_argument("protected vertex missing from the graph");
    // A protected subgraph outside the class cannot be repaired by
    // deletions disjoint from it.
    if (!class_check(inst.graph.induced(inst.protected_set), inst.mode).member)
        return std::nullopt;

    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    auto found = search(inst, opts, st);
    if (!found) return std::nullopt;

    Solution sol;
    sol.vertices = std::move(*found);
    std::sort(sol.vertices.begin(), sol.vertices.end());
    std::set<VertexId> xs(sol.vertices.begin(), sol.vertices.end());
    if (!class_check(inst.graph.delete_vertices(xs), inst.mode).member)
        throw std::logic_error("solver returned an invalid deletion set");
    return sol;
}

double branching_factor_root(const std::vector<double>& factors) {
    if (factors.empty()) throw std::invalid_argument("at least one branching factor required");
    for (double b : factors)
        if (!(b > 0)) throw std::invalid_argument("branching factors must be positive");

    auto value = [&](double c) {
        double s = 0.0;
        for (double b : factors) s += std::pow(c, -b);
        return s;
    };
    if (factors.size() == 1) return 1.0;  // single factor: c = 1

    double lo = 1.0, hi = 2.0;
    while (value(hi) > 1.0) hi *= 2.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-13 * hi; ++i) {
        double mid = 0.5 * (lo + hi);
        (value(mid) > 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace cactus
