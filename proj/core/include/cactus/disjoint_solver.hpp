#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cactus/multigraph.hpp"
#include "cactus/recognizer.hpp"

namespace cactus {

/// One node of the branching search: find X, disjoint from the protected
/// set, with |X| <= budget such that deleting X leaves the target class.
/// Both the protected set's induced subgraph and the rest must already be
/// in the class.
struct Instance {
    MultiGraph graph;
    std::set<VertexId> protected_set;
    int budget = 0;
    ClassMode mode = ClassMode::Cactus;

    bool invariants_hold() const;
};

/// Measure coefficients; the search tree is bounded through the decrease
/// of  alpha*budget + beta*cc(protected) + gamma*bridges(protected).
struct MeasureParams {
    double alpha = 1.0;
    double beta = 0.4052;
    double gamma = 0.0726;

    void validate() const;  // alpha, beta, gamma >= 0 and beta >= gamma
};

double measure(const Instance& inst, const MeasureParams& p);

enum class RuleKind { Reduce, Branch, TerminalYes, TerminalNo };

struct RuleChild {
    Instance instance;
    std::vector<VertexId> deleted;  // added to the solution on an accepting path
};

struct RuleOutcome {
    std::string rule_id;
    RuleKind kind = RuleKind::TerminalNo;
    std::vector<RuleChild> children;
};

// Rule ids as they appear in traces and audit dumps.
inline constexpr const char* kRuleIsolatedComponent = "rr_isolated_component";
inline constexpr const char* kRuleDegreeOne = "rr_degree_one";
inline constexpr const char* kRuleForcedDelete = "rr_forced_delete";
inline constexpr const char* kRuleParallelConflict = "br_parallel_conflict";
inline constexpr const char* kRuleSingleNeighbor = "rr_single_neighbor";
inline constexpr const char* kRuleSAttachment = "br_s_attachment";
inline constexpr const char* kRuleContractDegreeTwo = "rr_contract_degree_two";
inline constexpr const char* kRuleLeafBlock = "br_leaf_block";
inline constexpr const char* kTerminalYes = "terminal_yes";
inline constexpr const char* kTerminalNo = "terminal_no";

/// Which cleanup reductions to try; the dispatcher runs the cheap ones
/// before branching on parallel edges and the single-neighbor rule after.
enum class CleanupPhase { IsolatedAndDegreeOne, SingleNeighbor };

// Individual rules. Each returns the outcome of its first application in
// ascending-label order, or nullopt when not applicable. Preconditions
// follow the dispatcher order in next_rule.
std::optional<RuleOutcome> rr_cleanup(const Instance& inst, CleanupPhase phase);
std::optional<RuleOutcome> rr_forced_delete(const Instance& inst);
std::optional<RuleOutcome> br_parallel_conflict(const Instance& inst);
std::optional<RuleOutcome> br_s_attachment(const Instance& inst);
std::optional<RuleOutcome> rr_contract_degree_two(const Instance& inst);
std::optional<RuleOutcome> br_leaf_block(const Instance& inst);

/// Deterministic dispatcher: terminal checks, then the first applicable
/// rule in fixed order. Throws std::logic_error if no rule applies to a
/// non-terminal instance.
RuleOutcome next_rule(const Instance& inst);

/// Per-branch evidence that the measure dropped by at least the rule's
/// tabulated bound. Reductions are recorded with bound 0 except the
/// forced deletion, whose drop equals alpha exactly.
struct AuditChild {
    double mu_child = 0.0;
    double bound = 0.0;
};

struct AuditRecord {
    std::string rule;
    RuleKind kind = RuleKind::Reduce;
    double mu_parent = 0.0;
    std::vector<AuditChild> children;
};

using AuditSink = std::function<void(const AuditRecord&)>;

/// One JSON object per child:
/// {"rule":...,"mu_parent":...,"child_index":...,"mu_child":...,"bound":...}
std::string audit_to_json_lines(const AuditRecord& rec);

/// Tabulated lower bound on the measure decrease for one child of a rule.
double tabulated_bound(const std::string& rule_id, bool keep_child,
                       const MeasureParams& p);

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t branch_nodes = 0;
    std::map<std::string, std::uint64_t> rule_applications;
};

struct SolveOptions {
    MeasureParams params;
    AuditSink audit;  // empty = no auditing
    // Re-derive the instance invariants at every node; defaults on in
    // debug builds.
    bool check_invariants =
#ifdef NDEBUG
        false;
#else
        true;
#endif
};

struct Solution {
    std::vector<VertexId> vertices;  // sorted ascending
};

/// Depth-first search over the rule tree. Returns a deletion set disjoint
/// from the protected set, of size at most the budget, whose removal
/// leaves the target class; nullopt when none exists. A protected
/// subgraph outside the class makes the instance infeasible. The result
/// is re-verified with the recognizer before returning.
std::optional<Solution> disjoint_solve(const Instance& inst,
                                       const SolveOptions& opts = {},
                                       SearchStats* stats = nullptr);

/// Unique c >= 1 with sum_i c^(-factors[i]) = 1, to within 1e-9 residual.
double branching_factor_root(const std::vector<double>& factors);

}  // namespace cactus
