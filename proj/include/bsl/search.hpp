#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bsl/oracle.hpp"

namespace bsl {

inline constexpr std::int64_t kDefaultQueryBudget = 1000000000;

struct SearchOutcome {
  bool success = false;
  std::optional<VertexId> witness;  // depth-n vertex on success
  std::int64_t witness_sum = 0;     // S(witness)
  std::int64_t queries = 0;         // ledger count at stop
  std::int64_t restarts = 0;
  std::int64_t budget = 0;
  std::optional<VertexId> final_segment_start;  // where the last segment ran
  std::vector<VertexId> examined_order;         // charge order, when recorded
};

enum class SegmentStatus { kFound, kExhausted, kBudget };

struct SegmentResult {
  SegmentStatus status = SegmentStatus::kExhausted;
  std::optional<VertexId> witness;
  std::int64_t witness_sum = 0;
  // Unexamined children (at depth <= n_global) of this segment's examined
  // set; filled only on kExhausted, which is when a restart consumes them.
  std::vector<VertexId> frontier_additions;
};

// One depth-first segment below `start`: explores descendants in
// lexicographic order, expanding a vertex only while its path sum relative to
// start stays above `slope`. Depth-n_global vertices are leaves, tested
// against the absolute success_threshold. Every queried vertex is charged
// exactly once; newly charged vertices are appended to *record when given.
SegmentResult dfs_w(LabelOracle& oracle, const VertexId& start, double slope,
                    std::int64_t n_global, std::int64_t success_threshold,
                    std::int64_t budget,
                    std::vector<VertexId>* record = nullptr);

// Iterated depth-first search: segments run at barrier slope
// c(p) - r*eps relative to each restart vertex; global success is
// S(v) >= ceil((c - eps) n - 1e-9) at depth n. On segment failure the search
// restarts at the minimal-depth leftmost unexamined child of an examined
// vertex. Stops on success, budget exhaustion, or an exhausted frontier.
SearchOutcome idfs(LabelOracle& oracle, double eps, double r, std::int64_t n,
                   std::int64_t budget = kDefaultQueryBudget,
                   bool record = false);

// Baseline: exhaustively scores the depth-d subtree below the current vertex,
// steps to the child on the maximal-sum depth-d path (ties lexicographic),
// repeats to depth n. Always reaches depth n; reports the achieved sum.
SearchOutcome greedy_lookahead(LabelOracle& oracle, int lookahead_depth,
                               std::int64_t n);

// Good-vertex accounting replayed over a recorded examined sequence: |A(t)|
// is the number of ancestors x of v(t) within b generations (v(t) included),
// not counted at an earlier time, from which some descending all-ones path of
// b vertices passes through v(t). Audit reads only.
std::vector<std::int64_t> audit_good_sets(const LabelOracle& oracle,
                                          std::span<const VertexId> examined_order,
                                          std::int64_t b);

enum class SegmentColor { kRed, kBlue };

struct ColoringReport {
  std::vector<std::int64_t> tau;  // stopping indices, tau[0] = 0
  std::vector<SegmentColor> segment_colors;
  std::int64_t good_count = 0;  // full-length blue segments with tau_j <= n-b
  std::int64_t b = 0;
  double eps_used = 0;  // b^(-2/3); equals eps unless snapped
  bool snapped = false;
};

// Red/blue segmentation of a label sequence: tau_{j+1} = tau_j + k for the
// least k < b at which the partial sum dips to or below the line of slope
// c(p) - s*eps from tau_j, else tau_j + b. A segment is red iff it ended on a
// dip strictly before both n and tau_j + b.
ColoringReport red_blue_color(std::span<const std::uint8_t> labels, double p,
                              double s, double eps);

// floor(kappa * n / eps); rejects kappa >= 1/2.
std::int64_t critical_search_budget(double eps, std::int64_t n, double kappa_param);

// (s-1) / (4 (1 - c(p))) * eps^(11/2) * n / rho_dp(p, s*eps, b) with
// b = round(eps^(-3/2)).
double subcritical_search_budget(double p, double s, double eps, std::int64_t n);

// Labels of the prefixes of v at depths 1..depth(v), audit reads.
std::vector<std::uint8_t> path_labels(const LabelOracle& oracle,
                                      const VertexId& v);

}  // namespace bsl
