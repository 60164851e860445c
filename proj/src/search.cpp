#include "bsl/search.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "bsl/rate.hpp"
#include "bsl/survival.hpp"

namespace bsl {

namespace {

struct WalkOutcome {
  SegmentStatus status = SegmentStatus::kExhausted;
  std::optional<VertexId> witness;
  std::int64_t witness_sum = 0;
};

// Shared traversal behind dfs_w: the charged main pass, and an audit replay
// that emits frontier additions after an exhausted segment. Labels are pure,
// so both passes visit vertices in identical order.
WalkOutcome walk_segment(LabelOracle& oracle, const VertexId& start,
                         const std::vector<std::int64_t>& rel_thresholds,
                         std::int64_t n_global, std::int64_t success_threshold,
                         std::int64_t budget, bool charged,
                         std::vector<VertexId>* record,
                         std::vector<VertexId>* additions) {
  QueryLedger& ledger = oracle.ledger();
  std::uint64_t state = oracle.root_state();
  std::int64_t start_sum = 0;
  QueryLedger::NodeRef node = ledger.root_node();
  VertexId path = VertexId::root();

  // Evaluating S(start) requires the whole root-to-start path; the root's own
  // label never enters the sum and the root is never charged.
  for (std::uint32_t k = 0; k < start.depth(); ++k) {
    int bit = start.bit(k);
    state = child_state(state, bit);
    start_sum += oracle.label_at_state(state);
    path.push_bit(bit);
    if (charged) {
      node = ledger.extend(node, bit);
      if (!ledger.node_charged(node)) {
        if (ledger.count() >= budget) {
          return WalkOutcome{SegmentStatus::kBudget, std::nullopt, 0};
        }
        ledger.charge_node(node);
        if (record) {
          record->push_back(path);
        }
      }
    }
  }

  const std::int64_t rel_max = n_global - start.depth();
  if (rel_max == 0) {
    if (start_sum >= success_threshold) {
      return WalkOutcome{SegmentStatus::kFound, start, start_sum};
    }
    return WalkOutcome{SegmentStatus::kExhausted, std::nullopt, 0};
  }

  struct Frame {
    std::uint64_t state;
    std::int64_t sum;  // relative to start
    int next_bit;
  };
  std::vector<Frame> stack;
  std::vector<QueryLedger::NodeRef> node_stack;
  stack.push_back(Frame{state, 0, 0});
  if (charged) {
    node_stack.push_back(node);
  }

  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_bit > 1) {
      bool base = stack.size() == 1;
      stack.pop_back();
      if (charged) {
        node_stack.pop_back();
      }
      if (!base) {
        path.pop_bit();
      }
      continue;
    }
    int bit = top.next_bit++;
    std::uint64_t child = child_state(top.state, bit);
    std::int64_t child_sum = top.sum + oracle.label_at_state(child);
    std::int64_t rel_level = static_cast<std::int64_t>(stack.size());
    QueryLedger::NodeRef child_node = QueryLedger::kNone;
    if (charged) {
      child_node = ledger.extend(node_stack.back(), bit);
      if (!ledger.node_charged(child_node)) {
        if (ledger.count() >= budget) {
          return WalkOutcome{SegmentStatus::kBudget, std::nullopt, 0};
        }
        ledger.charge_node(child_node);
        if (record) {
          path.push_bit(bit);
          record->push_back(path);
          path.pop_bit();
        }
      }
    }
    if (child_sum < rel_thresholds[static_cast<std::size_t>(rel_level)]) {
      // Pruned; its children become restart candidates while they fit above
      // the global horizon.
      if (additions && start.depth() + rel_level < n_global) {
        path.push_bit(bit);
        additions->push_back(path.child(0));
        additions->push_back(path.child(1));
        path.pop_bit();
      }
      continue;
    }
    if (rel_level == rel_max) {
      std::int64_t abs_sum = start_sum + child_sum;
      if (abs_sum >= success_threshold) {
        path.push_bit(bit);
        return WalkOutcome{SegmentStatus::kFound, path, abs_sum};
      }
      continue;  // depth-n leaf short of the global threshold
    }
    path.push_bit(bit);
    stack.push_back(Frame{child, child_sum, 0});
    if (charged) {
      node_stack.push_back(child_node);
    }
  }
  return WalkOutcome{SegmentStatus::kExhausted, std::nullopt, 0};
}

struct DepthLexGreater {
  bool operator()(const VertexId& a, const VertexId& b) const {
    return DepthLexLess{}(b, a);
  }
};

std::int64_t longest_allones_below(const LabelOracle& oracle,
                                   std::uint64_t state, std::int64_t cap) {
  if (cap == 0) {
    return 0;
  }
  std::int64_t best = 0;
  for (int bit = 0; bit < 2; ++bit) {
    std::uint64_t st = child_state(state, bit);
    if (oracle.label_at_state(st)) {
      best = std::max(best, 1 + longest_allones_below(oracle, st, cap - 1));
      if (best == cap) {
        break;
      }
    }
  }
  return best;
}

}  // namespace

SegmentResult dfs_w(LabelOracle& oracle, const VertexId& start, double slope,
                    std::int64_t n_global, std::int64_t success_threshold,
                    std::int64_t budget, std::vector<VertexId>* record) {
  if (n_global < 0 || static_cast<std::uint32_t>(n_global) >= VertexId::kDepthCap) {
    throw std::invalid_argument("dfs_w: n_global out of range");
  }
  if (start.depth() > static_cast<std::uint32_t>(n_global)) {
    throw std::invalid_argument("dfs_w: start deeper than the global horizon");
  }
  std::int64_t rel_max = n_global - start.depth();
  std::vector<std::int64_t> rel_thresholds(static_cast<std::size_t>(rel_max) + 1);
  for (std::int64_t k = 0; k <= rel_max; ++k) {
    rel_thresholds[static_cast<std::size_t>(k)] = slope_threshold(slope, k);
  }
  WalkOutcome main = walk_segment(oracle, start, rel_thresholds, n_global,
                                  success_threshold, budget, /*charged=*/true,
                                  record, nullptr);
  SegmentResult result;
  result.status = main.status;
  result.witness = std::move(main.witness);
  result.witness_sum = main.witness_sum;
  if (result.status == SegmentStatus::kExhausted) {
    walk_segment(oracle, start, rel_thresholds, n_global, success_threshold,
                 budget, /*charged=*/false, nullptr,
                 &result.frontier_additions);
  }
  return result;
}

SearchOutcome idfs(LabelOracle& oracle, double eps, double r, std::int64_t n,
                   std::int64_t budget, bool record) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("idfs: eps must be > 0");
  }
  if (!(r > 0.0 && r < 1.0)) {
    throw std::invalid_argument("idfs: r must lie in (0, 1)");
  }
  if (n < 1 || static_cast<std::uint32_t>(n) >= VertexId::kDepthCap) {
    throw std::invalid_argument("idfs: n out of range");
  }
  double c = critical_slope_clamped(oracle.p());
  double search_slope = c - r * eps;
  std::int64_t success_threshold = slope_threshold(c - eps, n);

  SearchOutcome out;
  out.budget = budget;
  std::priority_queue<VertexId, std::vector<VertexId>, DepthLexGreater>
      frontier;
  VertexId cur = VertexId::root();
  std::int64_t segments = 0;
  while (true) {
    out.final_segment_start = cur;
    SegmentResult seg =
        dfs_w(oracle, cur, search_slope, n, success_threshold, budget,
              record ? &out.examined_order : nullptr);
    ++segments;
    if (seg.status == SegmentStatus::kFound) {
      out.success = true;
      out.witness = std::move(seg.witness);
      out.witness_sum = seg.witness_sum;
      break;
    }
    if (seg.status == SegmentStatus::kBudget) {
      break;
    }
    for (VertexId& v : seg.frontier_additions) {
      frontier.push(std::move(v));
    }
    bool have_next = false;
    while (!frontier.empty()) {
      VertexId cand = frontier.top();
      frontier.pop();
      if (!oracle.ledger().is_charged(cand)) {
        cur = std::move(cand);
        have_next = true;
        break;
      }
    }
    if (!have_next) {
      break;  // nothing left to restart from at depth <= n
    }
  }
  out.queries = oracle.ledger().count();
  out.restarts = segments - 1;
  return out;
}

SearchOutcome greedy_lookahead(LabelOracle& oracle, int lookahead_depth,
                               std::int64_t n) {
  if (lookahead_depth < 1 || lookahead_depth > 30) {
    throw std::invalid_argument("greedy_lookahead: lookahead must lie in [1, 30]");
  }
  if (n < 1 || static_cast<std::uint32_t>(n) >= VertexId::kDepthCap) {
    throw std::invalid_argument("greedy_lookahead: n out of range");
  }
  QueryLedger& ledger = oracle.ledger();
  VertexId cur = VertexId::root();
  std::uint64_t cur_state = oracle.root_state();
  QueryLedger::NodeRef cur_node = ledger.root_node();
  std::int64_t cur_sum = 0;

  struct Frame {
    std::uint64_t state;
    std::int64_t sum;
    QueryLedger::NodeRef node;
    int next_bit;
  };
  std::vector<Frame> stack;
  std::vector<int> bits;

  for (std::int64_t level = 0; level < n; ++level) {
    int look = static_cast<int>(
        std::min<std::int64_t>(lookahead_depth, n - level));
    stack.clear();
    bits.clear();
    stack.push_back(Frame{cur_state, 0, cur_node, 0});
    std::int64_t best_sum = -1;
    int best_first = 0;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next_bit > 1) {
        stack.pop_back();
        if (!bits.empty()) {
          bits.pop_back();
        }
        continue;
      }
      int bit = top.next_bit++;
      std::uint64_t st = child_state(top.state, bit);
      QueryLedger::NodeRef nd = ledger.extend(top.node, bit);
      ledger.charge_node(nd);
      std::int64_t sum = top.sum + oracle.label_at_state(st);
      if (static_cast<int>(stack.size()) == look) {
        // Full depth-`look` path; strict improvement keeps the
        // lexicographically least maximizer.
        if (sum > best_sum) {
          best_sum = sum;
          best_first = bits.empty() ? bit : bits.front();
        }
        continue;
      }
      bits.push_back(bit);
      stack.push_back(Frame{st, sum, nd, 0});
    }
    cur.push_bit(best_first);
    cur_state = child_state(cur_state, best_first);
    cur_node = ledger.extend(cur_node, best_first);
    cur_sum += oracle.label_at_state(cur_state);
  }

  SearchOutcome out;
  out.success = true;
  out.witness = std::move(cur);
  out.witness_sum = cur_sum;
  out.queries = ledger.count();
  out.restarts = 0;
  out.budget = n * ((std::int64_t{1} << (lookahead_depth + 1)) - 2);
  return out;
}

std::vector<std::int64_t> audit_good_sets(
    const LabelOracle& oracle, std::span<const VertexId> examined_order,
    std::int64_t b) {
  if (b < 1) {
    throw std::invalid_argument("audit_good_sets: b must be >= 1");
  }
  std::unordered_set<VertexId> found;
  std::vector<std::int64_t> sizes;
  sizes.reserve(examined_order.size());
  std::vector<int> prefix_labels;  // index i = label of the depth-i prefix
  for (const VertexId& v : examined_order) {
    std::uint64_t st = oracle.root_state();
    prefix_labels.assign(1, oracle.label_at_state(st));
    for (std::uint32_t k = 0; k < v.depth(); ++k) {
      st = child_state(st, v.bit(k));
      prefix_labels.push_back(oracle.label_at_state(st));
    }
    std::int64_t descent = longest_allones_below(oracle, st, b - 1);
    std::int64_t count = 0;
    std::int64_t jmax = std::min<std::int64_t>(b - 1, v.depth());
    for (std::int64_t j = 0; j <= jmax; ++j) {
      if (prefix_labels[static_cast<std::size_t>(v.depth() - j)] == 0) {
        break;  // the all-ones chain up from v(t) stops here
      }
      if (descent >= b - 1 - j) {
        if (found.insert(v.ancestor(static_cast<std::uint32_t>(j))).second) {
          ++count;
        }
      }
    }
    sizes.push_back(count);
  }
  return sizes;
}

ColoringReport red_blue_color(std::span<const std::uint8_t> labels, double p,
                              double s, double eps) {
  if (!(s > 1.0)) {
    throw std::invalid_argument("red_blue_color: s must be > 1");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("red_blue_color: eps must be > 0");
  }
  std::int64_t n = static_cast<std::int64_t>(labels.size());
  std::int64_t b = std::llround(std::pow(eps, -1.5));
  if (b < 2) {
    throw std::invalid_argument("red_blue_color: eps too large, need b >= 2");
  }
  ColoringReport rep;
  rep.b = b;
  rep.eps_used = std::pow(static_cast<double>(b), -2.0 / 3.0);
  rep.snapped = std::abs(eps - rep.eps_used) > 1e-12;
  double drop_slope = critical_slope_clamped(p) - s * rep.eps_used;

  std::vector<std::int64_t> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t i = 0; i < n; ++i) {
    prefix[static_cast<std::size_t>(i + 1)] =
        prefix[static_cast<std::size_t>(i)] + labels[static_cast<std::size_t>(i)];
  }

  rep.tau.push_back(0);
  std::int64_t tau = 0;
  while (tau < n) {
    std::int64_t kmax = std::min<std::int64_t>(b - 1, n - tau);
    std::int64_t step = b;
    for (std::int64_t k = 1; k <= kmax; ++k) {
      double rise = static_cast<double>(prefix[static_cast<std::size_t>(tau + k)] -
                                        prefix[static_cast<std::size_t>(tau)]);
      if (rise <= static_cast<double>(k) * drop_slope) {
        step = k;
        break;
      }
    }
    std::int64_t tau_next = tau + step;
    bool red = tau_next < n && step < b;
    rep.segment_colors.push_back(red ? SegmentColor::kRed : SegmentColor::kBlue);
    if (step == b && tau <= n - b) {
      ++rep.good_count;
    }
    rep.tau.push_back(tau_next);
    tau = tau_next;
  }
  return rep;
}

std::int64_t critical_search_budget(double eps, std::int64_t n, double kappa_param) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("critical_search_budget: eps must be > 0");
  }
  if (n < 1) {
    throw std::invalid_argument("critical_search_budget: n must be >= 1");
  }
  if (!(kappa_param > 0.0 && kappa_param < 0.5)) {
    throw std::invalid_argument("critical_search_budget: kappa must lie in (0, 1/2)");
  }
  return static_cast<std::int64_t>(
      std::floor(kappa_param * static_cast<double>(n) / eps));
}

double subcritical_search_budget(double p, double s, double eps, std::int64_t n) {
  if (!(p > 0.0 && p < 0.5)) {
    throw std::invalid_argument("subcritical_search_budget: p must lie in (0, 1/2)");
  }
  if (!(s > 1.0)) {
    throw std::invalid_argument("subcritical_search_budget: s must be > 1");
  }
  if (n < 1) {
    throw std::invalid_argument("subcritical_search_budget: n must be >= 1");
  }
  double c = critical_slope(p);
  if (!(c - s * eps > p)) {
    throw std::invalid_argument("subcritical_search_budget: need c(p) - s*eps > p");
  }
  std::int64_t b = std::llround(std::pow(eps, -1.5));
  double rho = rho_dp(p, s * eps, b).value;
  if (!(rho > 0.0)) {
    throw std::domain_error("subcritical_search_budget: survival probability vanished at depth b");
  }
  return (s - 1.0) / (4.0 * (1.0 - c)) * std::pow(eps, 5.5) *
         static_cast<double>(n) / rho;
}

std::vector<std::uint8_t> path_labels(const LabelOracle& oracle,
                                      const VertexId& v) {
  std::vector<std::uint8_t> out;
  out.reserve(v.depth());
  std::uint64_t st = oracle.root_state();
  for (std::uint32_t k = 0; k < v.depth(); ++k) {
    st = child_state(st, v.bit(k));
    out.push_back(static_cast<std::uint8_t>(oracle.label_at_state(st)));
  }
  return out;
}

}  // namespace bsl
