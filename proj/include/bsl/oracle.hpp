#pragma once

#include <cstdint>
#include <vector>

#include "bsl/vertex.hpp"

namespace bsl {

inline constexpr std::uint64_t kChildTag[2] = {0x9E3779B97F4A7C15ull,
                                               0xD1B54A32D192ED03ull};
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer; the only mixing primitive in the label PRF.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

constexpr std::uint64_t child_state(std::uint64_t state, int bit) {
  return mix64(state ^ kChildTag[bit]);
}

// Uniform real in [0, 1) from the top 53 bits of a state.
constexpr double unit_real(std::uint64_t state) {
  return static_cast<double>(state >> 11) * 0x1p-53;
}

enum class QueryMode { kCharged, kAudit };

// Dedup set of charged vertices plus the distinct-charge counter that defines
// search time t. Stored as a bit trie so root-to-leaf charge sequences cost
// O(1) per step through node handles.
class QueryLedger {
 public:
  using NodeRef = std::uint32_t;
  static constexpr NodeRef kNone = 0xFFFFFFFFu;

  QueryLedger() { nodes_.push_back(Node{}); }

  // Charge v; returns true when v was not charged before. Audit reads never
  // call this. The root itself is never charged by any algorithm.
  bool charge(const VertexId& v);
  bool is_charged(const VertexId& v) const;
  std::int64_t count() const { return count_; }

  // Cursor access for hot loops: extend() creates the child node (uncharged)
  // if absent, charge_node() marks it and bumps the counter once.
  NodeRef root_node() const { return 0; }
  NodeRef extend(NodeRef node, int bit);
  NodeRef child_node(NodeRef node, int bit) const {
    return nodes_[node].kid[bit];
  }
  bool charge_node(NodeRef node);
  bool node_charged(NodeRef node) const { return nodes_[node].charged; }

 private:
  struct Node {
    NodeRef kid[2] = {kNone, kNone};
    bool charged = false;
  };
  std::vector<Node> nodes_;
  std::int64_t count_ = 0;
};

// Lazy infinite tree of deterministic Bernoulli(p) labels. label() is a pure
// function of (master_seed, vertex); the ledger is the only mutable state.
class LabelOracle {
 public:
  LabelOracle(std::uint64_t master_seed, double p);

  double p() const { return p_; }
  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t root_state() const { return root_state_; }

  std::uint64_t state_of(const VertexId& v) const;  // O(depth)
  int label_at_state(std::uint64_t state) const {
    return unit_real(state) < p_ ? 1 : 0;
  }

  int label(const VertexId& v, QueryMode mode);
  // S(v): labels summed over the root-to-v path, excluding the root's own
  // label (S(root) = 0). Charged mode charges every non-root path vertex.
  std::int64_t path_sum(const VertexId& v, QueryMode mode);

  QueryLedger& ledger() { return ledger_; }
  const QueryLedger& ledger() const { return ledger_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t root_state_;
  double p_;
  QueryLedger ledger_;
};

// Independent tree for one Monte Carlo trial; bit-identical across runs.
LabelOracle derive_trial_oracle(std::uint64_t master_seed, double p,
                                std::uint64_t trial_index);

}  // namespace bsl
