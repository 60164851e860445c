#include "bsl/oracle.hpp"

#include <stdexcept>

namespace bsl {

bool QueryLedger::charge(const VertexId& v) {
  NodeRef node = 0;
  for (std::uint32_t k = 0; k < v.depth(); ++k) {
    node = extend(node, v.bit(k));
  }
  return charge_node(node);
}

bool QueryLedger::is_charged(const VertexId& v) const {
  NodeRef node = 0;
  for (std::uint32_t k = 0; k < v.depth(); ++k) {
    node = nodes_[node].kid[v.bit(k)];
    if (node == kNone) {
      return false;
    }
  }
  return nodes_[node].charged;
}

QueryLedger::NodeRef QueryLedger::extend(NodeRef node, int bit) {
  NodeRef kid = nodes_[node].kid[bit];
  if (kid == kNone) {
    kid = static_cast<NodeRef>(nodes_.size());
    nodes_[node].kid[bit] = kid;
    nodes_.push_back(Node{});
  }
  return kid;
}

bool QueryLedger::charge_node(NodeRef node) {
  if (nodes_[node].charged) {
    return false;
  }
  nodes_[node].charged = true;
  ++count_;
  return true;
}

LabelOracle::LabelOracle(std::uint64_t master_seed, double p)
    : master_seed_(master_seed), root_state_(mix64(master_seed)), p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("LabelOracle: p must lie in [0, 1]");
  }
}

std::uint64_t LabelOracle::state_of(const VertexId& v) const {
  std::uint64_t s = root_state_;
  for (std::uint32_t k = 0; k < v.depth(); ++k) {
    s = child_state(s, v.bit(k));
  }
  return s;
}

int LabelOracle::label(const VertexId& v, QueryMode mode) {
  if (mode == QueryMode::kCharged && !v.is_root()) {
    ledger_.charge(v);
  }
  return label_at_state(state_of(v));
}

std::int64_t LabelOracle::path_sum(const VertexId& v, QueryMode mode) {
  std::uint64_t s = root_state_;
  std::int64_t sum = 0;
  QueryLedger::NodeRef node = ledger_.root_node();
  for (std::uint32_t k = 0; k < v.depth(); ++k) {
    int bit = v.bit(k);
    s = child_state(s, bit);
    sum += label_at_state(s);
    if (mode == QueryMode::kCharged) {
      node = ledger_.extend(node, bit);
      ledger_.charge_node(node);
    }
  }
  return sum;
}

LabelOracle derive_trial_oracle(std::uint64_t master_seed, double p,
                                std::uint64_t trial_index) {
  return LabelOracle(master_seed + trial_index * kGolden, p);
}

}  // namespace bsl
