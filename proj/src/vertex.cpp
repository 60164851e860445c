#include "bsl/vertex.hpp"

#include <stdexcept>

namespace bsl {

namespace {
constexpr std::uint64_t bit_mask(std::uint32_t k) {
  return 1ull << (63 - (k & 63));
}
}  // namespace

VertexId VertexId::from_bits(std::string_view bits) {
  VertexId v;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("VertexId::from_bits: bits must be 0 or 1");
    }
    v.push_bit(ch == '1' ? 1 : 0);
  }
  return v;
}

int VertexId::bit(std::uint32_t k) const {
  return (words_[k >> 6] & bit_mask(k)) != 0 ? 1 : 0;
}

void VertexId::push_bit(int bit) {
  if (depth_ >= kDepthCap) {
    throw std::length_error("VertexId: depth cap exceeded");
  }
  if ((depth_ & 63) == 0) {
    words_.push_back(0);
  }
  if (bit) {
    words_.back() |= bit_mask(depth_);
  }
  ++depth_;
}

void VertexId::pop_bit() {
  if (depth_ == 0) {
    throw std::logic_error("VertexId: root has no parent");
  }
  --depth_;
  words_.back() &= ~bit_mask(depth_);
  if ((depth_ & 63) == 0) {
    words_.pop_back();
  }
}

VertexId VertexId::child(int bit) const {
  VertexId v = *this;
  v.push_bit(bit);
  return v;
}

VertexId VertexId::parent() const {
  VertexId v = *this;
  v.pop_bit();
  return v;
}

VertexId VertexId::ancestor(std::uint32_t generations_back) const {
  if (generations_back > depth_) {
    throw std::out_of_range("VertexId::ancestor: beyond the root");
  }
  VertexId v;
  v.depth_ = depth_ - generations_back;
  if (v.depth_ > 0) {
    std::uint32_t last = v.depth_ - 1;
    v.words_.assign(words_.begin(), words_.begin() + (last >> 6) + 1);
    // Clear bits past the prefix in the final word.
    std::uint32_t used = (last & 63) + 1;
    if (used < 64) {
      v.words_.back() &= ~0ull << (64 - used);
    }
  }
  return v;
}

std::string VertexId::to_string() const {
  std::string s;
  s.reserve(depth_);
  for (std::uint32_t k = 0; k < depth_; ++k) {
    s.push_back(bit(k) ? '1' : '0');
  }
  return s;
}

bool VertexId::lex_less(const VertexId& a, const VertexId& b) {
  return a.words_ < b.words_;
}

}  // namespace bsl
