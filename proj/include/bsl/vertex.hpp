#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace bsl {

// One vertex of the infinite rooted binary tree, addressed by depth plus the
// child choices along the root path (bit k is the k-th step, 0 = left).
// Bits are packed most-significant-first inside each word so that word-wise
// comparison of equal-depth vertices matches the "least binary number" order.
class VertexId {
 public:
  static constexpr std::uint32_t kDepthCap = 1u << 16;

  VertexId() = default;  // the root
  static VertexId root() { return VertexId{}; }
  static VertexId from_bits(std::string_view bits);

  std::uint32_t depth() const { return depth_; }
  bool is_root() const { return depth_ == 0; }

  int bit(std::uint32_t k) const;  // pre: k < depth()

  VertexId child(int bit) const;
  VertexId parent() const;  // pre: !is_root()
  // Prefix of length depth() - generations_back (the ancestor that far up).
  VertexId ancestor(std::uint32_t generations_back) const;

  // In-place child/parent steps for hot path walks.
  void push_bit(int bit);
  void pop_bit();

  std::string to_string() const;

  friend bool operator==(const VertexId& a, const VertexId& b) {
    return a.depth_ == b.depth_ && a.words_ == b.words_;
  }

  // "Least binary number" order; callers must pass equal-depth vertices.
  static bool lex_less(const VertexId& a, const VertexId& b);

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::uint32_t depth_ = 0;
  std::vector<std::uint64_t> words_;
};

// Restart-frontier order: shallower first, then leftmost.
struct DepthLexLess {
  bool operator()(const VertexId& a, const VertexId& b) const {
    if (a.depth() != b.depth()) return a.depth() < b.depth();
    return VertexId::lex_less(a, b);
  }
};

}  // namespace bsl

template <>
struct std::hash<bsl::VertexId> {
  std::size_t operator()(const bsl::VertexId& v) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull ^ v.depth();
    for (std::uint64_t w : v.words()) {
      h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};
