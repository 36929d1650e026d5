#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace hlink {

/// Fixed-universe bitset over vertex indices 0..size-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const noexcept { return universe_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  bool contains(int v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(int v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  int count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// True iff this set and `other` (same universe) share an element.
  bool intersects(std::span<const std::uint64_t> other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other[i]) return true;
    return false;
  }

  /// Calls f(v) for each member in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        int bit = std::countr_zero(w);
        f(static_cast<int>(i * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace hlink
