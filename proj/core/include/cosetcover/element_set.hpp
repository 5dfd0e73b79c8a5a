#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace cosetcover {

using Element = std::uint32_t;

/// Fixed-universe dynamic bitset over carrier elements {0, ..., size-1}.
///
/// Used for subgroup element sets, coset membership bitmaps and search
/// coverage masks. Universes are small (group orders, Z periods), so the
/// representation is a flat word vector with no sparse tricks.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  void insert(Element x) noexcept { words_[x >> 6] |= (std::uint64_t{1} << (x & 63)); }
  void erase(Element x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
  bool contains(Element x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1U;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Calls fn(x) for each member in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits != 0) {
        auto tz = std::countr_zero(bits);
        fn(static_cast<Element>(w * 64 + static_cast<std::size_t>(tz)));
        bits &= bits - 1;
      }
    }
  }

  /// Smallest member; universe() when empty.
  Element first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0)
        return static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    return static_cast<Element>(universe_);
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ (w + (h >> 7));
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Size first, then lexicographic comparison of the sorted element lists.
bool size_lex_less(const ElementSet& a, const ElementSet& b);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace cosetcover
