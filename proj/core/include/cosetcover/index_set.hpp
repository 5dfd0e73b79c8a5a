#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>

namespace cosetcover {

/// Subset of the system positions {0, ..., k-1} packed into a machine word.
/// Printed 1-based, matching the usual [1,k] numbering of a coset system.
class IndexSet {
 public:
  static constexpr std::size_t max_size = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr IndexSet full(std::size_t k) {
    return IndexSet(k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1));
  }
  static constexpr IndexSet single(std::size_t i) { return IndexSet(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  constexpr IndexSet with(std::size_t i) const { return IndexSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr IndexSet without(std::size_t i) const { return IndexSet(bits_ & ~(std::uint64_t{1} << i)); }
  /// Complement within [0, k).
  constexpr IndexSet complement(std::size_t k) const { return IndexSet(full(k).bits_ & ~bits_); }

  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;
  friend constexpr auto operator<=>(IndexSet a, IndexSet b) = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    auto b = bits_;
    while (b != 0) {
      fn(static_cast<std::size_t>(std::countr_zero(b)));
      b &= b - 1;
    }
  }

  /// "{1,3}" style, 1-based.
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace cosetcover
