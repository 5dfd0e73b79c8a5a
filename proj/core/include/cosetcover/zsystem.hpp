#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cosetcover/analysis.hpp"

namespace cosetcover {

/// The residue class a + nZ with canonical residue 0 <= a < n.
class ResidueClass {
 public:
  /// Any integer residue is accepted and reduced mod n. Throws ParseError
  /// when n <= 0.
  ResidueClass(std::int64_t a, std::int64_t n);

  std::uint64_t residue() const noexcept { return a_; }
  std::uint64_t modulus() const noexcept { return n_; }
  bool contains(std::int64_t x) const noexcept;

  /// "a/n"
  std::string to_string() const;

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
  friend auto operator<=>(const ResidueClass& l, const ResidueClass& r) {
    if (auto c = l.n_ <=> r.n_; c != 0) return c;
    return l.a_ <=> r.a_;
  }

 private:
  std::uint64_t a_;
  std::uint64_t n_;
};

inline constexpr std::uint64_t default_period_cap = 1'000'000;

/// A finite system of residue classes; period is the lcm of the moduli.
class ZSystem {
 public:
  /// Throws PreconditionError on an empty list and CapExceeded when the
  /// period exceeds period_cap.
  explicit ZSystem(std::vector<ResidueClass> classes, std::uint64_t period_cap = default_period_cap);

  const std::vector<ResidueClass>& classes() const noexcept { return classes_; }
  std::size_t k() const noexcept { return classes_.size(); }
  std::uint64_t period() const noexcept { return period_; }

  /// Comma-separated "a/n" tokens; parse_zsystem accepts it back.
  std::string to_string() const;

  friend bool operator==(const ZSystem& l, const ZSystem& r) { return l.classes_ == r.classes_; }

 private:
  std::vector<ResidueClass> classes_;
  std::uint64_t period_ = 1;
};

/// Tokens "a/n" or "a mod n" separated by commas and/or whitespace.
ZSystem parse_zsystem(std::string_view text, std::uint64_t period_cap = default_period_cap);

/// Carrier {0..P-1} with P = period (or the supplied multiple of it). Point x
/// stands for the class x + P*Z.
CoverInstance zsystem_to_instance(const ZSystem& system);
CoverInstance zsystem_to_instance(const ZSystem& system, std::uint64_t carrier_period);

}  // namespace cosetcover
