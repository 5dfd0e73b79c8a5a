#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cosetcover/element_set.hpp"
#include "cosetcover/index_set.hpp"

namespace cosetcover {

/// Where a CoverInstance came from. Z-periodic carriers stand for the residue
/// classes x + period*Z; group carriers are the group elements themselves.
struct Provenance {
  enum class Kind { z_periodic, group, abstract };
  Kind kind = Kind::abstract;
  std::uint64_t period = 0;  // z_periodic only
  std::string label;         // group spec or system text
};

/// A finite carrier {0..M-1} with k membership bitmaps. All cover-property
/// analysis runs on this representation.
///
/// The per-element index masks ([1,k]^*(x) for every x) are computed once at
/// construction; instances are immutable afterwards.
class CoverInstance {
 public:
  CoverInstance(std::size_t carrier_size, std::vector<ElementSet> members, Provenance provenance = {});

  std::size_t carrier_size() const noexcept { return carrier_size_; }
  std::size_t k() const noexcept { return members_.size(); }
  const std::vector<ElementSet>& members() const noexcept { return members_; }
  const ElementSet& member(std::size_t i) const { return members_.at(i); }
  const Provenance& provenance() const noexcept { return provenance_; }

  /// Full index set of x, i.e. { i : x in member i }.
  IndexSet mask(Element x) const { return IndexSet(masks_.at(x)); }
  const std::vector<std::uint64_t>& masks() const noexcept { return masks_; }

  /// Same carrier with member i removed.
  CoverInstance without(std::size_t i) const;
  /// Subsystem on the given positions (in ascending order).
  CoverInstance restrict_to(IndexSet positions) const;

 private:
  std::size_t carrier_size_;
  std::vector<ElementSet> members_;
  std::vector<std::uint64_t> masks_;
  Provenance provenance_;
};

/// I^*(x) = { i in I : x in member i }.
IndexSet index_map(const CoverInstance& inst, IndexSet positions, Element x);

/// Minimum over the carrier of |[1,k]^*(x)|.
std::size_t multiplicity(const CoverInstance& inst);

bool is_m_cover(const CoverInstance& inst, std::size_t m);
bool is_exact_m_cover(const CoverInstance& inst, std::size_t m);

/// m-cover in which dropping any single member breaks the m-cover property.
/// Coverage counts only decrease under deletion, so single deletions decide
/// minimality against every proper subsystem.
bool is_minimal_m_cover(const CoverInstance& inst, std::size_t m);

/// Reference implementation of minimality that tries every proper subsystem.
/// Exponential in k; used to validate is_minimal_m_cover.
bool is_minimal_m_cover_exhaustive(const CoverInstance& inst, std::size_t m);

/// Default cap on k for the regularity test (2^k subsets are examined).
inline constexpr std::size_t default_regularity_cap = 20;

/// Regular system: for no nonempty proper I is {I^*(x)} contained in
/// {[1,k]^*(x)}. With require_cover the system must also cover the carrier.
/// Throws CapExceeded when k > cap.
bool is_regular(const CoverInstance& inst, bool require_cover = false,
                std::size_t cap = default_regularity_cap);

/// When is_regular fails, a nonempty proper I whose image lies inside the full
/// image; empty IndexSet when the system is regular.
IndexSet regularity_obstruction(const CoverInstance& inst, std::size_t cap = default_regularity_cap);

bool is_partition(const CoverInstance& inst);

}  // namespace cosetcover
