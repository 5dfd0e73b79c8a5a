#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cosetcover/element_set.hpp"

namespace cosetcover {

inline constexpr std::size_t default_group_order_cap = 360;

/// A finite group given by its full composition table over element indices
/// 0..n-1. Element 0 is always the identity.
class FiniteGroup {
 public:
  /// Validates closure, identity, inverses and associativity (exhaustively for
  /// n <= 128, by seeded sampling above), then re-indexes so that the identity
  /// is element 0. Throws PreconditionError on a table that is not a group.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& table, std::string label);

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return 0; }
  Element mul(Element a, Element b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Element inv(Element a) const noexcept { return inverses_[a]; }
  /// g h g^-1
  Element conj(Element g, Element h) const noexcept { return mul(mul(g, h), inv(g)); }
  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Element pow(Element a, std::uint64_t e) const noexcept;
  std::uint64_t element_order(Element a) const noexcept;

  bool is_abelian() const noexcept;
  bool is_cyclic() const noexcept;

  const std::string& label() const noexcept { return label_; }
  std::vector<std::vector<Element>> table() const;
  ElementSet all() const { return ElementSet::full(n_); }

 private:
  FiniteGroup(std::size_t n, std::vector<Element> flat, std::string label);

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

FiniteGroup cyclic_group(std::size_t n);
/// Symmetric group on k points; elements are permutations in lexicographic order.
FiniteGroup symmetric_group(std::size_t k);
/// Even permutations of k points, lexicographic order.
FiniteGroup alternating_group(std::size_t k);
/// Dihedral group of order 2n; element r^i s^j has index j*n + i.
FiniteGroup dihedral_group(std::size_t n);
/// Quaternion group; indices 0..7 are 1,-1,i,-i,j,-j,k,-k.
FiniteGroup quaternion_group();
/// Pairs (a,b) at index a*|B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string label = {});

/// Permutation of {0..k-1} represented by index 'element' of symmetric_group(k).
std::vector<std::size_t> symmetric_permutation(std::size_t k, Element element);
/// Index in symmetric_group(k) of the given permutation (images of 0..k-1).
Element symmetric_index(const std::vector<std::size_t>& perm);

/// Spec strings: Zn, Sk, An, Dn, Q8 and 'x'-joined products such as Z2xS3.
/// Throws ParseError for an unknown spec, CapExceeded above order_cap.
FiniteGroup make_group(std::string_view spec, std::size_t order_cap = default_group_order_cap);
GroupPtr make_group_ptr(std::string_view spec, std::size_t order_cap = default_group_order_cap);

/// Specs of the built-in family with order <= max_order, in a fixed order.
/// Cyclic groups, symmetric, alternating, dihedral, Q8 and small direct
/// products; isomorphic duplicates are possible.
std::vector<std::string> builtin_family(std::size_t max_order);

}  // namespace cosetcover
