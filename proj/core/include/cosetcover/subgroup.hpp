#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cosetcover/analysis.hpp"
#include "cosetcover/group.hpp"
#include "cosetcover/verdict.hpp"

namespace cosetcover {

/// Element set of a subgroup of some FiniteGroup. The parent group is passed
/// explicitly to every operation; a Subgroup only remembers the parent order.
class Subgroup {
 public:
  Subgroup() = default;
  /// No closure check; use subgroup_generated or validate_subgroup for
  /// untrusted input.
  explicit Subgroup(ElementSet elements) : elements_(std::move(elements)) {}

  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);

  const ElementSet& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.count(); }
  bool contains(Element x) const noexcept { return elements_.contains(x); }
  bool is_subgroup_of(const Subgroup& other) const noexcept { return elements_.is_subset_of(other.elements_); }
  std::vector<Element> sorted() const { return elements_.elements(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  ElementSet elements_;
};

inline std::size_t group_index(const FiniteGroup& g, const Subgroup& h) { return g.order() / h.order(); }

/// Smallest subgroup containing gens. Throws PreconditionError on an element
/// index outside the group.
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Element>& gens);
/// Throws PreconditionError unless elements form a subgroup.
Subgroup validate_subgroup(const FiniteGroup& g, const std::vector<Element>& elements);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// Subgroup generated by the union.
Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

inline constexpr std::size_t default_lattice_cap = 192;

/// Every subgroup, sorted by order then lexicographic element list. Built by
/// closing joins of cyclic subgroups. Throws CapExceeded when |G| > cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t cap = default_lattice_cap);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
/// Normality of h inside the subgroup k (h <= k).
bool is_normal_in(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);
/// Smallest normal subgroup of k containing h.
Subgroup normal_closure(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);
/// Intersection of the conjugates of h.
Subgroup normal_core(const FiniteGroup& g, const Subgroup& h);

struct SubnormalResult {
  bool subnormal = false;
  /// G = K_0 > K_1 > ... > K_r with K_{j+1} the normal closure of H in K_j.
  /// Ends at H exactly when subnormal.
  std::vector<Subgroup> chain;
};
SubnormalResult subnormal_chain(const FiniteGroup& g, const Subgroup& h);
bool is_subnormal(const FiniteGroup& g, const Subgroup& h);

bool is_hall(const FiniteGroup& g, const Subgroup& h);

Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& h);
bool is_perfect(const FiniteGroup& g, const Subgroup& h);
bool is_solvable(const FiniteGroup& g, const Subgroup& h);
/// G/N solvable, decided via the derived series of G reaching inside N.
bool is_solvable_quotient(const FiniteGroup& g, const Subgroup& n);

struct Quotient {
  FiniteGroup group;
  /// Canonical (minimal) representative of each coset, indexed by quotient element.
  std::vector<Element> representatives;
  /// Quotient element of each parent element.
  std::vector<Element> projection;
};
/// Throws PreconditionError unless n is normal.
Quotient quotient_group(const FiniteGroup& g, const Subgroup& n);

/// The subgroup as a group in its own right, elements re-indexed in ascending order.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, std::string label = {});

/// Is G/N cyclic (n normal)?
bool quotient_is_cyclic(const FiniteGroup& g, const Subgroup& n);

enum class SeriesTieBreak { smallest, largest };

/// H = chain[0] < chain[1] < ... < chain.back() = G with simple factors.
struct CompositionSeries {
  std::vector<Subgroup> chain;
  std::vector<std::uint64_t> factor_orders;  // |chain[i+1] / chain[i]|

  std::uint64_t depth() const;
};

/// Normal subgroups N of `upper` with lower <= N (lower normal in upper).
std::vector<Subgroup> normal_subgroups_between(const FiniteGroup& g, const Subgroup& lower, const Subgroup& upper);

/// Refines the subnormal chain of h; each step descends to a maximal proper
/// normal subgroup of the current term containing the next chain term.
/// Throws PreconditionError when h is not subnormal.
CompositionSeries composition_series(const FiniteGroup& g, const Subgroup& h,
                                     SeriesTieBreak tie = SeriesTieBreak::smallest);
/// d(G,H) = sum of (factor order - 1). Throws PreconditionError when h is not subnormal.
std::uint64_t depth_d(const FiniteGroup& g, const Subgroup& h);

/// { h k : h in H, k in K }
ElementSet product_set(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);
/// gcd([G:H],[G:K]) = 1  implies  HK = G.
Verdict check_lemma21(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);
/// (H or K subnormal) and gcd([G:K],[K:H∩K]) = 1  implies
/// [G:H∩K] = lcm([G:H],[G:K]) and the two divisibility equivalences.
Verdict check_lemma31(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

Subgroup centralizer(const FiniteGroup& g, Element x);
Subgroup center(const FiniteGroup& g);

/// Left coset rep*sub with rep canonicalized to the smallest element.
struct Coset {
  Element rep = 0;
  Subgroup sub;

  Coset() = default;
  Coset(const FiniteGroup& g, Element any_rep, Subgroup subgroup);
  ElementSet elements(const FiniteGroup& g) const;
  friend bool operator==(const Coset& a, const Coset& b) { return a.rep == b.rep && a.sub == b.sub; }
};

/// Finite list of left cosets in one group.
struct CosetSystem {
  GroupPtr group;
  std::vector<Coset> items;

  std::size_t k() const noexcept { return items.size(); }
};

CoverInstance cosetsystem_to_instance(const CosetSystem& system);

/// Greedy maximal pairwise non-commuting set, in element-index order, skipping
/// central elements.
std::vector<Element> maximal_noncommuting_set(const FiniteGroup& g);
/// {C_G(x) : x in a maximal pairwise non-commuting set} as subgroups with
/// identity representatives. Asserts that the centralizers meet in Z(G) and
/// form a minimal cover. Throws PreconditionError for abelian G.
CosetSystem centralizer_cover(const GroupPtr& g);

}  // namespace cosetcover
