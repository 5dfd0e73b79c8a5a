#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cosetcover/analysis.hpp"
#include "cosetcover/mycielski.hpp"
#include "cosetcover/subgroup.hpp"
#include "cosetcover/zsystem.hpp"

namespace cosetcover {

/// Group-theoretic view of a coset system a_1G_1, ..., a_kG_k in G, realised
/// on a finite carrier G/K for a normal K inside every G_i (K trivial for
/// finite groups, K = PZ for residue systems of period P).
///
/// Element sets returned here are subsets of the carrier. Indices, normality,
/// subnormality and series data refer to G itself.
class CoverModel {
 public:
  virtual ~CoverModel() = default;

  /// "z" or "group"
  virtual std::string kind() const = 0;
  virtual std::string describe() const = 0;

  const CoverInstance& instance() const noexcept { return *instance_; }
  std::size_t k() const noexcept { return instance_->k(); }
  std::size_t carrier_size() const noexcept { return instance_->carrier_size(); }
  const ElementSet& member(std::size_t i) const { return instance_->member(i); }

  virtual Element multiply(Element x, Element y) const = 0;
  virtual Element power(Element x, std::uint64_t e) const = 0;
  /// Order of x in the carrier group.
  virtual std::uint64_t element_order(Element x) const = 0;

  /// Carrier image of G_i.
  virtual ElementSet subgroup_set(std::size_t i) const = 0;
  /// a_i G_i == G_i
  bool rep_is_identity(std::size_t i) const { return member(i).contains(0); }

  /// [G : G_i]
  virtual std::uint64_t index(std::size_t i) const = 0;
  /// [G : intersection of G_j, j in J]; 1 for J empty.
  virtual std::uint64_t meet_index(IndexSet j) const = 0;
  /// Carrier image of the intersection; the whole carrier for J empty.
  virtual ElementSet meet_set(IndexSet j) const = 0;

  virtual bool finite_group() const = 0;
  virtual bool abelian() const = 0;
  virtual bool cyclic() const = 0;
  virtual bool normal(std::size_t i) const = 0;
  virtual bool subnormal(std::size_t i) const = 0;
  /// The intersection over J is normal in G and the quotient is cyclic.
  virtual bool meet_quotient_cyclic(IndexSet j) const = 0;
  /// G / core(G_i) is solvable.
  virtual bool core_quotient_solvable(std::size_t i) const = 0;
  /// Factor orders of a composition series from the intersection over J up to
  /// G; nullopt when the intersection is not subnormal.
  virtual std::optional<std::vector<std::uint64_t>> composition_factors(IndexSet j) const = 0;

  /// Carrier images of all subgroups of G containing K, sorted by size then
  /// lexicographically.
  virtual const std::vector<ElementSet>& lattice() const = 0;
  /// Perfect subgroups of G (carrier images).
  virtual std::vector<ElementSet> perfect_subgroups() const = 0;
  virtual bool maximal(const ElementSet& h) const = 0;
  virtual bool maximal_normal(const ElementSet& h) const = 0;

  /// d(G, intersection of all G_i), when defined.
  std::optional<std::uint64_t> depth_all() const;

  /// x*H for a carrier subset H.
  ElementSet translate(Element x, const ElementSet& h) const;
  /// Size of the product set A*B, B a subgroup.
  std::size_t product_size(const ElementSet& a, const ElementSet& b) const;

 protected:
  explicit CoverModel(std::shared_ptr<const CoverInstance> inst) : instance_(std::move(inst)) {}

 private:
  std::shared_ptr<const CoverInstance> instance_;
};

/// Residue-class systems over Z, with every group quantity computed from the
/// moduli by integer arithmetic.
class ZModel final : public CoverModel {
 public:
  explicit ZModel(const ZSystem& system);
  /// Carrier Z / carrier_period Z, carrier_period a multiple of the period.
  ZModel(const ZSystem& system, std::uint64_t carrier_period);

  const ZSystem& system() const noexcept { return system_; }
  std::uint64_t carrier_period() const noexcept { return period_; }

  std::string kind() const override { return "z"; }
  std::string describe() const override;
  Element multiply(Element x, Element y) const override;
  Element power(Element x, std::uint64_t e) const override;
  std::uint64_t element_order(Element x) const override { return period_ / gcd_u64(x, period_); }
  ElementSet subgroup_set(std::size_t i) const override;
  std::uint64_t index(std::size_t i) const override;
  std::uint64_t meet_index(IndexSet j) const override;
  ElementSet meet_set(IndexSet j) const override;
  bool finite_group() const override { return false; }
  bool abelian() const override { return true; }
  bool cyclic() const override { return true; }
  bool normal(std::size_t) const override { return true; }
  bool subnormal(std::size_t) const override { return true; }
  bool meet_quotient_cyclic(IndexSet) const override { return true; }
  bool core_quotient_solvable(std::size_t) const override { return true; }
  std::optional<std::vector<std::uint64_t>> composition_factors(IndexSet j) const override;
  const std::vector<ElementSet>& lattice() const override;
  std::vector<ElementSet> perfect_subgroups() const override;
  bool maximal(const ElementSet& h) const override;
  bool maximal_normal(const ElementSet& h) const override { return maximal(h); }

  /// The subgroup dZ as a carrier set (d must divide the carrier period).
  ElementSet multiples_of(std::uint64_t d) const;

 private:
  /// d with h == dZ / PZ, or 0 when h is not of that form.
  std::uint64_t generator_of(const ElementSet& h) const;

  ZSystem system_;
  std::uint64_t period_;
  mutable std::once_flag lattice_once_;
  mutable std::vector<ElementSet> lattice_;
};

struct GroupFacts;
struct LatticeFacts;

/// Coset systems in an explicit finite group; quantities come from the
/// subgroup algorithms on the Cayley table.
class GroupModel final : public CoverModel {
 public:
  explicit GroupModel(CosetSystem system, std::size_t lattice_cap = default_lattice_cap);

  const CosetSystem& system() const noexcept { return system_; }
  const FiniteGroup& group() const noexcept { return *system_.group; }

  std::string kind() const override { return "group"; }
  std::string describe() const override;
  Element multiply(Element x, Element y) const override { return group().mul(x, y); }
  Element power(Element x, std::uint64_t e) const override { return group().pow(x, e); }
  std::uint64_t element_order(Element x) const override { return group().element_order(x); }
  ElementSet subgroup_set(std::size_t i) const override { return system_.items.at(i).sub.elements(); }
  std::uint64_t index(std::size_t i) const override;
  std::uint64_t meet_index(IndexSet j) const override;
  ElementSet meet_set(IndexSet j) const override;
  bool finite_group() const override { return true; }
  bool abelian() const override { return group().is_abelian(); }
  bool cyclic() const override { return group().is_cyclic(); }
  bool normal(std::size_t i) const override;
  bool subnormal(std::size_t i) const override;
  bool meet_quotient_cyclic(IndexSet j) const override;
  bool core_quotient_solvable(std::size_t i) const override;
  std::optional<std::vector<std::uint64_t>> composition_factors(IndexSet j) const override;
  const std::vector<ElementSet>& lattice() const override;
  std::vector<ElementSet> perfect_subgroups() const override;
  bool maximal(const ElementSet& h) const override;
  bool maximal_normal(const ElementSet& h) const override;

 private:
  const LatticeFacts& lattice_facts() const;

  CosetSystem system_;
  std::size_t lattice_cap_;
  /// Per-group memo shared by every model on the same group object.
  std::shared_ptr<GroupFacts> facts_;
  std::vector<char> normal_, subnormal_;
};

/// The same system inside the cyclic group Z_P (P = carrier period), with
/// G_i = n_i Z_P and a_i reduced mod P.
CosetSystem transport_to_cyclic(const ZSystem& system, std::uint64_t carrier_period = 0,
                                std::size_t order_cap = default_group_order_cap);

}  // namespace cosetcover
