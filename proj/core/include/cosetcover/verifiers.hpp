#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cosetcover/model.hpp"
#include "cosetcover/verdict.hpp"

namespace cosetcover {

/// Knobs shared by every checker.
struct RunOptions {
  /// Multiplicity m used by the m-cover hypotheses; 0 means "use m(A)".
  std::size_t m = 0;
  /// Index subset for the regular-system coset checks; unset means every admissible I.
  std::optional<IndexSet> subset;
  /// Subgroup H (carrier image) for the union-count and maximal-coset checks.
  std::optional<ElementSet> h;
  std::size_t regularity_cap = default_regularity_cap;
};

/// The m to use: opts.m when given, otherwise the covering multiplicity.
std::size_t effective_m(const CoverModel& model, const RunOptions& opts);

/// For the pair (i, j): either both subnormal with gcd([G:G_i], [G_i:G_i∩G_j]) = 1,
/// or both normal with G/(G_i∩G_j) cyclic. With require_subnormal false the
/// first branch only asks for the gcd condition.
bool pair_condition(const CoverModel& model, std::size_t i, std::size_t j, bool require_subnormal = true);
/// pair_condition over all ordered pairs, diagonal included.
bool all_pairs_condition(const CoverModel& model, bool require_subnormal = true);

/// Number of left cosets of H (a carrier subgroup inside every member's
/// subgroup) contained in the union of members, or of the bare subgroups.
std::uint64_t union_coset_count(const CoverModel& model, const ElementSet& h, bool identity_reps);
/// Distinct left cosets a_i H over the i with G_i ⊆ H.
std::uint64_t cosets_containing_members(const CoverModel& model, const ElementSet& h);

/// Minimal m-cover => [G : ∩G_i] <= k!; with identity representatives also
/// [G : ∩G_i] <= sum_{l=1..k} (-1)^(l-1) k!/l!.
Report check_index_factorial_bound(const CoverModel& model, const RunOptions& opts = {});

/// Exact m-cover => k >= m + f([G:G_i]) for each i with G/core(G_i) solvable,
/// and k >= m + d(G, ∩G_i) when every G_i is subnormal.
Report check_exact_cover_bounds(const CoverModel& model, const RunOptions& opts = {});

/// Minimal m-cover of an abelian group => k >= m + f([G:G_i]) for all i.
Report check_abelian_minimal_cover_bound(const CoverModel& model, const RunOptions& opts = {});

/// Regular cover with the pairwise condition => k >= m(A) + d(G, ∩G_i). On
/// cyclic carriers also checks that d equals f([G:∩G_i]).
Report check_regular_cover_depth_bound(const CoverModel& model, const RunOptions& opts = {});

/// The two special cases of the depth bound: cyclic G or normal Hall G_i in a
/// finite G; and k >= m + f([G:∩G_i]) for minimal m-covers when G is cyclic or
/// of squarefree order with normal G_i.
Report check_depth_bound_special_cases(const CoverModel& model, const RunOptions& opts = {});

/// Minimal m-cover by subnormal subgroups (identity representatives) =>
/// a composition series from ∩G_i to G with prime factors, and every perfect
/// subgroup lies in every G_i.
Report check_subnormal_subgroup_cover(const CoverModel& model, const RunOptions& opts = {});

/// Subnormal G_i ⊇ H with gcd([G:G_i],[G_i:H]) = 1 =>
/// [∪a_iG_i : H] >= [∪G_i : H]. H defaults to ∩G_i. Throws PreconditionError
/// when H is not inside every G_i.
Report check_coset_union_count(const CoverModel& model, const RunOptions& opts = {});

/// Finite G with normal Hall G_i => |∪a_iG_i| >= |∪G_i|.
Report check_hall_union_size(const CoverModel& model, const RunOptions& opts = {});

/// Regular system, one index set I: the union over I contains a left coset of
/// ∩_{j∉I} G_j; that subgroup holds at most |I|! cosets of ∩G_i; the power
/// property; the index inequality chain and the union-size bound.
/// Throws PreconditionError for I empty or for I = [1,k] on a non-cover.
Report check_regular_system_subset(const CoverModel& model, IndexSet subset, const RunOptions& opts = {});
/// Every admissible I, plus the subgroup-lattice inequality for all H.
Report check_regular_system(const CoverModel& model, const RunOptions& opts = {});

/// Regular system with the pairwise condition and H maximal (normal G_i) or
/// maximal normal (subnormal G_i) => the H-cosets containing some a_iG_i are
/// none or all of G/H. One H, or every maximal / maximal normal H when unset.
Report check_maximal_coset_dichotomy(const CoverModel& model, const RunOptions& opts = {});

/// Regular cover with the pairwise condition: every proper G_j has a disjoint
/// partner a_iG_i with G_i proper.
Report check_disjoint_partner(const CoverModel& model, const RunOptions& opts = {});

/// For each pair of member subgroups: coprime indices => G_iG_j = G; and a
/// disjoint pair of members has non-coprime indices.
Report check_coprime_product(const CoverModel& model, const RunOptions& opts = {});
/// For each ordered pair: (either subnormal, gcd([G:G_j],[G_j:G_i∩G_j]) = 1) =>
/// [G:G_i∩G_j] = lcm and the two containment/divisibility equivalences.
Report check_pair_index_lcm(const CoverModel& model, const RunOptions& opts = {});

/// Open conjecture: minimal m-cover by subnormal subgroups with
/// [G:∩G_i] = prod p^a > 1  =>  k > m + sum (a-1)(p-1).
Report check_subnormal_cover_conjecture(const CoverModel& model, const RunOptions& opts = {});
/// Open conjecture: k > 1 pairwise disjoint cosets => some pair has
/// gcd([G:G_i],[G:G_j]) >= k.
Report check_disjoint_gcd_conjecture(const CoverModel& model, const RunOptions& opts = {});

struct StatementInfo {
  std::string_view id;
  std::string_view title;
  /// false for the open conjectures: a counterexample there is a finding, not a bug.
  bool proved;
};

/// Every statement id accepted by run_statement, in a fixed order.
const std::vector<StatementInfo>& statements();
const StatementInfo& statement_info(std::string_view id);
/// Throws PreconditionError on an unknown id.
Report run_statement(std::string_view id, const CoverModel& model, const RunOptions& opts = {});

/// Largest gcd of index pairs, or 0 when k < 2.
std::uint64_t max_pair_gcd(const CoverModel& model);
bool pairwise_disjoint(const CoverModel& model);

struct CrossCheck {
  bool agree = true;
  std::vector<std::string> mismatches;
  std::size_t compared = 0;
};
/// Runs every statement that makes sense for both Z and finite groups on the
/// native residue model and on the cyclic-group transport, and compares the
/// check names and both flags.
CrossCheck cross_check(const ZSystem& system, const RunOptions& opts = {});

}  // namespace cosetcover
