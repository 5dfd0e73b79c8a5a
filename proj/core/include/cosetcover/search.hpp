#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cosetcover/model.hpp"
#include "cosetcover/subgroup.hpp"
#include "cosetcover/verifiers.hpp"
#include "cosetcover/zsystem.hpp"

namespace cosetcover {

enum class Predicate {
  minimal_cover,      // minimal m-cover
  exact_cover,        // exact m-cover
  cover,              // m-cover, redundant members allowed
  regular_cover,      // regular system that is an m-cover
  regular_system,     // regular system, cover or not
  pairwise_disjoint,  // at least two members, pairwise disjoint
};

std::string to_string(Predicate p);
/// Accepts the names printed by to_string. Throws ParseError otherwise.
Predicate parse_predicate(std::string_view text);

inline constexpr std::uint64_t search_period_cap = 720;
inline constexpr std::size_t search_k_cap = 12;

struct SearchSpec {
  enum class Target { z, group };
  Target target = Target::z;

  // Z target: every system whose period lies in [min_period, max_period].
  std::uint64_t min_period = 1;
  std::uint64_t max_period = 12;
  bool distinct_moduli = false;

  // Group target.
  std::string group;

  std::size_t min_k = 1;
  std::size_t max_k = 4;
  std::size_t m = 1;
  Predicate predicate = Predicate::minimal_cover;

  /// Members restricted to subgroups (identity representatives).
  bool subgroups_only = false;
  bool subnormal_only = false;
  /// Exclude the whole group as a member.
  bool proper_only = false;

  unsigned jobs = 1;
  std::size_t regularity_cap = default_regularity_cap;

  /// Throws PreconditionError / CapExceeded when a bound is out of range.
  void validate() const;
};

/// One enumerated system; exactly one of z / cosets is set.
struct Found {
  std::optional<ZSystem> z;
  std::optional<CosetSystem> cosets;

  std::unique_ptr<CoverModel> model() const;
  std::string to_string() const;
};

/// Every system satisfying the spec, each multiset of members once, in a
/// deterministic order (by period, then by search order).
void enumerate(const SearchSpec& spec, const std::function<void(const Found&)>& sink);
std::vector<Found> enumerate_all(const SearchSpec& spec);

/// Work split: enumerate shard s of shard_count(spec) only. Concatenating the
/// shards in index order reproduces enumerate().
std::size_t shard_count(const SearchSpec& spec);
void enumerate_shard(const SearchSpec& spec, std::size_t shard, const std::function<void(const Found&)>& sink);

/// The partition {G_1, (12)G_2, ..., (1k)G_k} of S_k by point stabilizers.
/// Throws PreconditionError unless 2 <= k <= 6.
CosetSystem construct_example21(std::size_t k);

struct HuntReport {
  std::string statement;
  std::uint64_t examined = 0;
  std::uint64_t hypotheses_held = 0;
  std::uint64_t confirmed = 0;
  std::uint64_t tight = 0;
  std::vector<std::string> tight_cases;  // first few, in enumeration order
  std::vector<std::string> counterexamples;
  /// Disjoint pairs seen (any k) and how many had non-coprime indices.
  std::uint64_t disjoint_pairs = 0;
  std::uint64_t disjoint_pairs_noncoprime = 0;

  void merge(const HuntReport& other);
};

inline constexpr std::size_t tight_case_limit = 20;

/// Runs the open-conjecture checker ("c1.1" or "c1.2") over the enumeration.
/// The spec's predicate and member filters are forced to what the conjecture
/// quantifies over.
HuntReport hunt(const SearchSpec& spec, std::string_view conjecture);
/// The spec adjusted to the conjecture's instance family.
SearchSpec hunt_spec(SearchSpec spec, std::string_view conjecture);

struct SweepTally {
  std::uint64_t confirmed = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t counterexample = 0;
};

struct SweepReport {
  std::uint64_t instances = 0;
  std::map<std::string, SweepTally> by_statement;
  std::vector<std::string> counterexamples;

  void merge(const SweepReport& other);
  std::uint64_t total_counterexamples() const;
};

/// Every listed statement on every enumerated instance.
SweepReport sweep(const SearchSpec& spec, const std::vector<std::string>& statement_ids);

}  // namespace cosetcover

