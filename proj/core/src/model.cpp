#include "cosetcover/model.hpp"

#include <algorithm>
#include <unordered_map>

#include "cosetcover/errors.hpp"
#include "cosetcover/mycielski.hpp"

namespace cosetcover {

std::optional<std::uint64_t> CoverModel::depth_all() const {
  auto factors = composition_factors(IndexSet::full(k()));
  if (!factors) return std::nullopt;
  std::uint64_t d = 0;
  for (auto f : *factors) d += f - 1;
  return d;
}

ElementSet CoverModel::translate(Element x, const ElementSet& h) const {
  ElementSet out(carrier_size());
  h.for_each([&](Element s) { out.insert(multiply(x, s)); });
  return out;
}

std::size_t CoverModel::product_size(const ElementSet& a, const ElementSet& b) const {
  // b is a subgroup in every caller, so a*b is a union of left cosets x*b and
  // each coset only needs to be built once.
  ElementSet out(carrier_size());
  a.for_each([&](Element x) {
    if (!out.contains(x)) out |= translate(x, b);
  });
  return out.count();
}

// ---------------------------------------------------------------- ZModel

ZModel::ZModel(const ZSystem& system) : ZModel(system, system.period()) {}

ZModel::ZModel(const ZSystem& system, std::uint64_t carrier_period)
    : CoverModel(std::make_shared<const CoverInstance>(zsystem_to_instance(system, carrier_period))),
      system_(system),
      period_(carrier_period) {}

std::string ZModel::describe() const { return "Z: " + system_.to_string() + " (carrier Z/" + std::to_string(period_) + ")"; }

Element ZModel::multiply(Element x, Element y) const { return static_cast<Element>((std::uint64_t{x} + y) % period_); }

Element ZModel::power(Element x, std::uint64_t e) const {
  auto r = static_cast<unsigned __int128>(x) * (e % period_) % period_;
  return static_cast<Element>(r);
}

ElementSet ZModel::multiples_of(std::uint64_t d) const {
  if (d == 0 || period_ % d != 0) throw PreconditionError("multiples_of: d must divide the carrier period");
  ElementSet s(period_);
  for (std::uint64_t x = 0; x < period_; x += d) s.insert(static_cast<Element>(x));
  return s;
}

ElementSet ZModel::subgroup_set(std::size_t i) const { return multiples_of(system_.classes().at(i).modulus()); }

std::uint64_t ZModel::index(std::size_t i) const { return system_.classes().at(i).modulus(); }

std::uint64_t ZModel::meet_index(IndexSet j) const {
  std::uint64_t l = 1;
  j.for_each([&](std::size_t i) { l = lcm_u64(l, index(i)); });
  return l;
}

ElementSet ZModel::meet_set(IndexSet j) const { return multiples_of(meet_index(j)); }

std::optional<std::vector<std::uint64_t>> ZModel::composition_factors(IndexSet j) const {
  std::vector<std::uint64_t> out;
  for (auto [p, a] : factorize(meet_index(j)).pairs)
    for (unsigned t = 0; t < a; ++t) out.push_back(p);
  return out;
}

const std::vector<ElementSet>& ZModel::lattice() const {
  std::call_once(lattice_once_, [this] {
    for (std::uint64_t d = 1; d <= period_; ++d)
      if (period_ % d == 0) lattice_.push_back(multiples_of(d));
    std::sort(lattice_.begin(), lattice_.end(), size_lex_less);
  });
  return lattice_;
}

std::vector<ElementSet> ZModel::perfect_subgroups() const {
  // Only the zero subgroup of Z is perfect; its carrier image is {0}.
  ElementSet zero(period_);
  zero.insert(0);
  return {zero};
}

std::uint64_t ZModel::generator_of(const ElementSet& h) const {
  const auto s = h.count();
  if (s == 0 || period_ % s != 0) return 0;
  const auto d = period_ / s;
  return h == multiples_of(d) ? d : 0;
}

bool ZModel::maximal(const ElementSet& h) const { return is_prime(generator_of(h)); }

// ---------------------------------------------------------------- GroupModel

/// Subgroup lattice with the per-subgroup flags the verifiers ask for.
struct LatticeFacts {
  std::vector<ElementSet> sets;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> position;
  std::vector<char> maximal, maximal_normal;
};

/// Everything about a group that does not depend on the coset system. Search
/// builds many models over one group, so this is computed once per group.
struct GroupFacts {
  std::mutex mu;
  std::unordered_map<ElementSet, std::pair<bool, bool>, ElementSetHash> normality;  // (normal, subnormal)
  std::once_flag lattice_once;
  LatticeFacts lattice;

  std::pair<bool, bool> normality_of(const FiniteGroup& g, const Subgroup& h) {
    {
      std::lock_guard lock(mu);
      if (auto it = normality.find(h.elements()); it != normality.end()) return it->second;
    }
    auto sn = subnormal_chain(g, h);
    std::pair<bool, bool> v{sn.subnormal && sn.chain.size() <= 2, sn.subnormal};
    std::lock_guard lock(mu);
    normality.emplace(h.elements(), v);
    return v;
  }

  const LatticeFacts& lattice_of(const FiniteGroup& g) {
    std::call_once(lattice_once, [&] {
      auto& f = lattice;
      for (auto& s : all_subgroups(g, g.order())) f.sets.push_back(s.elements());
      const auto n = f.sets.size();
      std::vector<char> normal(n);
      for (std::size_t i = 0; i < n; ++i) {
        f.position.emplace(f.sets[i], i);
        normal[i] = is_normal(g, Subgroup(f.sets[i]));
      }
      f.maximal.assign(n, 0);
      f.maximal_normal.assign(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        const auto& h = f.sets[i];
        if (h.count() == g.order()) continue;
        bool max = true, max_normal = normal[i] != 0;
        for (std::size_t j = 0; j < n; ++j) {
          const auto& s = f.sets[j];
          if (s.count() <= h.count() || s.count() == g.order() || !h.is_subset_of(s)) continue;
          max = false;
          if (normal[j]) max_normal = false;
        }
        f.maximal[i] = max;
        f.maximal_normal[i] = max_normal;
      }
    });
    return lattice;
  }
};

namespace {

std::shared_ptr<GroupFacts> facts_for(const GroupPtr& g) {
  static std::mutex mu;
  static std::unordered_map<const FiniteGroup*, std::pair<std::weak_ptr<const FiniteGroup>, std::shared_ptr<GroupFacts>>>
      cache;
  std::lock_guard lock(mu);
  auto it = cache.find(g.get());
  if (it != cache.end() && !it->second.first.expired()) return it->second.second;
  if (cache.size() > 256)
    std::erase_if(cache, [](const auto& e) { return e.second.first.expired(); });
  auto facts = std::make_shared<GroupFacts>();
  cache[g.get()] = {g, facts};
  return facts;
}

}  // namespace

GroupModel::GroupModel(CosetSystem system, std::size_t lattice_cap)
    : CoverModel(std::make_shared<const CoverInstance>(cosetsystem_to_instance(system))),
      system_(std::move(system)),
      lattice_cap_(lattice_cap),
      facts_(facts_for(system_.group)) {
  for (const auto& c : system_.items) {
    auto [normal, subnormal] = facts_->normality_of(group(), c.sub);
    normal_.push_back(normal);
    subnormal_.push_back(subnormal);
  }
}

const LatticeFacts& GroupModel::lattice_facts() const {
  if (group().order() > lattice_cap_)
    throw CapExceeded("subgroup lattice: group order " + std::to_string(group().order()) + " exceeds cap " +
                      std::to_string(lattice_cap_));
  return facts_->lattice_of(group());
}

std::string GroupModel::describe() const {
  std::string s = group().label() + ":";
  for (const auto& c : system_.items) s += " " + std::to_string(c.rep) + "·<" + std::to_string(c.sub.order()) + ">";
  return s;
}

std::uint64_t GroupModel::index(std::size_t i) const { return group_index(group(), system_.items.at(i).sub); }

ElementSet GroupModel::meet_set(IndexSet j) const {
  ElementSet s = group().all();
  j.for_each([&](std::size_t i) { s &= system_.items.at(i).sub.elements(); });
  return s;
}

std::uint64_t GroupModel::meet_index(IndexSet j) const { return group().order() / meet_set(j).count(); }

bool GroupModel::normal(std::size_t i) const { return normal_.at(i) != 0; }
bool GroupModel::subnormal(std::size_t i) const { return subnormal_.at(i) != 0; }

bool GroupModel::meet_quotient_cyclic(IndexSet j) const {
  Subgroup n(meet_set(j));
  return is_normal(group(), n) && quotient_is_cyclic(group(), n);
}

bool GroupModel::core_quotient_solvable(std::size_t i) const {
  return is_solvable_quotient(group(), normal_core(group(), system_.items.at(i).sub));
}

std::optional<std::vector<std::uint64_t>> GroupModel::composition_factors(IndexSet j) const {
  Subgroup h(meet_set(j));
  if (!is_subnormal(group(), h)) return std::nullopt;
  return composition_series(group(), h).factor_orders;
}

const std::vector<ElementSet>& GroupModel::lattice() const { return lattice_facts().sets; }

std::vector<ElementSet> GroupModel::perfect_subgroups() const {
  std::vector<ElementSet> out;
  for (const auto& s : lattice())
    if (is_perfect(group(), Subgroup(s))) out.push_back(s);
  return out;
}

bool GroupModel::maximal(const ElementSet& h) const {
  const auto& f = lattice_facts();
  if (auto it = f.position.find(h); it != f.position.end()) return f.maximal[it->second] != 0;
  if (h.count() == group().order()) return false;
  for (const auto& s : lattice())
    if (s.count() > h.count() && s.count() < group().order() && h.is_subset_of(s)) return false;
  return true;
}

bool GroupModel::maximal_normal(const ElementSet& h) const {
  const auto& f = lattice_facts();
  if (auto it = f.position.find(h); it != f.position.end()) return f.maximal_normal[it->second] != 0;
  const auto& g = group();
  if (h.count() == g.order() || !is_normal(g, Subgroup(h))) return false;
  for (const auto& s : lattice())
    if (s.count() > h.count() && s.count() < g.order() && h.is_subset_of(s) && is_normal(g, Subgroup(s)))
      return false;
  return true;
}

CosetSystem transport_to_cyclic(const ZSystem& system, std::uint64_t carrier_period, std::size_t order_cap) {
  if (carrier_period == 0) carrier_period = system.period();
  if (carrier_period % system.period() != 0)
    throw PreconditionError("carrier period must be a multiple of the system period");
  if (carrier_period > order_cap)
    throw CapExceeded("cyclic transport: Z_" + std::to_string(carrier_period) + " exceeds group order cap");
  auto g = std::make_shared<const FiniteGroup>(cyclic_group(carrier_period));
  CosetSystem out{g, {}};
  for (const auto& c : system.classes()) {
    auto sub = subgroup_generated(*g, {static_cast<Element>(c.modulus() % carrier_period)});
    out.items.emplace_back(*g, static_cast<Element>(c.residue()), std::move(sub));
  }
  return out;
}

}  // namespace cosetcover
