#include "cosetcover/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "cosetcover/errors.hpp"
#include "cosetcover/mycielski.hpp"

namespace cosetcover {

namespace {

// Candidate members over one finite carrier.
struct Universe {
  std::size_t carrier = 0;
  std::vector<ElementSet> members;
  std::vector<std::vector<Element>> points;
  std::vector<std::vector<std::uint32_t>> containing;  // element -> candidates holding it
  std::vector<std::uint64_t> tag;                       // modulus (Z) or subgroup number (groups)
  std::size_t max_size = 0;

  std::uint64_t period = 0;  // Z only
  std::vector<ResidueClass> classes;
  GroupPtr group;
  std::vector<Coset> cosets;

  void finish() {
    containing.assign(carrier, {});
    for (std::uint32_t c = 0; c < members.size(); ++c) {
      points.push_back(members[c].elements());
      for (auto x : points.back()) containing[x].push_back(c);
      max_size = std::max(max_size, points.back().size());
    }
  }
};

Universe z_universe(const SearchSpec& spec, std::uint64_t n) {
  Universe u;
  u.carrier = n;
  u.period = n;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    for (std::uint64_t a = 0; a < d; ++a) {
      if (spec.subgroups_only && a != 0) break;
      if (spec.proper_only && d == 1) continue;
      ElementSet s(n);
      for (std::uint64_t x = a; x < n; x += d) s.insert(static_cast<Element>(x));
      u.members.push_back(std::move(s));
      u.tag.push_back(d);
      u.classes.emplace_back(static_cast<std::int64_t>(a), static_cast<std::int64_t>(d));
    }
  }
  u.finish();
  return u;
}

Universe group_universe(const SearchSpec& spec) {
  Universe u;
  u.group = make_group_ptr(spec.group);
  const auto& g = *u.group;
  u.carrier = g.order();
  auto subs = all_subgroups(g);
  for (std::size_t t = 0; t < subs.size(); ++t) {
    const auto& h = subs[t];
    if (spec.proper_only && h.order() == g.order()) continue;
    if (spec.subnormal_only && !is_subnormal(g, h)) continue;
    ElementSet seen(g.order());
    for (Element a = 0; a < g.order(); ++a) {
      if (seen.contains(a)) continue;
      Coset c(g, a, h);
      auto elems = c.elements(g);
      seen |= elems;
      if (spec.subgroups_only && a != 0) continue;
      u.members.push_back(std::move(elems));
      u.tag.push_back(t);
      u.cosets.push_back(std::move(c));
    }
  }
  u.finish();
  return u;
}

bool uses_cover_search(Predicate p) { return p == Predicate::minimal_cover || p == Predicate::exact_cover; }

std::size_t repeat_cap(const SearchSpec& spec) {
  switch (spec.predicate) {
    case Predicate::minimal_cover:
    case Predicate::exact_cover:
      return spec.m;
    case Predicate::pairwise_disjoint:
      return 1;
    default:
      return spec.max_k;
  }
}

// Regularity of the chosen system from its per-element position masks.
bool regular_from_masks(const std::vector<std::uint64_t>& masks, std::size_t k, bool require_cover) {
  std::vector<std::uint64_t> image(masks);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  if (require_cover && !image.empty() && image.front() == 0) return false;
  const std::uint64_t full = (k >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  for (std::uint64_t sub = 1; sub < full; ++sub) {
    bool escapes = false;
    for (auto mk : image)
      if (!std::binary_search(image.begin(), image.end(), mk & sub)) {
        escapes = true;
        break;
      }
    if (!escapes) return false;
  }
  return true;
}

class Runner {
 public:
  Runner(const SearchSpec& spec, const Universe& u, const std::function<void(const Found&)>& sink)
      : spec_(spec), u_(u), sink_(sink), counts_(u.carrier, 0), masks_(u.carrier, 0),
        forbidden_(u.members.size(), 0), picked_(u.members.size(), 0), cap_(repeat_cap(spec)) {}

  /// Root alternatives; the shard with ordinal r explores alternative r.
  std::vector<std::uint32_t> roots() const {
    std::vector<std::uint32_t> out;
    if (uses_cover_search(spec_.predicate)) {
      for (auto c : u_.containing[0])
        if (allowed(c)) out.push_back(c);
    } else {
      for (std::uint32_t c = 0; c < u_.members.size(); ++c) out.push_back(c);
    }
    return out;
  }

  void run_root(std::size_t r) {
    auto alts = roots();
    if (uses_cover_search(spec_.predicate)) {
      for (std::size_t t = 0; t < r; ++t) forbidden_[alts[t]] = 1;
      choose(alts[r]);
      cover_dfs();
    } else {
      choose(alts[r]);
      combo_dfs(alts[r]);
    }
  }

 private:
  bool allowed(std::uint32_t c) const {
    if (forbidden_[c] || picked_[c] >= cap_) return false;
    if (spec_.distinct_moduli && u_.period != 0)
      for (auto p : chosen_)
        if (p != c && u_.tag[p] == u_.tag[c]) return false;
    if (spec_.predicate == Predicate::exact_cover)
      for (auto x : u_.points[c])
        if (counts_[x] >= spec_.m) return false;
    if (spec_.predicate == Predicate::pairwise_disjoint)
      for (auto x : u_.points[c])
        if (counts_[x] != 0) return false;
    return true;
  }

  void choose(std::uint32_t c) {
    const auto bit = std::uint64_t{1} << chosen_.size();
    for (auto x : u_.points[c]) {
      ++counts_[x];
      masks_[x] |= bit;
    }
    ++picked_[c];
    chosen_.push_back(c);
  }

  void unchoose() {
    auto c = chosen_.back();
    chosen_.pop_back();
    const auto bit = std::uint64_t{1} << chosen_.size();
    for (auto x : u_.points[c]) {
      --counts_[x];
      masks_[x] &= ~bit;
    }
    --picked_[c];
  }

  std::size_t deficit(std::size_t m) const {
    std::size_t d = 0;
    for (auto c : counts_)
      if (c < m) d += m - c;
    return d;
  }

  bool hopeless(std::size_t m) const {
    return deficit(m) > (spec_.max_k - chosen_.size()) * u_.max_size;
  }

  bool period_ok() const {
    if (u_.period == 0) return true;
    std::uint64_t l = 1;
    for (auto c : chosen_) l = lcm_u64(l, u_.tag[c]);
    return l == u_.period;
  }

  bool minimal_now() const {
    for (auto c : chosen_) {
      bool essential = false;
      for (auto x : u_.points[c])
        if (counts_[x] == spec_.m) {
          essential = true;
          break;
        }
      if (!essential) return false;
    }
    return true;
  }

  bool accepts() const {
    if (chosen_.size() < spec_.min_k || !period_ok()) return false;
    switch (spec_.predicate) {
      case Predicate::minimal_cover:
        return minimal_now();
      case Predicate::exact_cover:
        return true;  // no overshoot was allowed and nothing is deficient
      case Predicate::cover:
        return deficit(spec_.m) == 0;
      case Predicate::regular_cover:
        return deficit(spec_.m) == 0 && regular_from_masks(masks_, chosen_.size(), true);
      case Predicate::regular_system:
        return regular_from_masks(masks_, chosen_.size(), false);
      case Predicate::pairwise_disjoint:
        return chosen_.size() >= 2;
    }
    return false;
  }

  void emit() {
    std::vector<std::uint32_t> order(chosen_);
    std::sort(order.begin(), order.end());
    Found f;
    if (u_.period != 0) {
      std::vector<ResidueClass> cls;
      for (auto c : order) cls.push_back(u_.classes[c]);
      f.z = ZSystem(std::move(cls));
    } else {
      CosetSystem sys{u_.group, {}};
      for (auto c : order) sys.items.push_back(u_.cosets[c]);
      f.cosets = std::move(sys);
    }
    sink_(f);
  }

  // Branch on the lowest element still short of m; siblings already explored
  // are forbidden below later siblings, so each multiset is reached once.
  void cover_dfs() {
    std::size_t x = 0;
    while (x < u_.carrier && counts_[x] >= spec_.m) ++x;
    if (x == u_.carrier) {
      if (accepts()) emit();
      return;
    }
    if (chosen_.size() >= spec_.max_k || hopeless(spec_.m)) return;
    std::vector<std::uint32_t> blocked;
    for (auto c : u_.containing[x]) {
      if (!allowed(c)) continue;
      choose(c);
      cover_dfs();
      unchoose();
      forbidden_[c] = 1;
      blocked.push_back(c);
    }
    for (auto c : blocked) forbidden_[c] = 0;
  }

  // Nondecreasing candidate sequences (strictly increasing without repeats).
  void combo_dfs(std::uint32_t last) {
    if (accepts()) emit();
    if (chosen_.size() >= spec_.max_k) return;
    const bool needs_cover = spec_.predicate == Predicate::cover || spec_.predicate == Predicate::regular_cover;
    if (needs_cover && hopeless(spec_.m)) return;
    for (std::uint32_t c = last; c < u_.members.size(); ++c) {
      if (!allowed(c)) continue;
      choose(c);
      combo_dfs(c);
      unchoose();
    }
  }

  const SearchSpec& spec_;
  const Universe& u_;
  const std::function<void(const Found&)>& sink_;
  std::vector<std::size_t> counts_;
  std::vector<std::uint64_t> masks_;
  std::vector<char> forbidden_;
  std::vector<std::size_t> picked_;
  std::vector<std::uint32_t> chosen_;
  std::size_t cap_;
};

// All universes for the spec with their root alternatives, flattened into shards.
struct Plan {
  std::vector<Universe> universes;
  std::vector<std::pair<std::size_t, std::size_t>> shards;  // (universe, root ordinal)

  explicit Plan(const SearchSpec& spec) {
    spec.validate();
    if (spec.target == SearchSpec::Target::z) {
      for (auto n = spec.min_period; n <= spec.max_period; ++n) universes.push_back(z_universe(spec, n));
    } else {
      universes.push_back(group_universe(spec));
    }
    static const std::function<void(const Found&)> none = [](const Found&) {};
    for (std::size_t v = 0; v < universes.size(); ++v) {
      Runner r(spec, universes[v], none);
      auto n = r.roots().size();
      for (std::size_t t = 0; t < n; ++t) shards.emplace_back(v, t);
    }
  }

  void run(const SearchSpec& spec, std::size_t s, const std::function<void(const Found&)>& sink) const {
    Runner r(spec, universes[shards[s].first], sink);
    r.run_root(shards[s].second);
  }
};

template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t n, unsigned jobs, Fn fn) {
  std::vector<R> out(n);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
  if (workers == 1) {
    for (std::size_t s = 0; s < n; ++s) out[s] = fn(s);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t s = next++; s < n; s = next++) out[s] = fn(s);
      } catch (...) {
        errors[w] = std::current_exception();
        next = n;
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace

std::string to_string(Predicate p) {
  switch (p) {
    case Predicate::minimal_cover:
      return "minimal";
    case Predicate::exact_cover:
      return "exact";
    case Predicate::cover:
      return "cover";
    case Predicate::regular_cover:
      return "regular-cover";
    case Predicate::regular_system:
      return "regular";
    case Predicate::pairwise_disjoint:
      return "disjoint";
  }
  return "?";
}

Predicate parse_predicate(std::string_view text) {
  for (auto p : {Predicate::minimal_cover, Predicate::exact_cover, Predicate::cover, Predicate::regular_cover,
                 Predicate::regular_system, Predicate::pairwise_disjoint})
    if (to_string(p) == text) return p;
  throw ParseError("unknown predicate '" + std::string(text) +
                   "' (expected minimal, exact, cover, regular-cover, regular or disjoint)");
}

void SearchSpec::validate() const {
  if (max_k == 0 || min_k > max_k) throw PreconditionError("need 1 <= max-k and min-k <= max-k");
  if (max_k > search_k_cap) throw CapExceeded("max-k above " + std::to_string(search_k_cap));
  if (m == 0) throw PreconditionError("m must be positive");
  if (target == Target::z) {
    if (min_period == 0 || min_period > max_period) throw PreconditionError("need 1 <= min-period <= max-period");
    if (max_period > search_period_cap) throw CapExceeded("max-period above " + std::to_string(search_period_cap));
  } else if (group.empty()) {
    throw PreconditionError("group target needs a group spec");
  }
  if (max_k > regularity_cap &&
      (predicate == Predicate::regular_cover || predicate == Predicate::regular_system))
    throw CapExceeded("max-k above the regularity cap");
}

std::unique_ptr<CoverModel> Found::model() const {
  if (z) return std::make_unique<ZModel>(*z);
  return std::make_unique<GroupModel>(*cosets);
}

std::string Found::to_string() const {
  if (z) return z->to_string();
  std::string s = cosets->group->label() + ":";
  for (const auto& c : cosets->items) {
    s += " " + std::to_string(c.rep) + "{";
    auto e = c.sub.sorted();
    for (std::size_t t = 0; t < e.size(); ++t) s += (t ? "," : "") + std::to_string(e[t]);
    s += "}";
  }
  return s;
}

std::size_t shard_count(const SearchSpec& spec) { return Plan(spec).shards.size(); }

void enumerate_shard(const SearchSpec& spec, std::size_t shard, const std::function<void(const Found&)>& sink) {
  Plan plan(spec);
  if (shard >= plan.shards.size()) throw PreconditionError("shard out of range");
  plan.run(spec, shard, sink);
}

void enumerate(const SearchSpec& spec, const std::function<void(const Found&)>& sink) {
  Plan plan(spec);
  if (spec.jobs <= 1) {
    for (std::size_t s = 0; s < plan.shards.size(); ++s) plan.run(spec, s, sink);
    return;
  }
  auto parts = parallel_map<std::vector<Found>>(plan.shards.size(), spec.jobs, [&](std::size_t s) {
    std::vector<Found> local;
    plan.run(spec, s, [&](const Found& f) { local.push_back(f); });
    return local;
  });
  for (const auto& part : parts)
    for (const auto& f : part) sink(f);
}

std::vector<Found> enumerate_all(const SearchSpec& spec) {
  std::vector<Found> out;
  enumerate(spec, [&](const Found& f) { out.push_back(f); });
  return out;
}

CosetSystem construct_example21(std::size_t k) {
  if (k < 2 || k > 6) throw PreconditionError("example needs 2 <= k <= 6");
  auto g = std::make_shared<const FiniteGroup>(symmetric_group(k));
  CosetSystem sys{g, {}};
  for (std::size_t i = 0; i < k; ++i) {
    ElementSet stab(g->order());
    for (Element e = 0; e < g->order(); ++e)
      if (symmetric_permutation(k, e)[i] == i) stab.insert(e);
    std::vector<std::size_t> swap(k);
    for (std::size_t t = 0; t < k; ++t) swap[t] = t;
    std::swap(swap[0], swap[i]);
    sys.items.emplace_back(*g, symmetric_index(swap), Subgroup(std::move(stab)));
  }
  if (!is_partition(cosetsystem_to_instance(sys))) throw std::logic_error("stabilizer cosets do not partition S_k");
  return sys;
}

void HuntReport::merge(const HuntReport& o) {
  examined += o.examined;
  hypotheses_held += o.hypotheses_held;
  confirmed += o.confirmed;
  tight += o.tight;
  for (const auto& t : o.tight_cases)
    if (tight_cases.size() < tight_case_limit) tight_cases.push_back(t);
  counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
  disjoint_pairs += o.disjoint_pairs;
  disjoint_pairs_noncoprime += o.disjoint_pairs_noncoprime;
}

SearchSpec hunt_spec(SearchSpec spec, std::string_view conjecture) {
  if (conjecture == "c1.1") {
    spec.predicate = Predicate::minimal_cover;
    spec.subgroups_only = true;
    spec.subnormal_only = true;
  } else if (conjecture == "c1.2") {
    spec.predicate = Predicate::pairwise_disjoint;
    spec.min_k = std::max<std::size_t>(spec.min_k, 2);
    spec.max_k = std::max(spec.max_k, spec.min_k);
  } else {
    throw PreconditionError("unknown conjecture '" + std::string(conjecture) + "' (expected c1.1 or c1.2)");
  }
  return spec;
}

HuntReport hunt(const SearchSpec& spec_in, std::string_view conjecture) {
  const auto spec = hunt_spec(spec_in, conjecture);
  Plan plan(spec);
  const std::string id(conjecture);
  auto parts = parallel_map<HuntReport>(plan.shards.size(), spec.jobs, [&](std::size_t s) {
    HuntReport rep;
    rep.statement = id;
    plan.run(spec, s, [&](const Found& f) {
      auto model = f.model();
      RunOptions opts;
      opts.m = spec.m;
      auto report = run_statement(id, *model, opts);
      const auto& v = report.checks.front();
      ++rep.examined;
      if (!v.hypotheses_hold) return;
      ++rep.hypotheses_held;
      const auto k = model->k();
      bool tight = false;
      if (id == "c1.2") {
        tight = max_pair_gcd(*model) == k;
        if (k == 2) {
          ++rep.disjoint_pairs;
          if (gcd_u64(model->index(0), model->index(1)) > 1) ++rep.disjoint_pairs_noncoprime;
        }
      } else {
        tight = k == spec.m + excess_exponent_sum(model->meet_index(IndexSet::full(k))) + 1;
      }
      if (v.outcome == Outcome::confirmed) ++rep.confirmed;
      if (v.outcome == Outcome::counterexample) rep.counterexamples.push_back(f.to_string() + " | " + v.detail);
      if (tight && v.outcome == Outcome::confirmed) {
        ++rep.tight;
        if (rep.tight_cases.size() < tight_case_limit) rep.tight_cases.push_back(f.to_string() + " | " + v.detail);
      }
    });
    return rep;
  });
  HuntReport total;
  total.statement = id;
  for (const auto& p : parts) total.merge(p);
  return total;
}

void SweepReport::merge(const SweepReport& o) {
  instances += o.instances;
  for (const auto& [id, t] : o.by_statement) {
    auto& mine = by_statement[id];
    mine.confirmed += t.confirmed;
    mine.vacuous += t.vacuous;
    mine.counterexample += t.counterexample;
  }
  counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
}

std::uint64_t SweepReport::total_counterexamples() const {
  std::uint64_t n = 0;
  for (const auto& [id, t] : by_statement) n += t.counterexample;
  return n;
}

SweepReport sweep(const SearchSpec& spec, const std::vector<std::string>& statement_ids) {
  for (const auto& id : statement_ids) statement_info(id);
  Plan plan(spec);
  auto parts = parallel_map<SweepReport>(plan.shards.size(), spec.jobs, [&](std::size_t s) {
    SweepReport rep;
    plan.run(spec, s, [&](const Found& f) {
      auto model = f.model();
      ++rep.instances;
      RunOptions opts;
      opts.regularity_cap = spec.regularity_cap;
      for (const auto& id : statement_ids) {
        auto report = run_statement(id, *model, opts);
        auto& tally = rep.by_statement[id];
        for (const auto& v : report.checks) {
          switch (v.outcome) {
            case Outcome::confirmed:
              ++tally.confirmed;
              break;
            case Outcome::vacuous:
              ++tally.vacuous;
              break;
            case Outcome::counterexample:
              ++tally.counterexample;
              rep.counterexamples.push_back(id + " " + v.check + " on " + f.to_string() + " | " + v.detail);
              break;
          }
        }
      }
    });
    return rep;
  });
  SweepReport total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace cosetcover
