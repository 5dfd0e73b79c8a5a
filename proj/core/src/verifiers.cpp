#include "cosetcover/verifiers.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "cosetcover/errors.hpp"
#include "cosetcover/mycielski.hpp"

namespace cosetcover {

namespace {

using i128 = __int128;

std::string idx(std::size_t i) { return std::to_string(i + 1); }

std::string u(std::uint64_t v) { return std::to_string(v); }

std::string i128_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  if (neg) v = -v;
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

i128 factorial128(std::size_t n) {
  if (n > 33) throw CapExceeded("factorial beyond 33! does not fit the bound arithmetic");
  i128 r = 1;
  for (std::size_t t = 2; t <= n; ++t) r *= static_cast<i128>(t);
  return r;
}

i128 binomial128(std::size_t n, std::size_t r) {
  i128 c = 1;
  for (std::size_t t = 1; t <= r; ++t) c = c * static_cast<i128>(n - r + t) / static_cast<i128>(t);
  return c;
}

// sum_{l=1}^{s} (-1)^(l-1) C(s,l) (k-l)!
i128 union_bound(std::size_t s, std::size_t k) {
  i128 total = 0;
  for (std::size_t l = 1; l <= s; ++l) {
    i128 term = binomial128(s, l) * factorial128(k - l);
    total += (l % 2 == 1) ? term : -term;
  }
  return total;
}

bool all_of_k(const CoverModel& model, auto pred) {
  for (std::size_t i = 0; i < model.k(); ++i)
    if (!pred(i)) return false;
  return true;
}

bool all_identity_reps(const CoverModel& model) {
  return all_of_k(model, [&](std::size_t i) { return model.rep_is_identity(i); });
}

bool all_subnormal(const CoverModel& model) {
  return all_of_k(model, [&](std::size_t i) { return model.subnormal(i); });
}

bool all_normal(const CoverModel& model) {
  return all_of_k(model, [&](std::size_t i) { return model.normal(i); });
}

bool is_hall_member(const CoverModel& model, std::size_t i) {
  if (!model.finite_group()) return false;
  const auto order = model.subgroup_set(i).count();
  return gcd_u64(order, model.index(i)) == 1;
}

bool all_normal_hall(const CoverModel& model) {
  return model.finite_group() &&
         all_of_k(model, [&](std::size_t i) { return model.normal(i) && is_hall_member(model, i); });
}

bool squarefree(std::uint64_t n) {
  for (auto [p, a] : factorize(n).pairs)
    if (a > 1) return false;
  return true;
}

ElementSet union_of(const CoverModel& model, IndexSet positions, bool bare_subgroups) {
  ElementSet out(model.carrier_size());
  positions.for_each([&](std::size_t i) { out |= bare_subgroups ? model.subgroup_set(i) : model.member(i); });
  return out;
}

std::string factors_string(const std::vector<std::uint64_t>& f) {
  std::string s = "[";
  for (std::size_t t = 0; t < f.size(); ++t) s += (t ? "," : "") + u(f[t]);
  return s + "]";
}

// Smallest t >= 1 with x^t in f; x^e is in f exactly when t divides e.
std::uint64_t power_entry(const CoverModel& model, Element x, const ElementSet& f) {
  const auto order = model.element_order(x);
  Element y = x;
  for (std::uint64_t t = 1; t <= order; ++t) {
    if (f.contains(y)) return t;
    y = model.multiply(y, x);
  }
  return order;
}

// Is some product n_1 * ... * n_s with 1 <= n_r <= r divisible by t?
bool staircase_product_divisible(std::size_t s, std::uint64_t t, std::map<std::pair<std::size_t, std::uint64_t>, bool>& cache) {
  auto key = std::make_pair(s, t);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<char> reach(t, 0), next(t, 0);
  reach[1 % t] = 1;
  for (std::size_t r = 2; r <= s; ++r) {
    std::fill(next.begin(), next.end(), 0);
    for (std::uint64_t v = 0; v < t; ++v)
      if (reach[v])
        for (std::uint64_t n = 1; n <= r; ++n) next[(v * n) % t] = 1;
    reach.swap(next);
  }
  bool ok = reach[0] != 0;
  cache.emplace(key, ok);
  return ok;
}

// k >= base + d, false when d is undefined.
bool bound_holds(std::uint64_t k, std::uint64_t base, std::optional<std::uint64_t> d) {
  if (!d.has_value()) return false;
  return k >= base + d.value();
}

std::string depth_text(std::optional<std::uint64_t> d) { return d ? " d=" + u(*d) : " d undefined"; }

}  // namespace

std::size_t effective_m(const CoverModel& model, const RunOptions& opts) {
  return opts.m != 0 ? opts.m : multiplicity(model.instance());
}

bool pair_condition(const CoverModel& model, std::size_t i, std::size_t j, bool require_subnormal) {
  const auto pair = IndexSet::single(i).with(j);
  const auto gi = model.index(i);
  const auto inner = model.meet_index(pair) / gi;  // [G_i : G_i ∩ G_j]
  bool coprime = gcd_u64(gi, inner) == 1;
  if (require_subnormal) coprime = coprime && model.subnormal(i) && model.subnormal(j);
  if (coprime) return true;
  return model.normal(i) && model.normal(j) && model.meet_quotient_cyclic(pair);
}

bool all_pairs_condition(const CoverModel& model, bool require_subnormal) {
  for (std::size_t i = 0; i < model.k(); ++i)
    for (std::size_t j = 0; j < model.k(); ++j)
      if (!pair_condition(model, i, j, require_subnormal)) return false;
  return true;
}

std::uint64_t union_coset_count(const CoverModel& model, const ElementSet& h, bool identity_reps) {
  return union_of(model, IndexSet::full(model.k()), identity_reps).count() / h.count();
}

std::uint64_t cosets_containing_members(const CoverModel& model, const ElementSet& h) {
  std::vector<Element> keys;
  for (std::size_t i = 0; i < model.k(); ++i) {
    if (!model.subgroup_set(i).is_subset_of(h)) continue;
    keys.push_back(model.translate(model.member(i).first(), h).first());
  }
  std::sort(keys.begin(), keys.end());
  return static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

std::uint64_t max_pair_gcd(const CoverModel& model) {
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < model.k(); ++i)
    for (std::size_t j = i + 1; j < model.k(); ++j) best = std::max(best, gcd_u64(model.index(i), model.index(j)));
  return best;
}

bool pairwise_disjoint(const CoverModel& model) {
  for (std::size_t i = 0; i < model.k(); ++i)
    for (std::size_t j = i + 1; j < model.k(); ++j)
      if (model.member(i).intersects(model.member(j))) return false;
  return true;
}

Report check_index_factorial_bound(const CoverModel& model, const RunOptions& opts) {
  Report r{"tomkinson", {}};
  const auto k = model.k();
  const auto m = effective_m(model, opts);
  const bool minimal = m >= 1 && is_minimal_m_cover(model.instance(), m);
  const auto meet = model.meet_index(IndexSet::full(k));
  if (k > 25) {
    // Both bounds exceed 25!/3, far above any carrier index.
    r.checks.push_back(Verdict::make("[G:meet] <= k!", minimal, true, "k > 25"));
    r.checks.push_back(Verdict::make("identity reps: [G:meet] <= sum (-1)^(l-1) k!/l!",
                                     minimal && all_identity_reps(model), true, "k > 25"));
    return r;
  }
  const i128 kf = factorial128(k);
  r.checks.push_back(Verdict::make("[G:meet] <= k!", minimal, static_cast<i128>(meet) <= kf,
                                   "m=" + u(m) + " [G:meet]=" + u(meet) + " k!=" + i128_string(kf)));
  // sum_{l=1}^{k} (-1)^(l-1) k!/l!
  i128 bound = 0;
  for (std::size_t l = 1; l <= k; ++l) {
    i128 term = kf / factorial128(l);
    bound += (l % 2 == 1) ? term : -term;
  }
  r.checks.push_back(Verdict::make("identity reps: [G:meet] <= sum (-1)^(l-1) k!/l!", minimal && all_identity_reps(model),
                                   static_cast<i128>(meet) <= bound,
                                   "[G:meet]=" + u(meet) + " bound=" + i128_string(bound)));
  return r;
}

Report check_exact_cover_bounds(const CoverModel& model, const RunOptions& opts) {
  Report r{"1.1", {}};
  const auto k = model.k();
  const auto m = effective_m(model, opts);
  const bool exact = m >= 1 && is_exact_m_cover(model.instance(), m);
  for (std::size_t i = 0; i < k; ++i) {
    const auto f = mycielski_f(model.index(i));
    const bool hyp = exact && model.core_quotient_solvable(i);
    r.checks.push_back(Verdict::make("k >= m + f([G:G_i]) i=" + idx(i), hyp, k >= m + f,
                                     "k=" + u(k) + " m=" + u(m) + " f=" + u(f), "i=" + idx(i)));
  }
  const bool hyp = exact && all_subnormal(model);
  std::optional<std::uint64_t> d = hyp ? model.depth_all() : std::nullopt;
  r.checks.push_back(Verdict::make("k >= m + d(G,meet)", hyp, bound_holds(k, m, d),
                                   "k=" + u(k) + " m=" + u(m) + depth_text(d)));
  return r;
}

Report check_abelian_minimal_cover_bound(const CoverModel& model, const RunOptions& opts) {
  Report r{"1.2", {}};
  const auto k = model.k();
  const auto m = effective_m(model, opts);
  const bool hyp = model.abelian() && m >= 1 && is_minimal_m_cover(model.instance(), m);
  for (std::size_t i = 0; i < k; ++i) {
    const auto f = mycielski_f(model.index(i));
    r.checks.push_back(Verdict::make("k >= m + f([G:G_i]) i=" + idx(i), hyp, k >= m + f,
                                     "k=" + u(k) + " m=" + u(m) + " f=" + u(f), "i=" + idx(i)));
  }
  return r;
}

Report check_regular_cover_depth_bound(const CoverModel& model, const RunOptions& opts) {
  Report r{"1.3", {}};
  const auto k = model.k();
  const bool reg_cover = is_regular(model.instance(), true, opts.regularity_cap);
  const bool hyp = reg_cover && all_pairs_condition(model, true);
  const auto ma = multiplicity(model.instance());
  std::optional<std::uint64_t> d = hyp ? model.depth_all() : std::nullopt;
  r.checks.push_back(Verdict::make("k >= m(A) + d(G,meet)", hyp, bound_holds(k, ma, d),
                                   "k=" + u(k) + " m(A)=" + u(ma) + depth_text(d) +
                                       (reg_cover ? "" : " (not a regular cover)")));
  if (model.cyclic()) {
    auto dc = model.depth_all();
    const auto f = mycielski_f(model.meet_index(IndexSet::full(k)));
    r.checks.push_back(Verdict::make("cyclic: d(G,meet) = f([G:meet])", true, dc && *dc == f,
                                     (dc ? "d=" + u(*dc) : std::string("d undefined")) + " f=" + u(f)));
  }
  return r;
}

Report check_depth_bound_special_cases(const CoverModel& model, const RunOptions& opts) {
  Report r{"cor1.1", {}};
  const auto k = model.k();
  const auto full = IndexSet::full(k);
  const bool reg_cover = is_regular(model.instance(), true, opts.regularity_cap);
  const bool special = model.cyclic() || all_normal_hall(model);
  const auto ma = multiplicity(model.instance());
  const bool hyp1 = reg_cover && special;
  std::optional<std::uint64_t> d = hyp1 ? model.depth_all() : std::nullopt;
  r.checks.push_back(Verdict::make("cyclic or normal Hall: k >= m(A) + d(G,meet)", hyp1, bound_holds(k, ma, d),
                                   "k=" + u(k) + " m(A)=" + u(ma) + depth_text(d)));

  const auto m = effective_m(model, opts);
  const bool minimal = m >= 1 && is_minimal_m_cover(model.instance(), m);
  const bool sqf = model.finite_group() && squarefree(model.carrier_size()) && all_normal(model);
  const auto f = mycielski_f(model.meet_index(full));
  r.checks.push_back(Verdict::make("minimal m-cover, cyclic or squarefree normal: k >= m + f([G:meet])",
                                   minimal && (model.cyclic() || sqf), k >= m + f,
                                   "k=" + u(k) + " m=" + u(m) + " f=" + u(f)));
  return r;
}

Report check_subnormal_subgroup_cover(const CoverModel& model, const RunOptions& opts) {
  Report r{"1.4", {}};
  const auto m = effective_m(model, opts);
  const bool hyp =
      all_identity_reps(model) && all_subnormal(model) && m >= 1 && is_minimal_m_cover(model.instance(), m);
  std::optional<std::vector<std::uint64_t>> factors;
  bool prime_factors = false;
  if (hyp) {
    factors = model.composition_factors(IndexSet::full(model.k()));
    prime_factors = factors && std::all_of(factors->begin(), factors->end(), [](auto p) { return is_prime(p); });
  }
  r.checks.push_back(Verdict::make("composition series meet..G has prime factors", hyp, prime_factors,
                                   factors ? "factors " + factors_string(*factors) : "not evaluated"));
  bool contained = false;
  std::string detail = "not evaluated";
  std::optional<std::string> witness;
  if (hyp) {
    contained = true;
    auto perfect = model.perfect_subgroups();
    detail = u(perfect.size()) + " perfect subgroups";
    for (const auto& p : perfect)
      for (std::size_t i = 0; i < model.k(); ++i)
        if (!p.is_subset_of(model.subgroup_set(i))) {
          contained = false;
          witness = "perfect subgroup of order " + u(p.count()) + " not in G_" + idx(i);
        }
  }
  r.checks.push_back(Verdict::make("every perfect subgroup lies in every G_i", hyp, contained, detail, witness));
  return r;
}

Report check_coset_union_count(const CoverModel& model, const RunOptions& opts) {
  Report r{"1.5", {}};
  const auto k = model.k();
  const ElementSet h = opts.h ? *opts.h : model.meet_set(IndexSet::full(k));
  if (h.universe() != model.carrier_size() || !h.contains(0))
    throw PreconditionError("H must be a subgroup of the carrier");
  bool coprime = true;
  for (std::size_t i = 0; i < k; ++i) {
    const auto gi = model.subgroup_set(i);
    if (!h.is_subset_of(gi)) throw PreconditionError("H is not contained in G_" + idx(i));
    coprime = coprime && gcd_u64(model.index(i), gi.count() / h.count()) == 1;
  }
  const bool hyp = coprime && all_subnormal(model);
  const auto lhs = union_coset_count(model, h, false);
  const auto rhs = union_coset_count(model, h, true);
  r.checks.push_back(Verdict::make("[union a_iG_i : H] >= [union G_i : H]", hyp, lhs >= rhs,
                                   "|H|=" + u(h.count()) + " lhs=" + u(lhs) + " rhs=" + u(rhs)));
  r.checks.push_back(Verdict::make("identity reps: counts equal", all_identity_reps(model), lhs == rhs,
                                   "lhs=" + u(lhs) + " rhs=" + u(rhs)));
  return r;
}

Report check_hall_union_size(const CoverModel& model, const RunOptions&) {
  Report r{"cor1.2", {}};
  const auto full = IndexSet::full(model.k());
  const auto lhs = union_of(model, full, false).count();
  const auto rhs = union_of(model, full, true).count();
  r.checks.push_back(Verdict::make("|union a_iG_i| >= |union G_i|", all_normal_hall(model), lhs >= rhs,
                                   "lhs=" + u(lhs) + " rhs=" + u(rhs)));
  return r;
}

namespace {

Report regular_subset_checks(const CoverModel& model, IndexSet subset, bool regular) {
  const auto k = model.k();
  const auto full = IndexSet::full(k);
  Report r{"2.1", {}};
  const std::string tag = "I=" + subset.to_string() + ": ";
  const auto bar = subset.complement(k);
  const auto rest = model.meet_set(bar);
  const auto meet = model.meet_set(full);
  const auto s = subset.size();

  // Some left coset g*rest lies inside the union over I.
  const auto united = union_of(model, subset, false);
  ElementSet seen(model.carrier_size());
  std::optional<Element> witness;
  for (Element g = 0; g < model.carrier_size() && !witness; ++g) {
    if (seen.contains(g)) continue;
    auto coset = model.translate(g, rest);
    seen |= coset;
    if (coset.is_subset_of(united)) witness = g;
  }
  r.checks.push_back(Verdict::make(tag + "union over I contains a coset of meet over complement", regular,
                                   witness.has_value(), witness ? "g=" + u(*witness) : "no coset found",
                                   witness ? std::optional<std::string>("g=" + u(*witness)) : std::nullopt));

  const auto cosets = rest.count() / meet.count();
  const i128 sf = factorial128(s);
  r.checks.push_back(Verdict::make(tag + "[meet over complement : meet] <= |I|!", regular, static_cast<i128>(cosets) <= sf,
                                   "count=" + u(cosets) + " |I|!=" + i128_string(sf)));

  std::map<std::pair<std::size_t, std::uint64_t>, bool> cache;
  std::optional<Element> bad;
  rest.for_each([&](Element x) {
    if (bad) return;
    if (!staircase_product_divisible(s, power_entry(model, x, meet), cache)) bad = x;
  });
  r.checks.push_back(Verdict::make(tag + "x^(n_1...n_|I|) in meet with n_t <= t", regular, !bad,
                                   bad ? "fails at x=" + u(*bad) : "all " + u(rest.count()) + " elements",
                                   bad ? std::optional<std::string>("x=" + u(*bad)) : std::nullopt));

  // Index chain, scaled by L = [G : meet] so every term is an integer.
  const auto L = model.meet_index(full);
  std::uint64_t a = 0, b = 0;
  subset.for_each([&](std::size_t i) {
    a += L / model.index(i);
    b += L / model.meet_index(bar.with(i));
  });
  const auto rest_index = model.meet_index(bar);
  const std::uint64_t c = L / rest_index;
  i128 prod = 1;
  bar.for_each([&](std::size_t j) {
    prod *= static_cast<i128>(model.index(j));
    if (prod > static_cast<i128>(std::numeric_limits<std::uint64_t>::max())) prod = std::numeric_limits<std::uint64_t>::max();
  });
  const bool chain = a >= b && b >= c && prod >= static_cast<i128>(rest_index);
  std::ostringstream det;
  det << "x" << L << ": " << a << (a == b ? " = " : " >= ") << b << (b == c ? " = " : " >= ") << c
      << "; [G:meet over complement]=" << rest_index << (prod == static_cast<i128>(rest_index) ? " = " : " <= ")
      << "prod=" << i128_string(prod);
  r.checks.push_back(Verdict::make(tag + "index inequality chain", regular, chain, det.str()));

  const auto union_cosets = union_of(model, subset, true).count() / meet.count();
  const auto bound = union_bound(s, k);
  r.checks.push_back(Verdict::make(tag + "[union G_i : meet] <= sum (-1)^(l-1) C(|I|,l) (k-l)!", regular,
                                   static_cast<i128>(union_cosets) <= bound,
                                   "count=" + u(union_cosets) + " bound=" + i128_string(bound)));
  return r;
}

}  // namespace

Report check_regular_system_subset(const CoverModel& model, IndexSet subset, const RunOptions& opts) {
  const auto full = IndexSet::full(model.k());
  if (subset.empty() || (subset & full) != subset)
    throw PreconditionError("index set must be a nonempty subset of [1,k]");
  const bool cover = multiplicity(model.instance()) >= 1;
  if (subset == full && !cover) throw PreconditionError("I = [1,k] requires the system to be a cover");
  return regular_subset_checks(model, subset, is_regular(model.instance(), false, opts.regularity_cap));
}

Report check_regular_system(const CoverModel& model, const RunOptions& opts) {
  if (opts.subset) return check_regular_system_subset(model, *opts.subset, opts);
  const auto k = model.k();
  if (k > 16) throw CapExceeded("index-set sweep limited to k <= 16; pass a single index set instead");
  Report r{"2.1", {}};
  const bool cover = multiplicity(model.instance()) >= 1;
  const bool regular = is_regular(model.instance(), false, opts.regularity_cap);
  const auto full = IndexSet::full(k);
  for (std::uint64_t bits = 1; bits <= full.bits(); ++bits) {
    IndexSet subset(bits);
    if (subset == full && !cover) continue;
    auto part = regular_subset_checks(model, subset, regular);
    for (auto& v : part.checks) r.checks.push_back(std::move(v));
  }

  const auto& lattice = model.lattice();
  for (std::size_t n = 0; n < lattice.size(); ++n) {
    const auto& h = lattice[n];
    IndexSet j;
    for (std::size_t i = 0; i < k; ++i)
      if (!model.subgroup_set(i).is_subset_of(h)) j = j.with(i);
    if (j.empty() || j == full) continue;
    const auto lhs = cosets_containing_members(model, h);
    const auto rhs = model.product_size(model.meet_set(j), h) / h.count();
    r.checks.push_back(Verdict::make("lattice H#" + std::to_string(n) + ": cosets of H containing a member >= [(meet J)H : H]",
                                     regular, lhs >= rhs,
                                     "|H|=" + u(h.count()) + " J=" + j.to_string() + " lhs=" + u(lhs) + " rhs=" + u(rhs)));
  }
  return r;
}

Report check_maximal_coset_dichotomy(const CoverModel& model, const RunOptions& opts) {
  Report r{"2.2", {}};
  const auto k = model.k();
  const bool regular = is_regular(model.instance(), false, opts.regularity_cap);
  const bool pairs = all_pairs_condition(model, false);
  const bool normal_all = all_normal(model);
  const bool subnormal_all = all_subnormal(model);
  const bool cover = multiplicity(model.instance()) >= 1;

  std::vector<std::pair<std::string, ElementSet>> subjects;
  if (opts.h) {
    subjects.emplace_back("H", *opts.h);
  } else {
    const auto& lattice = model.lattice();
    for (std::size_t n = 0; n < lattice.size(); ++n)
      if (model.maximal(lattice[n]) || model.maximal_normal(lattice[n]))
        subjects.emplace_back("H#" + std::to_string(n), lattice[n]);
  }
  for (const auto& [name, h] : subjects) {
    const bool branch = (normal_all && model.maximal(h)) || (subnormal_all && model.maximal_normal(h));
    bool escapes = false;
    for (std::size_t i = 0; i < k; ++i) escapes = escapes || !model.subgroup_set(i).is_subset_of(h);
    const bool hyp = regular && pairs && branch && (cover || escapes);
    const auto count = cosets_containing_members(model, h);
    const auto total = model.carrier_size() / h.count();
    r.checks.push_back(Verdict::make(name + ": cosets of H containing a member are none or all", hyp,
                                     count == 0 || count == total,
                                     "|H|=" + u(h.count()) + " count=" + u(count) + " of " + u(total)));
  }
  return r;
}

Report check_disjoint_partner(const CoverModel& model, const RunOptions& opts) {
  Report r{"cor2.1", {}};
  const auto k = model.k();
  const bool hyp = is_regular(model.instance(), true, opts.regularity_cap) && all_pairs_condition(model, true);
  for (std::size_t j = 0; j < k; ++j) {
    if (model.index(j) == 1) continue;
    std::optional<std::size_t> partner;
    for (std::size_t i = 0; i < k && !partner; ++i)
      if (i != j && model.index(i) > 1 && !model.member(i).intersects(model.member(j))) partner = i;
    r.checks.push_back(Verdict::make("G_j proper has a disjoint proper partner j=" + idx(j), hyp, partner.has_value(),
                                     partner ? "partner i=" + idx(*partner) : "no disjoint partner",
                                     partner ? std::optional<std::string>("i=" + idx(*partner)) : std::nullopt));
  }
  return r;
}

Report check_coprime_product(const CoverModel& model, const RunOptions&) {
  Report r{"lemma2.1", {}};
  const auto k = model.k();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto g = gcd_u64(model.index(i), model.index(j));
      const auto size = model.product_size(model.subgroup_set(i), model.subgroup_set(j));
      const std::string pair = "(" + idx(i) + "," + idx(j) + ")";
      r.checks.push_back(Verdict::make("coprime indices => G_iG_j = G " + pair, g == 1, size == model.carrier_size(),
                                       "gcd=" + u(g) + " |G_iG_j|=" + u(size) + " of " + u(model.carrier_size())));
      const bool disjoint = !model.member(i).intersects(model.member(j));
      r.checks.push_back(Verdict::make("disjoint members => gcd of indices > 1 " + pair, disjoint, g > 1,
                                       "gcd=" + u(g)));
    }
  return r;
}

Report check_pair_index_lcm(const CoverModel& model, const RunOptions&) {
  Report r{"lemma3.1", {}};
  const auto k = model.k();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const auto hi = model.index(i), kj = model.index(j);
      const auto both = model.meet_index(IndexSet::single(i).with(j));
      const bool hyp = (model.subnormal(i) || model.subnormal(j)) && gcd_u64(kj, both / kj) == 1;
      const auto gi = model.subgroup_set(i), gj = model.subgroup_set(j);
      const bool lcm_ok = both == lcm_u64(hi, kj);
      const bool h_over_k = gj.is_subset_of(gi) == (kj % hi == 0);
      const bool k_over_h = gi.is_subset_of(gj) == (hi % kj == 0);
      r.checks.push_back(Verdict::make("[G:G_i meet G_j] = lcm and containment <=> divisibility (" + idx(i) + "," +
                                           idx(j) + ")",
                                       hyp, lcm_ok && h_over_k && k_over_h,
                                       "[G:G_i]=" + u(hi) + " [G:G_j]=" + u(kj) + " [G:meet]=" + u(both)));
    }
  return r;
}

Report check_subnormal_cover_conjecture(const CoverModel& model, const RunOptions& opts) {
  Report r{"c1.1", {}};
  const auto k = model.k();
  const auto m = effective_m(model, opts);
  const auto meet = model.meet_index(IndexSet::full(k));
  const bool hyp = meet > 1 && all_identity_reps(model) && all_subnormal(model) && m >= 1 &&
                   is_minimal_m_cover(model.instance(), m);
  const auto bound = excess_exponent_sum(meet);
  r.checks.push_back(Verdict::make("k > m + sum (a-1)(p-1) over [G:meet]", hyp, k > m + bound,
                                   "k=" + u(k) + " m=" + u(m) + " [G:meet]=" + factorize(meet).to_string() +
                                       " bound=" + u(bound) + (hyp && k == m + bound + 1 ? " tight" : "")));
  return r;
}

Report check_disjoint_gcd_conjecture(const CoverModel& model, const RunOptions&) {
  Report r{"c1.2", {}};
  const auto k = model.k();
  const bool hyp = k > 1 && pairwise_disjoint(model);
  const auto g = max_pair_gcd(model);
  std::optional<std::string> witness;
  for (std::size_t i = 0; i < k && !witness; ++i)
    for (std::size_t j = i + 1; j < k && !witness; ++j)
      if (gcd_u64(model.index(i), model.index(j)) == g) witness = "(" + idx(i) + "," + idx(j) + ")";
  r.checks.push_back(Verdict::make("some pair has gcd of indices >= k", hyp, g >= k,
                                   "k=" + u(k) + " max gcd=" + u(g) + (hyp && g == k ? " tight" : ""), witness));
  return r;
}

const std::vector<StatementInfo>& statements() {
  static const std::vector<StatementInfo> list = {
      {"tomkinson", "minimal m-cover: [G:meet] <= k!, sharper with identity representatives", true},
      {"1.1", "exact m-cover: k >= m + f([G:G_i]) and k >= m + d(G,meet)", true},
      {"1.2", "minimal m-cover of an abelian group: k >= m + f([G:G_i])", true},
      {"1.3", "regular cover with the pairwise condition: k >= m(A) + d(G,meet)", true},
      {"cor1.1", "depth bound for cyclic G or normal Hall subgroups", true},
      {"1.4", "minimal m-cover by subnormal subgroups: prime-order series, perfect subgroups inside", true},
      {"1.5", "subnormal coprime G_i over H: [union a_iG_i : H] >= [union G_i : H]", true},
      {"cor1.2", "normal Hall subgroups: |union a_iG_i| >= |union G_i|", true},
      {"2.1", "regular system: coset containment, |I|! bound, index chain, union bound, lattice bound", true},
      {"2.2", "regular system: H-cosets containing members are none or all of G/H", true},
      {"cor2.1", "regular cover: proper members have disjoint proper partners", true},
      {"lemma2.1", "coprime indices give G = HK; disjoint cosets have non-coprime indices", true},
      {"lemma3.1", "index of intersection is the lcm under the coprime condition", true},
      {"c1.1", "open: k > m + sum (a-1)(p-1) for minimal subnormal subgroup covers", false},
      {"c1.2", "open: pairwise disjoint cosets have a pair with gcd of indices >= k", false},
  };
  return list;
}

const StatementInfo& statement_info(std::string_view id) {
  for (const auto& s : statements())
    if (s.id == id) return s;
  throw PreconditionError("unknown statement id '" + std::string(id) + "'");
}

Report run_statement(std::string_view id, const CoverModel& model, const RunOptions& opts) {
  statement_info(id);
  if (id == "tomkinson") return check_index_factorial_bound(model, opts);
  if (id == "1.1") return check_exact_cover_bounds(model, opts);
  if (id == "1.2") return check_abelian_minimal_cover_bound(model, opts);
  if (id == "1.3") return check_regular_cover_depth_bound(model, opts);
  if (id == "cor1.1") return check_depth_bound_special_cases(model, opts);
  if (id == "1.4") return check_subnormal_subgroup_cover(model, opts);
  if (id == "1.5") return check_coset_union_count(model, opts);
  if (id == "cor1.2") return check_hall_union_size(model, opts);
  if (id == "2.1") return check_regular_system(model, opts);
  if (id == "2.2") return check_maximal_coset_dichotomy(model, opts);
  if (id == "cor2.1") return check_disjoint_partner(model, opts);
  if (id == "lemma2.1") return check_coprime_product(model, opts);
  if (id == "lemma3.1") return check_pair_index_lcm(model, opts);
  if (id == "c1.1") return check_subnormal_cover_conjecture(model, opts);
  return check_disjoint_gcd_conjecture(model, opts);
}

CrossCheck cross_check(const ZSystem& system, const RunOptions& opts) {
  CrossCheck out;
  ZModel native(system);
  GroupModel cyclic(transport_to_cyclic(system));
  for (const auto& s : statements()) {
    // A statement about finite groups only: Z fails its hypothesis by fiat.
    if (s.id == "cor1.2") continue;
    auto a = run_statement(s.id, native, opts);
    auto b = run_statement(s.id, cyclic, opts);
    if (a.checks.size() != b.checks.size()) {
      out.agree = false;
      out.mismatches.push_back(std::string(s.id) + ": " + u(a.checks.size()) + " vs " + u(b.checks.size()) + " checks");
      continue;
    }
    for (std::size_t t = 0; t < a.checks.size(); ++t) {
      const auto& x = a.checks[t];
      const auto& y = b.checks[t];
      ++out.compared;
      if (x.check != y.check || x.hypotheses_hold != y.hypotheses_hold || x.conclusion_holds != y.conclusion_holds) {
        out.agree = false;
        out.mismatches.push_back(std::string(s.id) + ": '" + x.check + "' " + std::string(to_string(x.outcome)) +
                                 " vs '" + y.check + "' " + std::string(to_string(y.outcome)));
      }
    }
  }
  return out;
}

}  // namespace cosetcover
