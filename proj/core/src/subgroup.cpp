#include "cosetcover/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "cosetcover/errors.hpp"

namespace cosetcover {

namespace {

ElementSet closure(const FiniteGroup& g, const std::vector<Element>& gens) {
  ElementSet s(g.order());
  std::vector<Element> elems{0};
  s.insert(0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto gen : gens) {
      auto p = g.mul(elems[i], gen);
      if (!s.contains(p)) {
        s.insert(p);
        elems.push_back(p);
      }
    }
  return s;
}

/// Greedy generating set: walk the elements, keep those outside the closure so far.
std::vector<Element> generating_set(const FiniteGroup& g, const ElementSet& elements) {
  std::vector<Element> gens;
  ElementSet cur(g.order());
  cur.insert(0);
  elements.for_each([&](Element x) {
    if (cur.contains(x)) return;
    gens.push_back(x);
    cur = closure(g, gens);
  });
  return gens;
}

void check_range(const FiniteGroup& g, const std::vector<Element>& xs) {
  for (auto x : xs)
    if (x >= g.order())
      throw PreconditionError("element index " + std::to_string(x) + " out of range for group of order " +
                              std::to_string(g.order()));
}

}  // namespace

Subgroup Subgroup::trivial(const FiniteGroup& g) {
  ElementSet s(g.order());
  s.insert(0);
  return Subgroup(std::move(s));
}

Subgroup Subgroup::whole(const FiniteGroup& g) { return Subgroup(g.all()); }

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Element>& gens) {
  check_range(g, gens);
  return Subgroup(closure(g, gens));
}

Subgroup validate_subgroup(const FiniteGroup& g, const std::vector<Element>& elements) {
  check_range(g, elements);
  ElementSet s(g.order());
  for (auto x : elements) s.insert(x);
  if (!s.contains(0)) throw PreconditionError("subgroup must contain the identity");
  bool closed = true;
  s.for_each([&](Element a) {
    if (!s.contains(g.inv(a))) closed = false;
    s.for_each([&](Element b) {
      if (!s.contains(g.mul(a, b))) closed = false;
    });
  });
  if (!closed) throw PreconditionError("element set is not closed under the group operation");
  return Subgroup(std::move(s));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) { return Subgroup(a.elements() & b.elements()); }

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  auto gens = generating_set(g, a.elements());
  auto more = generating_set(g, b.elements());
  gens.insert(gens.end(), more.begin(), more.end());
  return Subgroup(closure(g, gens));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap)
    throw CapExceeded("subgroup lattice: group order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(cap));
  struct Node {
    ElementSet set;
    std::vector<Element> gens;
  };
  std::vector<Node> nodes;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<std::pair<ElementSet, Element>> cyclic;
  for (Element x = 0; x < g.order(); ++x) {
    auto c = closure(g, {x});
    if (seen.insert(c).second) {
      cyclic.emplace_back(c, x);
      nodes.push_back({c, {x}});
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const auto& [cset, x] : cyclic) {
      if (cset.is_subset_of(nodes[i].set)) continue;
      auto gens = nodes[i].gens;
      gens.push_back(x);
      auto j = closure(g, gens);
      if (seen.insert(j).second) nodes.push_back({std::move(j), std::move(gens)});
    }
  }
  std::vector<Subgroup> out;
  out.reserve(nodes.size());
  for (auto& n : nodes) out.emplace_back(std::move(n.set));
  std::sort(out.begin(), out.end(),
            [](const Subgroup& l, const Subgroup& r) { return size_lex_less(l.elements(), r.elements()); });
  return out;
}

bool is_normal_in(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  auto hg = generating_set(g, h.elements());
  auto kg = generating_set(g, k.elements());
  for (auto t : kg)
    for (auto s : hg)
      if (!h.contains(g.conj(t, s))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) { return is_normal_in(g, h, Subgroup::whole(g)); }

Subgroup normal_closure(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  auto gens = generating_set(g, h.elements());
  auto kg = generating_set(g, k.elements());
  auto n = closure(g, gens);
  bool changed = true;
  while (changed) {
    changed = false;
    const auto snapshot = gens;
    for (auto t : kg)
      for (auto s : snapshot) {
        auto c = g.conj(t, s);
        if (!n.contains(c)) {
          gens.push_back(c);
          n = closure(g, gens);
          changed = true;
        }
      }
  }
  return Subgroup(std::move(n));
}

Subgroup normal_core(const FiniteGroup& g, const Subgroup& h) {
  ElementSet core = h.elements();
  ElementSet visited(g.order());
  // g H g^-1 depends only on the left coset gH.
  for (Element x = 0; x < g.order(); ++x) {
    if (visited.contains(x)) continue;
    ElementSet conj(g.order());
    h.elements().for_each([&](Element s) {
      visited.insert(g.mul(x, s));
      conj.insert(g.conj(x, s));
    });
    core &= conj;
  }
  return Subgroup(std::move(core));
}

SubnormalResult subnormal_chain(const FiniteGroup& g, const Subgroup& h) {
  SubnormalResult r;
  r.chain.push_back(Subgroup::whole(g));
  while (!(r.chain.back() == h)) {
    auto next = normal_closure(g, h, r.chain.back());
    if (next == r.chain.back()) break;
    r.chain.push_back(std::move(next));
  }
  r.subnormal = r.chain.back() == h;
  return r;
}

bool is_subnormal(const FiniteGroup& g, const Subgroup& h) { return subnormal_chain(g, h).subnormal; }

bool is_hall(const FiniteGroup& g, const Subgroup& h) { return std::gcd(h.order(), group_index(g, h)) == 1; }

Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& h) {
  ElementSet comms(g.order());
  auto elems = h.sorted();
  for (auto a : elems)
    for (auto b : elems) comms.insert(g.commutator(a, b));
  return Subgroup(closure(g, generating_set(g, comms)));
}

bool is_perfect(const FiniteGroup& g, const Subgroup& h) { return derived_subgroup(g, h) == h; }

bool is_solvable(const FiniteGroup& g, const Subgroup& h) {
  Subgroup cur = h;
  while (cur.order() > 1) {
    auto next = derived_subgroup(g, cur);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

bool is_solvable_quotient(const FiniteGroup& g, const Subgroup& n) {
  Subgroup cur = Subgroup::whole(g);
  while (true) {
    if (cur.is_subgroup_of(n)) return true;
    auto next = derived_subgroup(g, cur);
    if (next == cur) return false;
    cur = std::move(next);
  }
}

Quotient quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw PreconditionError("quotient_group: subgroup is not normal");
  const Element unset = static_cast<Element>(g.order());
  std::vector<Element> projection(g.order(), unset);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (projection[x] != unset) continue;
    auto q = static_cast<Element>(reps.size());
    reps.push_back(x);
    n.elements().for_each([&](Element s) { projection[g.mul(x, s)] = q; });
  }
  std::vector<std::vector<Element>> table(reps.size(), std::vector<Element>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) table[a][b] = projection[g.mul(reps[a], reps[b])];
  auto label = g.label() + "/N" + std::to_string(n.order());
  return Quotient{FiniteGroup::from_table(table, label), std::move(reps), std::move(projection)};
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, std::string label) {
  auto elems = h.sorted();
  std::vector<Element> pos(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> table(elems.size(), std::vector<Element>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = pos[g.mul(elems[a], elems[b])];
  if (label.empty()) label = g.label() + "<" + std::to_string(h.order()) + ">";
  return FiniteGroup::from_table(table, std::move(label));
}

bool quotient_is_cyclic(const FiniteGroup& g, const Subgroup& n) {
  const auto m = group_index(g, n);
  for (Element x = 0; x < g.order(); ++x) {
    std::size_t e = 1;
    for (Element p = x; !n.contains(p); p = g.mul(p, x)) ++e;
    if (e == m) return true;
  }
  return false;
}

std::uint64_t CompositionSeries::depth() const {
  std::uint64_t d = 0;
  for (auto f : factor_orders) d += f - 1;
  return d;
}

std::vector<Subgroup> normal_subgroups_between(const FiniteGroup& g, const Subgroup& lower, const Subgroup& upper) {
  std::vector<ElementSet> found{lower.elements()};
  std::unordered_set<ElementSet, ElementSetHash> seen{lower.elements()};
  std::vector<ElementSet> atoms;
  const auto lower_gens = generating_set(g, lower.elements());
  upper.elements().for_each([&](Element x) {
    if (lower.contains(x)) return;
    auto gens = lower_gens;
    gens.push_back(x);
    auto nx = normal_closure(g, Subgroup(closure(g, gens)), upper).elements();
    if (seen.insert(nx).second) {
      found.push_back(nx);
      atoms.push_back(std::move(nx));
    }
  });
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const auto& a : atoms) {
      if (a.is_subset_of(found[i])) continue;
      auto gens = generating_set(g, found[i]);
      auto more = generating_set(g, a);
      gens.insert(gens.end(), more.begin(), more.end());
      auto j = closure(g, gens);  // product of two normal subgroups is normal
      if (seen.insert(j).second) found.push_back(std::move(j));
    }
  std::vector<Subgroup> out;
  for (auto& s : found) out.emplace_back(std::move(s));
  std::sort(out.begin(), out.end(),
            [](const Subgroup& l, const Subgroup& r) { return size_lex_less(l.elements(), r.elements()); });
  return out;
}

CompositionSeries composition_series(const FiniteGroup& g, const Subgroup& h, SeriesTieBreak tie) {
  auto sn = subnormal_chain(g, h);
  if (!sn.subnormal) throw PreconditionError("composition_series: subgroup is not subnormal");
  std::vector<Subgroup> descending{sn.chain.front()};
  for (std::size_t j = 0; j + 1 < sn.chain.size(); ++j) {
    const auto& lower = sn.chain[j + 1];
    Subgroup cur = sn.chain[j];
    while (!(cur == lower)) {
      auto cands = normal_subgroups_between(g, lower, cur);
      std::erase_if(cands, [&](const Subgroup& s) { return s == cur; });
      std::vector<Subgroup> maximal;
      for (const auto& c : cands) {
        bool dominated = std::any_of(cands.begin(), cands.end(), [&](const Subgroup& d) {
          return !(d == c) && c.is_subgroup_of(d);
        });
        if (!dominated) maximal.push_back(c);
      }
      // cands is sorted by (order, lex) so maximal is as well
      Subgroup pick = tie == SeriesTieBreak::smallest ? maximal.front() : maximal.back();
      descending.push_back(pick);
      cur = std::move(pick);
    }
  }
  CompositionSeries out;
  out.chain.assign(descending.rbegin(), descending.rend());
  for (std::size_t i = 0; i + 1 < out.chain.size(); ++i)
    out.factor_orders.push_back(out.chain[i + 1].order() / out.chain[i].order());
  return out;
}

std::uint64_t depth_d(const FiniteGroup& g, const Subgroup& h) { return composition_series(g, h).depth(); }

ElementSet product_set(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  ElementSet out(g.order());
  h.elements().for_each([&](Element a) { k.elements().for_each([&](Element b) { out.insert(g.mul(a, b)); }); });
  return out;
}

Verdict check_lemma21(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  const auto ih = group_index(g, h), ik = group_index(g, k);
  const bool hyp = std::gcd(ih, ik) == 1;
  const auto hk = product_set(g, h, k).count();
  const bool concl = hk == g.order();
  return Verdict::make("lemma2.1", hyp, concl,
                       "gcd([G:H],[G:K])=gcd(" + std::to_string(ih) + "," + std::to_string(ik) + ")=" +
                           std::to_string(std::gcd(ih, ik)) + ", |HK|=" + std::to_string(hk) +
                           ", |G|=" + std::to_string(g.order()));
}

Verdict check_lemma31(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  const auto ih = group_index(g, h), ik = group_index(g, k);
  const auto meet = intersect(h, k);
  const auto i_meet = group_index(g, meet);
  const auto k_over_meet = k.order() / meet.order();
  const bool sub = is_subnormal(g, h) || is_subnormal(g, k);
  const bool coprime = std::gcd(ik, k_over_meet) == 1;
  const auto l = std::lcm(ih, ik);
  const bool eq = i_meet == l;
  const bool h_over_k = k.is_subgroup_of(h) == (ik % ih == 0);
  const bool k_over_h = h.is_subgroup_of(k) == (ih % ik == 0);
  std::string detail = "[G:H∩K]=" + std::to_string(i_meet) + ", lcm([G:H],[G:K])=lcm(" + std::to_string(ih) + "," +
                       std::to_string(ik) + ")=" + std::to_string(l) + ", subnormal=" + (sub ? "yes" : "no") +
                       ", gcd([G:K],[K:H∩K])=" + std::to_string(std::gcd(ik, k_over_meet));
  std::optional<std::string> witness;
  if (!eq) witness = "index of intersection differs from lcm";
  else if (!h_over_k || !k_over_h) witness = "containment/divisibility equivalence fails";
  return Verdict::make("lemma3.1", sub && coprime, eq && h_over_k && k_over_h, std::move(detail), witness);
}

Subgroup centralizer(const FiniteGroup& g, Element x) {
  ElementSet s(g.order());
  for (Element y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) s.insert(y);
  return Subgroup(std::move(s));
}

Subgroup center(const FiniteGroup& g) {
  ElementSet s(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) s.insert(x);
  }
  return Subgroup(std::move(s));
}

Coset::Coset(const FiniteGroup& g, Element any_rep, Subgroup subgroup) : sub(std::move(subgroup)) {
  if (any_rep >= g.order()) throw PreconditionError("coset representative out of range");
  Element best = static_cast<Element>(g.order());
  sub.elements().for_each([&](Element s) { best = std::min(best, g.mul(any_rep, s)); });
  rep = best;
}

ElementSet Coset::elements(const FiniteGroup& g) const {
  ElementSet out(g.order());
  sub.elements().for_each([&](Element s) { out.insert(g.mul(rep, s)); });
  return out;
}

CoverInstance cosetsystem_to_instance(const CosetSystem& system) {
  const auto& g = *system.group;
  std::vector<ElementSet> members;
  members.reserve(system.items.size());
  for (const auto& c : system.items) {
    if (c.sub.elements().universe() != g.order())
      throw PreconditionError("coset subgroup belongs to a group of a different order");
    members.push_back(c.elements(g));
  }
  return CoverInstance(g.order(), std::move(members), Provenance{Provenance::Kind::group, 0, g.label()});
}

std::vector<Element> maximal_noncommuting_set(const FiniteGroup& g) {
  const auto z = center(g);
  std::vector<Element> xs;
  for (Element x = 0; x < g.order(); ++x) {
    if (z.contains(x)) continue;
    bool ok = std::all_of(xs.begin(), xs.end(), [&](Element y) { return g.mul(x, y) != g.mul(y, x); });
    if (ok) xs.push_back(x);
  }
  return xs;
}

CosetSystem centralizer_cover(const GroupPtr& gp) {
  const auto& g = *gp;
  if (g.is_abelian()) throw PreconditionError("centralizer_cover: group is abelian");
  CosetSystem sys{gp, {}};
  ElementSet meet = g.all();
  for (auto x : maximal_noncommuting_set(g)) {
    auto c = centralizer(g, x);
    meet &= c.elements();
    sys.items.emplace_back(g, 0, std::move(c));
  }
  if (!(meet == center(g).elements()))
    throw std::logic_error("centralizer_cover: centralizers do not meet in the center");
  if (!is_minimal_m_cover(cosetsystem_to_instance(sys), 1))
    throw std::logic_error("centralizer_cover: centralizers do not form a minimal cover");
  return sys;
}

}  // namespace cosetcover
