#include "cosetcover/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "cosetcover/errors.hpp"

namespace cosetcover {

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Element> flat, std::string label)
    : n_(n), table_(std::move(flat)), inverses_(n, 0), label_(std::move(label)) {
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inverses_[a] = b;
        break;
      }
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& table, std::string label) {
  const std::size_t n = table.size();
  if (n == 0) throw PreconditionError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw PreconditionError("group table is not square");
    for (auto e : row)
      if (e >= n) throw PreconditionError("group table entry out of range");
  }
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(table[a][b]); };

  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) id = e;
  }
  if (id == n) throw PreconditionError("group table has no identity");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b) has_inverse = at(a, b) == id && at(b, a) == id;
    if (!has_inverse) throw PreconditionError("element " + std::to_string(a) + " has no inverse");
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) { return at(at(a, b), c) == at(a, at(b, c)); };
  if (n <= 128) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw PreconditionError("group table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 200000; ++t)
      if (!assoc(pick(rng), pick(rng), pick(rng))) throw PreconditionError("group table is not associative");
  }

  // Swap the identity into slot 0.
  std::vector<std::size_t> to_new(n), to_old(n);
  std::iota(to_old.begin(), to_old.end(), 0);
  std::swap(to_old[0], to_old[id]);
  for (std::size_t i = 0; i < n; ++i) to_new[to_old[i]] = i;
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[a * n + b] = static_cast<Element>(to_new[at(to_old[a], to_old[b])]);
  return FiniteGroup(n, std::move(flat), std::move(label));
}

Element FiniteGroup::pow(Element a, std::uint64_t e) const noexcept {
  Element result = 0;
  Element base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::uint64_t FiniteGroup::element_order(Element a) const noexcept {
  std::uint64_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element a = 0; a < n_; ++a)
    for (Element b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_cyclic() const noexcept {
  for (Element a = 0; a < n_; ++a)
    if (element_order(a) == n_) return true;
  return false;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(n_, std::vector<Element>(n_));
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) out[a][b] = mul(a, b);
  return out;
}

namespace {

FiniteGroup tabulate(std::size_t n, const std::function<Element(Element, Element)>& op, std::string label) {
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a][b] = op(a, b);
  return FiniteGroup::from_table(t, std::move(label));
}

std::vector<std::vector<std::size_t>> permutations(std::size_t k, bool even_only) {
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    if (even_only) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) inversions += p[i] > p[j];
      if (inversions % 2 != 0) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// (p o q)(x) = p(q(x))
FiniteGroup permutation_group(const std::vector<std::vector<std::size_t>>& perms, std::string label) {
  std::map<std::vector<std::size_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Element>(i));
  const std::size_t k = perms.empty() ? 0 : perms[0].size();
  return tabulate(
      perms.size(),
      [&](Element a, Element b) {
        std::vector<std::size_t> c(k);
        for (std::size_t x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];
        return index.at(c);
      },
      std::move(label));
}

std::uint64_t factorial_checked(std::size_t k, std::size_t cap) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    f *= i;
    if (f > cap) throw CapExceeded("group order exceeds cap " + std::to_string(cap));
  }
  return f;
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  return tabulate(n, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); }, "Z" + std::to_string(n));
}

FiniteGroup symmetric_group(std::size_t k) {
  if (k == 0) throw PreconditionError("symmetric group needs at least one point");
  return permutation_group(permutations(k, false), "S" + std::to_string(k));
}

FiniteGroup alternating_group(std::size_t k) {
  if (k == 0) throw PreconditionError("alternating group needs at least one point");
  return permutation_group(permutations(k, true), "A" + std::to_string(k));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw PreconditionError("dihedral group parameter must be positive");
  return tabulate(
      2 * n,
      [n](Element a, Element b) {
        std::size_t i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
        // r^i1 s^j1 r^i2 s^j2 = r^(i1 + (-1)^j1 i2) s^(j1+j2)
        std::size_t i = j1 == 0 ? (i1 + i2) % n : (i1 + n - i2) % n;
        return static_cast<Element>(((j1 + j2) % 2) * n + i);
      },
      "D" + std::to_string(n));
}

FiniteGroup quaternion_group() {
  // basis 1,i,j,k -> 0..3; element = 2*basis + (negative ? 1 : 0)
  static constexpr int basis_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr bool basis_sign[4][4] = {{false, false, false, false},
                                            {false, true, false, true},
                                            {false, true, true, false},
                                            {false, false, true, true}};
  return tabulate(
      8,
      [](Element a, Element b) {
        int ba = static_cast<int>(a / 2), bb = static_cast<int>(b / 2);
        bool neg = ((a % 2) != 0) != ((b % 2) != 0);
        if (basis_sign[ba][bb]) neg = !neg;
        return static_cast<Element>(2 * basis_product[ba][bb] + (neg ? 1 : 0));
      },
      "Q8");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string label) {
  const std::size_t nb = b.order();
  if (label.empty()) label = a.label() + "x" + b.label();
  return tabulate(
      a.order() * nb,
      [&](Element x, Element y) {
        return static_cast<Element>(a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
                                    b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb)));
      },
      std::move(label));
}

std::vector<std::size_t> symmetric_permutation(std::size_t k, Element element) {
  auto perms = permutations(k, false);
  return perms.at(element);
}

Element symmetric_index(const std::vector<std::size_t>& perm) {
  auto perms = permutations(perm.size(), false);
  auto it = std::lower_bound(perms.begin(), perms.end(), perm);
  if (it == perms.end() || *it != perm) throw PreconditionError("not a permutation");
  return static_cast<Element>(it - perms.begin());
}

namespace {

FiniteGroup make_factor(std::string_view spec, std::size_t cap) {
  if (spec.size() < 2) throw ParseError("unknown group spec '" + std::string(spec) + "'");
  if (spec == "Q8") return quaternion_group();
  const char kind = spec.front();
  std::size_t n = 0;
  for (char ch : spec.substr(1)) {
    if (ch < '0' || ch > '9') throw ParseError("unknown group spec '" + std::string(spec) + "'");
    n = n * 10 + static_cast<std::size_t>(ch - '0');
    if (n > 1'000'000) throw CapExceeded("group parameter too large in '" + std::string(spec) + "'");
  }
  if (n == 0) throw ParseError("group parameter must be positive in '" + std::string(spec) + "'");
  switch (kind) {
    case 'Z':
      if (n > cap) break;
      return cyclic_group(n);
    case 'S':
      factorial_checked(n, cap);
      return symmetric_group(n);
    case 'A':
      if (n >= 2) factorial_checked(n, 2 * cap);
      return alternating_group(n);
    case 'D':
      if (2 * n > cap) break;
      return dihedral_group(n);
    default:
      throw ParseError("unknown group spec '" + std::string(spec) + "'");
  }
  throw CapExceeded("group order exceeds cap " + std::to_string(cap));
}

}  // namespace

FiniteGroup make_group(std::string_view spec, std::size_t order_cap) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto x = spec.find('x', start);
    parts.push_back(spec.substr(start, x == std::string_view::npos ? std::string_view::npos : x - start));
    if (x == std::string_view::npos) break;
    start = x + 1;
  }
  std::size_t total = 1;
  std::vector<FiniteGroup> factors;
  for (auto p : parts) {
    factors.push_back(make_factor(p, order_cap));
    total *= factors.back().order();
    if (total > order_cap) throw CapExceeded("group order exceeds cap " + std::to_string(order_cap));
  }
  if (factors.size() == 1) return factors.front();
  FiniteGroup g = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, factors[i]);
  return FiniteGroup::from_table(g.table(), std::string(spec));
}

GroupPtr make_group_ptr(std::string_view spec, std::size_t order_cap) {
  return std::make_shared<const FiniteGroup>(make_group(spec, order_cap));
}

std::vector<std::string> builtin_family(std::size_t max_order) {
  std::vector<std::pair<std::string, std::size_t>> all;
  for (std::size_t n = 1; n <= max_order; ++n) all.emplace_back("Z" + std::to_string(n), n);
  for (std::size_t k = 3, f = 6; f <= max_order; ++k, f *= k) all.emplace_back("S" + std::to_string(k), f);
  for (std::size_t k = 4, f = 12; f <= max_order; ++k, f *= k) all.emplace_back("A" + std::to_string(k), f);
  for (std::size_t n = 3; 2 * n <= max_order; ++n) all.emplace_back("D" + std::to_string(n), 2 * n);
  if (8 <= max_order) all.emplace_back("Q8", 8);

  const std::vector<std::pair<std::string, std::size_t>> base = {
      {"Z2", 2}, {"Z3", 3}, {"Z4", 4}, {"Z6", 6}, {"Z8", 8}, {"S3", 6}, {"D4", 8}, {"Q8", 8}, {"A4", 12}};
  auto cyclic_order = [](const std::string& s) -> std::size_t {
    return s.front() == 'Z' ? static_cast<std::size_t>(std::stoul(s.substr(1))) : 0;
  };
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      auto order = base[i].second * base[j].second;
      if (order > max_order) continue;
      auto ci = cyclic_order(base[i].first), cj = cyclic_order(base[j].first);
      if (ci != 0 && cj != 0 && std::gcd(ci, cj) == 1) continue;  // cyclic again
      all.emplace_back(base[i].first + "x" + base[j].first, order);
    }
  for (auto [spec, order] : std::vector<std::pair<std::string, std::size_t>>{
           {"Z2xZ2xZ2", 8}, {"Z2xZ2xZ4", 16}, {"Z2xZ2xZ2xZ2", 16}, {"Z2xZ2xZ3", 12}, {"Z2xZ2xS3", 24},
           {"Z3xZ3xZ3", 27}, {"Z2xZ2xZ2xZ3", 24}, {"Z2xZ2xQ8", 32}, {"Z2xZ2xD4", 32}, {"Z2xZ2xA4", 48},
           {"Z2xS4", 48}, {"S3xS3", 36}, {"Z3xS3", 18}, {"Z4xS3", 24}, {"Z2xD6", 24}, {"Z3xQ8", 24},
           {"Z3xD4", 24}, {"Z3xA4", 36}, {"Z4xQ8", 32}, {"Z4xD4", 32}})
    if (order <= max_order) all.emplace_back(spec, order);

  std::stable_sort(all.begin(), all.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
  std::vector<std::string> out;
  for (auto& [spec, order] : all)
    if (std::find(out.begin(), out.end(), spec) == out.end()) out.push_back(spec);
  return out;
}

}  // namespace cosetcover
