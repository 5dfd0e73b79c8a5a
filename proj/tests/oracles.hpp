#pragma once

// Brute-force reference implementations used as test oracles. They work from
// definitions only and share no code with the library beyond its data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cosetcover/group.hpp"

namespace oracle {

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return a / gcd(a, b) * b; }

/// Prime factors with multiplicity, by repeated division.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t f(std::uint64_t n) {
  std::uint64_t s = 0;
  for (auto p : prime_factors(n)) s += p - 1;
  return s;
}

/// A residue class a + nZ as a plain pair.
struct Cls {
  std::int64_t a;
  std::int64_t n;
};

inline bool in_class(std::int64_t x, const Cls& c) { return ((x - c.a) % c.n + c.n) % c.n == 0; }

/// Number of classes containing x.
inline std::size_t coverage(const std::vector<Cls>& sys, std::int64_t x) {
  std::size_t c = 0;
  for (const auto& cl : sys) c += in_class(x, cl);
  return c;
}

inline std::int64_t period(const std::vector<Cls>& sys) {
  std::uint64_t p = 1;
  for (const auto& c : sys) p = lcm(p, static_cast<std::uint64_t>(c.n));
  return static_cast<std::int64_t>(p);
}

/// Per-point index sets over a window, the images I^*(x) as std::sets.
using Image = std::set<std::set<std::size_t>>;

template <class Contains>
Image image(std::int64_t lo, std::int64_t hi, std::set<std::size_t> positions, Contains contains) {
  Image out;
  for (std::int64_t x = lo; x < hi; ++x) {
    std::set<std::size_t> s;
    for (auto i : positions)
      if (contains(i, x)) s.insert(i);
    out.insert(s);
  }
  return out;
}

/// Regularity straight from the definition: no nonempty proper I has
/// {I^*(x)} inside {[1,k]^*(x)}.
template <class Contains>
bool regular(std::size_t k, std::int64_t lo, std::int64_t hi, Contains contains) {
  std::set<std::size_t> all;
  for (std::size_t i = 0; i < k; ++i) all.insert(i);
  auto full = image(lo, hi, all, contains);
  for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << k); ++bits) {
    std::set<std::size_t> pos;
    for (std::size_t i = 0; i < k; ++i)
      if ((bits >> i) & 1U) pos.insert(i);
    auto img = image(lo, hi, pos, contains);
    if (std::includes(full.begin(), full.end(), img.begin(), img.end())) return false;
  }
  return true;
}

inline bool z_regular(const std::vector<Cls>& sys) {
  return regular(sys.size(), 0, period(sys), [&](std::size_t i, std::int64_t x) { return in_class(x, sys[i]); });
}

/// Every point of one period covered at least m times.
inline bool z_m_cover(const std::vector<Cls>& sys, std::size_t m) {
  for (std::int64_t x = 0; x < period(sys); ++x)
    if (coverage(sys, x) < m) return false;
  return true;
}

/// Minimal by trying every proper nonempty subsystem.
inline bool z_minimal(const std::vector<Cls>& sys, std::size_t m) {
  if (!z_m_cover(sys, m)) return false;
  const auto k = sys.size();
  for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << k); ++bits) {
    std::vector<Cls> sub;
    for (std::size_t i = 0; i < k; ++i)
      if ((bits >> i) & 1U) sub.push_back(sys[i]);
    bool covers = true;
    for (std::int64_t x = 0; x < period(sys) && covers; ++x) covers = coverage(sub, x) >= m;
    if (covers) return false;
  }
  return true;
}

inline bool z_exact(const std::vector<Cls>& sys, std::size_t m) {
  for (std::int64_t x = 0; x < period(sys); ++x)
    if (coverage(sys, x) != m) return false;
  return true;
}

inline bool z_pairwise_disjoint(const std::vector<Cls>& sys) {
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = i + 1; j < sys.size(); ++j)
      for (std::int64_t x = 0; x < period(sys); ++x)
        if (in_class(x, sys[i]) && in_class(x, sys[j])) return false;
  return true;
}

// ---- groups, via the raw multiplication table --------------------------

using Table = std::vector<std::vector<cosetcover::Element>>;

/// Element subsets as 64-bit masks (orders up to 64).
inline bool closed(const Table& t, std::uint64_t s) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (!((s >> a) & 1U)) continue;
    for (std::size_t b = 0; b < t.size(); ++b)
      if (((s >> b) & 1U) && !((s >> t[a][b]) & 1U)) return false;
  }
  return true;
}

/// Every subgroup of a small group (order <= 16 in practice), by testing all subsets that
/// contain the identity (element 0) for closure.
inline std::vector<std::uint64_t> all_subgroups(const Table& t) {
  std::vector<std::uint64_t> out;
  const auto n = t.size();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); s += 2)
    if (closed(t, s)) out.push_back(s);
  return out;
}

inline std::size_t inverse(const Table& t, std::size_t a) {
  for (std::size_t b = 0; b < t.size(); ++b)
    if (t[a][b] == 0) return b;
  return t.size();
}

/// H normal in K (both masks), by conjugating every element.
inline bool normal_in(const Table& t, std::uint64_t h, std::uint64_t k) {
  for (std::size_t g = 0; g < t.size(); ++g) {
    if (!((k >> g) & 1U)) continue;
    const auto gi = inverse(t, g);
    for (std::size_t x = 0; x < t.size(); ++x)
      if (((h >> x) & 1U) && !((h >> t[t[g][x]][gi]) & 1U)) return false;
  }
  return true;
}

/// Subnormal iff a chain of normal inclusions through subgroups reaches G,
/// found by search over the lattice.
inline bool subnormal(const Table& t, const std::vector<std::uint64_t>& lattice, std::uint64_t h) {
  const std::uint64_t g = (t.size() >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << t.size()) - 1);
  std::set<std::uint64_t> seen{h};
  std::vector<std::uint64_t> todo{h};
  while (!todo.empty()) {
    auto cur = todo.back();
    todo.pop_back();
    if (cur == g) return true;
    for (auto k : lattice)
      if ((cur & ~k) == 0 && k != cur && normal_in(t, cur, k) && seen.insert(k).second) todo.push_back(k);
  }
  return false;
}

inline std::size_t popcount(std::uint64_t s) { return static_cast<std::size_t>(__builtin_popcountll(s)); }

/// Left coset a*H as a mask.
inline std::uint64_t left_coset(const Table& t, std::size_t a, std::uint64_t h) {
  std::uint64_t out = 0;
  for (std::size_t x = 0; x < t.size(); ++x)
    if ((h >> x) & 1U) out |= std::uint64_t{1} << t[a][x];
  return out;
}

}  // namespace oracle
