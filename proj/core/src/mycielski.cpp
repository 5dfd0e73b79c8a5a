#include "cosetcover/mycielski.hpp"

#include <numeric>
#include <sstream>

#include "cosetcover/errors.hpp"

namespace cosetcover {

std::uint64_t Factorization::product() const {
  std::uint64_t out = 1;
  for (auto [p, a] : pairs)
    for (unsigned i = 0; i < a; ++i) out *= p;
  return out;
}

std::string Factorization::to_string() const {
  if (pairs.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto [p, a] : pairs) {
    if (!first) os << "·";
    first = false;
    os << p;
    if (a > 1) os << '^' << a;
  }
  return os.str();
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw PreconditionError("factorize: n must be positive");
  Factorization out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.pairs.emplace_back(p, a);
  }
  if (n > 1) out.pairs.emplace_back(n, 1U);
  return out;
}

std::uint64_t mycielski_f(std::uint64_t n) {
  std::uint64_t f = 0;
  for (auto [p, a] : factorize(n).pairs) f += a * (p - 1);
  return f;
}

std::uint64_t excess_exponent_sum(std::uint64_t n) {
  std::uint64_t b = 0;
  for (auto [p, a] : factorize(n).pairs) b += (a - 1) * (p - 1);
  return b;
}

bool pow2_at_least(std::uint64_t e, std::uint64_t n) {
  if (e >= 64) return true;
  return (std::uint64_t{1} << e) >= n;
}

ChainCheck check_chain16(std::uint64_t index, std::uint64_t d) {
  if (index == 0) throw PreconditionError("check_chain16: index must be positive");
  ChainCheck c;
  c.index = index;
  c.d = d;
  c.f = mycielski_f(index);
  c.upper = index - 1 >= d;
  c.middle = d >= c.f;
  c.lower = pow2_at_least(c.f, index);
  return c;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  std::uint64_t q = a / std::gcd(a, b);
  unsigned __int128 r = static_cast<unsigned __int128>(q) * b;
  if (r > UINT64_MAX) throw CapExceeded("lcm overflows 64 bits");
  return static_cast<std::uint64_t>(r);
}

std::uint64_t factorial_u64(unsigned n) {
  if (n > 20) throw CapExceeded("factorial above 20! does not fit in 64 bits");
  std::uint64_t out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p <= n / p; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace cosetcover
