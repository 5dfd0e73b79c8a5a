#include <doctest.h>

#include <random>

#include "cosetcover/errors.hpp"
#include "cosetcover/mycielski.hpp"
#include "oracles.hpp"

using namespace cosetcover;

TEST_CASE("factorize small values") {
  CHECK(factorize(12).pairs == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 1}});
  CHECK(factorize(1).pairs.empty());
  CHECK(factorize(97).pairs == std::vector<std::pair<std::uint64_t, unsigned>>{{97, 1}});
  CHECK(factorize(12).to_string() == "2^2·3");
  CHECK(factorize(1).to_string() == "1");
  CHECK_THROWS_AS(factorize(0), PreconditionError);
}

TEST_CASE("factorization reconstructs its input with ascending primes") {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    auto fac = factorize(n);
    CHECK(fac.product() == n);
    for (std::size_t i = 0; i < fac.pairs.size(); ++i) {
      CHECK(is_prime(fac.pairs[i].first));
      if (i > 0) CHECK(fac.pairs[i - 1].first < fac.pairs[i].first);
    }
  }
  const std::uint64_t big = 600851475143ULL;
  CHECK(factorize(big).product() == big);
}

TEST_CASE("f matches the division oracle") {
  CHECK(mycielski_f(1) == 0);
  CHECK(mycielski_f(12) == 4);
  CHECK(mycielski_f(60) == 8);
  for (std::uint64_t n = 1; n <= 20000; ++n) CHECK(mycielski_f(n) == oracle::f(n));
}

TEST_CASE("f is completely additive") {
  std::vector<std::uint64_t> table(10001);
  for (std::uint64_t n = 1; n <= 10000; ++n) table[n] = mycielski_f(n);
  for (std::uint64_t a = 1; a <= 10000; ++a)
    for (std::uint64_t b = 1; b <= 100; ++b) REQUIRE(mycielski_f(a * b) == table[a] + table[b]);
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::uint64_t> pick(1, 10000);
  for (int t = 0; t < 100000; ++t) {
    auto a = pick(rng), b = pick(rng);
    REQUIRE(mycielski_f(a * b) == table[a] + table[b]);
  }
}

TEST_CASE("log2 n <= f(n) <= n - 1, equality on the left exactly at powers of two") {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const auto fn = mycielski_f(n);
    REQUIRE(pow2_at_least(fn, n));
    REQUIRE(n - 1 >= fn);
    const bool power_of_two = (n & (n - 1)) == 0;
    // 2^f == n exactly when f = log2 n.
    const bool equal = fn < 64 && (std::uint64_t{1} << fn) == n;
    REQUIRE(equal == power_of_two);
  }
}

TEST_CASE("conjecture bound term") {
  CHECK(excess_exponent_sum(30) == 0);
  CHECK(excess_exponent_sum(12) == 1);
  CHECK(excess_exponent_sum(8) == 2);
  CHECK(excess_exponent_sum(1) == 0);
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    std::uint64_t want = 0;
    for (auto [p, e] : factorize(n).pairs) want += (e - 1) * (p - 1);
    CHECK(excess_exponent_sum(n) == want);
  }
}

TEST_CASE("inequality chain evaluation") {
  auto c = check_chain16(6, 3);
  CHECK(c.holds());
  CHECK(c.f == 3);
  c = check_chain16(1, 0);
  CHECK(c.holds());
  c = check_chain16(60, 59);
  CHECK(c.holds());
  CHECK(c.f == 8);
  c = check_chain16(6, 2);
  CHECK_FALSE(c.middle);
  c = check_chain16(6, 6);
  CHECK_FALSE(c.upper);
}

TEST_CASE("integer helpers") {
  CHECK(gcd_u64(12, 18) == 6);
  CHECK(gcd_u64(0, 5) == 5);
  CHECK(lcm_u64(4, 6) == 12);
  CHECK_THROWS_AS(lcm_u64(1ULL << 40, (1ULL << 40) - 1), CapExceeded);
  CHECK(factorial_u64(0) == 1);
  CHECK(factorial_u64(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial_u64(21), CapExceeded);
  CHECK(pow2_at_least(6, 60));
  CHECK_FALSE(pow2_at_least(5, 60));
  CHECK(pow2_at_least(64, ~0ULL));
  for (std::uint64_t n = 0; n < 200; ++n) CHECK(is_prime(n) == (oracle::prime_factors(n).size() == 1));
}
