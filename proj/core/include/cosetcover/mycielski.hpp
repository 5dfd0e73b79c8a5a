#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cosetcover {

/// Prime-power decomposition; primes strictly ascending, exponents >= 1.
struct Factorization {
  std::vector<std::pair<std::uint64_t, unsigned>> pairs;

  std::uint64_t product() const;
  /// "2^2·3"; "1" for the empty product.
  std::string to_string() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division. Throws PreconditionError for n == 0.
Factorization factorize(std::uint64_t n);

/// Mycielski function: sum of alpha_t (p_t - 1) over n = prod p_t^alpha_t.
std::uint64_t mycielski_f(std::uint64_t n);

/// sum of (alpha_t - 1)(p_t - 1); the excess term in the subnormal-cover
/// conjecture bound.
std::uint64_t excess_exponent_sum(std::uint64_t n);

/// The chain  index-1 >= d >= f(index) >= log2(index), evaluated exactly.
struct ChainCheck {
  std::uint64_t index = 1;
  std::uint64_t d = 0;
  std::uint64_t f = 0;
  bool upper = false;   // index - 1 >= d
  bool middle = false;  // d >= f(index)
  bool lower = false;   // f(index) >= log2(index), i.e. 2^f >= index

  bool holds() const { return upper && middle && lower; }
};

ChainCheck check_chain16(std::uint64_t index, std::uint64_t d);

/// True iff 2^e >= n, without overflow.
bool pow2_at_least(std::uint64_t e, std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
/// Throws CapExceeded on 64-bit overflow.
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
/// n! for n <= 20; throws CapExceeded beyond.
std::uint64_t factorial_u64(unsigned n);
bool is_prime(std::uint64_t n);

}  // namespace cosetcover
