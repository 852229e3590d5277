#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace trihex::numtheory {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Exact prime factorization of a positive integer. Primes are strictly
/// increasing and every exponent is at least 1; n = 1 has no factors.
class Factorization {
 public:
  /// Builds from an explicit list. Throws InvalidInput when the list is not
  /// a strictly increasing sequence of primes with positive exponents.
  static Factorization from_factors(std::vector<PrimePower> factors);

  std::uint64_t n() const noexcept { return n_; }
  std::span<const PrimePower> factors() const noexcept { return factors_; }

  /// Exponent of `p` in n (0 when p does not divide n).
  unsigned exponent_of(std::uint64_t p) const noexcept;

  /// Number of distinct primes other than 3.
  unsigned distinct_primes_except_three() const noexcept;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  Factorization(std::uint64_t n, std::vector<PrimePower> factors)
      : n_(n), factors_(std::move(factors)) {}

  std::uint64_t n_ = 1;
  std::vector<PrimePower> factors_;
};

/// All x in [0, n) with x^2 + x + 1 = 0 (mod n), ascending.
struct CongruenceSolutions {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> roots;

  friend bool operator==(const CongruenceSolutions&,
                         const CongruenceSolutions&) = default;
};

bool is_prime(std::uint64_t n) noexcept;

/// Trial division. Throws InvalidInput for n = 0.
Factorization factorize(std::uint64_t n);

/// Every divisor of f.n(), ascending.
std::vector<std::uint64_t> divisors(const Factorization& f);

/// Number of roots of x^2 + x + 1 mod n, from the prime signature alone:
/// zero when a prime = 2 (mod 3) divides n or 9 divides n, otherwise 2^r with
/// r the number of distinct primes other than 3.
std::uint64_t omega_count(const Factorization& f);

/// Exhaustive scan over [0, n). Throws InvalidInput for n = 0.
CongruenceSolutions solve_naive(std::uint64_t n);

/// Lifts a root mod p to the unique root mod p^exponent congruent to it,
/// one power at a time. Throws InvalidInput if p is 3 or not prime, if
/// `root` does not solve the congruence mod p, or if p^exponent overflows.
std::uint64_t lift_prime_power(std::uint64_t p, std::uint64_t root,
                               unsigned exponent);

/// Roots per prime power (scan mod p, lift, pair x with p^l - 1 - x), joined
/// by the Chinese remainder theorem.
CongruenceSolutions solve_fast(const Factorization& f);

// Overflow-checked helpers shared by the counting code.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;

}  // namespace trihex::numtheory
