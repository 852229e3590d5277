#include "trihex/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "trihex/errors.hpp"

namespace trihex::numtheory {

namespace {

using u128 = unsigned __int128;

// Value of x^2 + x + 1 without wrap-around for any 64-bit x.
u128 quadratic_value(std::uint64_t x) {
  const u128 wide = x;
  return wide * wide + wide + 1;
}

bool solves_mod(std::uint64_t x, std::uint64_t n) {
  return quadratic_value(x) % n == 0;
}

// Inverse of a modulo m for gcd(a, m) = 1, m >= 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    const __int128 next_r = old_r - q * r;
    old_r = r;
    r = next_r;
    const __int128 next_s = old_s - q * s;
    old_s = s;
    s = next_s;
  }
  if (old_r != 1) {
    throw InternalInconsistency("inverse_mod: " + std::to_string(a) +
                                " is not invertible mod " + std::to_string(m));
  }
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

// Roots of x^2 + x + 1 modulo a single prime power.
std::vector<std::uint64_t> prime_power_roots(const PrimePower& pp) {
  if (pp.prime == 3) {
    if (pp.exponent == 1) return {1};
    return {};
  }
  if (pp.prime % 3 != 1) return {};
  std::uint64_t base = 0;
  while (!solves_mod(base, pp.prime)) ++base;
  const std::uint64_t modulus = checked_pow(pp.prime, pp.exponent);
  const std::uint64_t x = lift_prime_power(pp.prime, base, pp.exponent);
  std::vector<std::uint64_t> roots{x, modulus - 1 - x};
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw InvalidInput("integer overflow in " + std::to_string(a) + " * " +
                       std::to_string(b));
  }
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw InvalidInput("integer overflow in " + std::to_string(a) + " + " +
                       std::to_string(b));
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                      std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization Factorization::from_factors(std::vector<PrimePower> factors) {
  std::uint64_t n = 1;
  std::uint64_t previous = 0;
  for (const auto& pp : factors) {
    if (pp.exponent == 0 || pp.prime <= previous || !is_prime(pp.prime)) {
      throw InvalidInput("factor list must hold increasing primes with "
                         "positive exponents");
    }
    previous = pp.prime;
    n = checked_mul(n, checked_pow(pp.prime, pp.exponent));
  }
  return Factorization(n, std::move(factors));
}

unsigned Factorization::exponent_of(std::uint64_t p) const noexcept {
  for (const auto& pp : factors_) {
    if (pp.prime == p) return pp.exponent;
  }
  return 0;
}

unsigned Factorization::distinct_primes_except_three() const noexcept {
  return static_cast<unsigned>(std::count_if(
      factors_.begin(), factors_.end(),
      [](const PrimePower& pp) { return pp.prime != 3; }));
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw InvalidInput("factorize: n must be positive");
  std::vector<PrimePower> factors;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d <= rest / d; d += (d == 2 ? 1 : 2)) {
    if (rest % d != 0) continue;
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    factors.push_back({d, e});
  }
  if (rest > 1) factors.push_back({rest, 1});
  return Factorization::from_factors(std::move(factors));
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& pp : f.factors()) {
    const std::size_t existing = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t omega_count(const Factorization& f) {
  std::uint64_t count = 1;
  for (const auto& pp : f.factors()) {
    if (pp.prime == 3) {
      if (pp.exponent > 1) return 0;
    } else if (pp.prime % 3 == 2) {
      return 0;
    } else {
      count *= 2;
    }
  }
  return count;
}

CongruenceSolutions solve_naive(std::uint64_t n) {
  if (n == 0) throw InvalidInput("solve_naive: n must be positive");
  CongruenceSolutions out{n, {}};
  for (std::uint64_t x = 0; x < n; ++x) {
    if (solves_mod(x, n)) out.roots.push_back(x);
  }
  return out;
}

std::uint64_t lift_prime_power(std::uint64_t p, std::uint64_t root,
                               unsigned exponent) {
  if (p == 3) throw InvalidInput("lift_prime_power: p = 3 does not lift");
  if (!is_prime(p)) {
    throw InvalidInput("lift_prime_power: " + std::to_string(p) +
                       " is not prime");
  }
  if (exponent == 0) throw InvalidInput("lift_prime_power: exponent >= 1");
  std::uint64_t x = root % p;
  if (!solves_mod(x, p)) {
    throw InvalidInput("lift_prime_power: " + std::to_string(root) +
                       " is not a root mod " + std::to_string(p));
  }
  std::uint64_t pk = p;
  for (unsigned k = 1; k < exponent; ++k) {
    // x^2 + x + 1 = j * p^k; pick m with m(2x + 1) + j = 0 (mod p) and move
    // to x + m p^k.
    const u128 j = quadratic_value(x) / pk;
    const std::uint64_t j_mod_p = static_cast<std::uint64_t>(j % p);
    const std::uint64_t slope = static_cast<std::uint64_t>(
        (2 * static_cast<u128>(x) + 1) % p);
    const std::uint64_t m =
        mul_mod((p - j_mod_p) % p, inverse_mod(slope, p), p);
    const std::uint64_t next_pk = checked_mul(pk, p);
    x = static_cast<std::uint64_t>((static_cast<u128>(m) * pk + x) % next_pk);
    pk = next_pk;
  }
  if (!solves_mod(x, pk)) {
    throw InternalInconsistency("lift_prime_power produced a non-root");
  }
  return x;
}

CongruenceSolutions solve_fast(const Factorization& f) {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> roots{0};
  for (const auto& pp : f.factors()) {
    const std::vector<std::uint64_t> local = prime_power_roots(pp);
    if (local.empty()) return {f.n(), {}};
    const std::uint64_t pk = checked_pow(pp.prime, pp.exponent);
    const std::uint64_t combined = checked_mul(modulus, pk);
    const std::uint64_t inv = inverse_mod(modulus % pk, pk);
    std::vector<std::uint64_t> next;
    next.reserve(roots.size() * local.size());
    for (std::uint64_t r1 : roots) {
      for (std::uint64_t r2 : local) {
        // x = r1 + modulus * ((r2 - r1) * inv mod pk)
        const std::uint64_t diff = (r2 + pk - r1 % pk) % pk;
        const std::uint64_t t = mul_mod(diff, inv, pk);
        next.push_back(static_cast<std::uint64_t>(
            (static_cast<u128>(modulus) * t + r1) % combined));
      }
    }
    roots = std::move(next);
    modulus = combined;
  }
  std::sort(roots.begin(), roots.end());
  return {f.n(), std::move(roots)};
}

}  // namespace trihex::numtheory
