#include "trihex/counting.hpp"

#include <cmath>
#include <string>

#include "trihex/errors.hpp"

namespace trihex::counting {

namespace {

using numtheory::checked_add;
using numtheory::checked_mul;
using numtheory::checked_pow;

std::uint64_t exact_div(std::uint64_t num, std::uint64_t den,
                        const char* what, std::uint64_t vertices) {
  if (num % den != 0) {
    throw InternalInconsistency(std::string(what) + ": " + std::to_string(num) +
                                " not divisible by " + std::to_string(den) +
                                " at V=" + std::to_string(vertices));
  }
  return num / den;
}

// 1 + p + ... + p^k
std::uint64_t geometric_sum(std::uint64_t p, unsigned k) {
  return (checked_pow(p, k + 1) - 1) / (p - 1);
}

std::uint64_t exact_sqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) {
    throw InternalInconsistency(std::to_string(n) + " is not a square");
  }
  return r;
}

}  // namespace

void require_vertex_count(std::uint64_t vertices) {
  if (vertices < 4 || vertices % 4 != 0) {
    throw InvalidInput("vertex count must be a positive multiple of 4, got " +
                       std::to_string(vertices));
  }
}

numtheory::Factorization quarter_factorization(std::uint64_t vertices) {
  require_vertex_count(vertices);
  return numtheory::factorize(vertices / 4);
}

std::uint64_t sigma(std::uint64_t vertices) {
  std::uint64_t out = 1;
  const auto quarter = quarter_factorization(vertices);
  for (const auto& pp : quarter.factors()) {
    out = checked_mul(out, geometric_sum(pp.prime, pp.exponent));
  }
  return out;
}

std::uint64_t delta(std::uint64_t vertices) {
  std::uint64_t out = 1;
  const auto quarter = quarter_factorization(vertices);
  for (const auto& pp : quarter.factors()) {
    if (pp.prime % 3 == 2 && pp.exponent % 2 == 1) return 0;
    if (pp.prime % 3 == 1) out = checked_mul(out, pp.exponent + 1);
  }
  return out;
}

std::uint64_t trihex_count(std::uint64_t vertices) {
  const std::uint64_t twice_delta = checked_mul(2, delta(vertices));
  return exact_div(checked_add(sigma(vertices), twice_delta), 3,
                   "trihex_count", vertices);
}

std::uint64_t mu(std::uint64_t vertices) {
  const auto f = quarter_factorization(vertices);
  std::uint64_t out = 1;
  for (const auto& pp : f.factors()) {
    if (pp.prime != 2) out = checked_mul(out, pp.exponent + 1);
  }
  const unsigned w = f.exponent_of(2);
  if (w > 0) out = checked_mul(out, 2 * std::uint64_t{w} - 1);
  return out;
}

std::uint64_t nu(std::uint64_t vertices) {
  const auto quarter = quarter_factorization(vertices);
  for (const auto& pp : quarter.factors()) {
    if (pp.prime != 3 && pp.exponent % 2 == 1) return 0;
  }
  return 1;
}

std::optional<Signature> nu_witness(std::uint64_t vertices) {
  if (nu(vertices) == 0) return std::nullopt;
  const std::uint64_t quarter = vertices / 4;
  if (quarter_factorization(vertices).exponent_of(3) % 2 == 0) {
    const auto m = static_cast<std::int64_t>(exact_sqrt(quarter));
    return Signature{m - 1, m - 1, 0};
  }
  const auto m = static_cast<std::int64_t>(exact_sqrt(quarter / 3));
  return Signature{3 * m - 1, m - 1, m};
}

std::uint64_t gamma_by_combination(std::uint64_t vertices) {
  std::uint64_t total = sigma(vertices);
  total = checked_add(total, checked_mul(2, delta(vertices)));
  total = checked_add(total, checked_mul(3, mu(vertices)));
  return exact_div(total, 6, "gamma", vertices);
}

std::uint64_t gamma_by_cases(std::uint64_t vertices) {
  const auto f = quarter_factorization(vertices);
  const unsigned a = f.exponent_of(2);
  const unsigned b = f.exponent_of(3);
  std::uint64_t p_sums = 1, q_sums = 1;  // divisor-sum factors
  std::uint64_t k_prod = 1, l_prod = 1;  // (k_i + 1), (l_j + 1) products
  bool some_l_odd = false;
  for (const auto& pp : f.factors()) {
    if (pp.prime == 2 || pp.prime == 3) continue;
    if (pp.prime % 3 == 1) {
      p_sums = checked_mul(p_sums, geometric_sum(pp.prime, pp.exponent));
      k_prod = checked_mul(k_prod, pp.exponent + 1);
    } else {
      q_sums = checked_mul(q_sums, geometric_sum(pp.prime, pp.exponent));
      l_prod = checked_mul(l_prod, pp.exponent + 1);
      some_l_odd = some_l_odd || pp.exponent % 2 == 1;
    }
  }
  // Everything below is 12 * gamma.
  std::uint64_t total = checked_mul(checked_pow(2, a + 1) - 1,
                                    checked_pow(3, b + 1) - 1);
  total = checked_mul(checked_mul(total, p_sums), q_sums);
  const std::uint64_t two_factor = a == 0 ? 1 : 2 * std::uint64_t{a} - 1;
  const std::uint64_t mirror_term = checked_mul(
      6, checked_mul(checked_mul(two_factor, b + 1), checked_mul(k_prod, l_prod)));
  total = checked_add(total, mirror_term);
  const bool rotational = !some_l_odd && a % 2 == 0;
  if (rotational) total = checked_add(total, checked_mul(4, k_prod));
  return exact_div(total, 12, "gamma_by_cases", vertices);
}

std::uint64_t gamma(std::uint64_t vertices) {
  const std::uint64_t by_combination = gamma_by_combination(vertices);
  const std::uint64_t by_cases = gamma_by_cases(vertices);
  if (by_combination != by_cases) {
    throw InternalInconsistency("gamma paths disagree at V=" +
                                std::to_string(vertices) + ": " +
                                std::to_string(by_combination) + " vs " +
                                std::to_string(by_cases));
  }
  return by_combination;
}

std::uint64_t rot_classes_by_cases(std::uint64_t vertices) {
  std::uint64_t k_prod = 1;
  bool some_k_odd = false;
  const auto quarter = quarter_factorization(vertices);
  for (const auto& pp : quarter.factors()) {
    if (pp.prime % 3 == 2 && pp.exponent % 2 == 1) return 0;
    if (pp.prime % 3 == 1) {
      k_prod = checked_mul(k_prod, pp.exponent + 1);
      some_k_odd = some_k_odd || pp.exponent % 2 == 1;
    }
  }
  if (some_k_odd) return exact_div(k_prod, 2, "rot_classes_by_cases", vertices);
  return exact_div(k_prod + 1, 2, "rot_classes_by_cases", vertices);
}

std::uint64_t rot_classes(std::uint64_t vertices) {
  const std::uint64_t value =
      exact_div(delta(vertices) + nu(vertices), 2, "rot_classes", vertices);
  if (value != rot_classes_by_cases(vertices)) {
    throw InternalInconsistency("rot_classes paths disagree at V=" +
                                std::to_string(vertices));
  }
  return value;
}

CountReport report(std::uint64_t vertices) {
  CountReport r;
  r.vertices = vertices;
  r.sigma = sigma(vertices);
  r.delta = delta(vertices);
  r.mu = mu(vertices);
  r.nu = nu(vertices);
  r.trihexes = trihex_count(vertices);
  r.gamma = gamma(vertices);
  r.rot_classes = rot_classes(vertices);
  if (r.nu > 1 || r.delta < r.nu || r.mu < r.nu) {
    throw InternalInconsistency("symmetry counts out of order at V=" +
                                std::to_string(vertices));
  }
  return r;
}

}  // namespace trihex::counting
