#pragma once

#include <cstdint>
#include <optional>

#include "trihex/numtheory.hpp"
#include "trihex/signature.hpp"

namespace trihex::counting {

/// Every counting function for one vertex count.
struct CountReport {
  std::uint64_t vertices = 0;
  std::uint64_t sigma = 0;        // signatures
  std::uint64_t delta = 0;        // trihexes with 3-fold rotational symmetry
  std::uint64_t mu = 0;           // trihexes with mirror symmetry
  std::uint64_t nu = 0;           // trihexes with both symmetries
  std::uint64_t trihexes = 0;     // trihexes, chiral pairs counted twice
  std::uint64_t gamma = 0;        // graph isomorphism classes
  std::uint64_t rot_classes = 0;  // graph classes with 3-fold symmetry

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// Throws InvalidInput unless V >= 4 and V = 0 (mod 4).
void require_vertex_count(std::uint64_t vertices);

/// Factorization of V/4, after validating V.
numtheory::Factorization quarter_factorization(std::uint64_t vertices);

std::uint64_t sigma(std::uint64_t vertices);
std::uint64_t delta(std::uint64_t vertices);
std::uint64_t trihex_count(std::uint64_t vertices);
std::uint64_t mu(std::uint64_t vertices);
std::uint64_t nu(std::uint64_t vertices);

/// The unique signature with both symmetries, when nu(V) = 1: (m-1, m-1, 0)
/// if V/4 is a square, otherwise (3m-1, m-1, m).
std::optional<Signature> nu_witness(std::uint64_t vertices);

/// sigma/6 + delta/3 + mu/2; cross-checked against gamma_by_cases.
std::uint64_t gamma(std::uint64_t vertices);

/// sigma/6 + delta/3 + mu/2 as a single exact division.
std::uint64_t gamma_by_combination(std::uint64_t vertices);

/// The four closed forms split on the exponent of 2 and the parity of the
/// exponents of the odd primes = 2 (mod 3).
std::uint64_t gamma_by_cases(std::uint64_t vertices);

/// (delta + nu)/2; cross-checked against rot_classes_by_cases.
std::uint64_t rot_classes(std::uint64_t vertices);
std::uint64_t rot_classes_by_cases(std::uint64_t vertices);

CountReport report(std::uint64_t vertices);

}  // namespace trihex::counting
