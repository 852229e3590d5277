#pragma once

#include <cstdint>
#include <vector>

#include "trihex/signature.hpp"

namespace trihex::enumeration {

/// Every constructive stream for one vertex count, all sorted ascending.
struct EnumerationResult {
  std::uint64_t vertices = 0;
  std::vector<Signature> all_signatures;
  std::vector<Signature> trihex_reps;
  std::vector<Signature> coinciding;
  std::vector<Signature> self_mirror;
  std::vector<Signature> coinciding_self_mirror;
  std::vector<Signature> graph_class_reps;
};

/// Every (s, b, f) with 4(s+1)(b+1) = V and 0 <= f <= s.
std::vector<Signature> all_signatures(std::uint64_t vertices);

/// One canonical signature per trihex.
std::vector<Signature> trihex_reps(std::uint64_t vertices);

/// (tm-1, m-1, gm) for every V/4 = t m^2 and every root g of x^2+x+1 mod t.
std::vector<Signature> coinciding_signatures(std::uint64_t vertices);

/// Solutions of 2f = -(b+1) (mod s+1) for every divisor pair.
std::vector<Signature> self_mirror_signatures(std::uint64_t vertices);

/// Signatures that are coinciding and self-mirror at once.
std::vector<Signature> coinciding_self_mirror_signatures(std::uint64_t vertices);

/// Trihex representatives with each chiral pair collapsed to its smaller
/// member.
std::vector<Signature> graph_class_reps(std::uint64_t vertices);

/// Builds every stream and checks each size against the closed forms.
/// Throws VerificationFailure naming the first count that disagrees.
EnumerationResult verify(std::uint64_t vertices);

}  // namespace trihex::enumeration
