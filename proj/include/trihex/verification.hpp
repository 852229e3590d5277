#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trihex::verification {

struct CheckFailure {
  std::uint64_t vertices = 0;
  std::string check;
  std::string expected;
  std::string actual;
};

/// enumeration::verify for one V, with any failure reported instead of thrown.
std::vector<CheckFailure> verify_counts(std::uint64_t vertices);

/// Builds every trihex representative for V and checks the graph-level
/// claims: trihex invariants, orbit members oriented-isomorphic, mirror
/// signature realizes the reflected map, coinciding iff 3 divides the
/// oriented automorphism count, mirror symmetry iff achiral, representatives
/// pairwise non-isomorphic, and the reflective class count equal to gamma.
std::vector<CheckFailure> verify_graphs(std::uint64_t vertices);

}  // namespace trihex::verification
