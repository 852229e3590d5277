#include "trihex/verification.hpp"

#include <set>

#include "trihex/counting.hpp"
#include "trihex/enumeration.hpp"
#include "trihex/errors.hpp"
#include "trihex/graph.hpp"

namespace trihex::verification {

namespace {

std::string yes_no(bool value) { return value ? "true" : "false"; }

}  // namespace

std::vector<CheckFailure> verify_counts(std::uint64_t vertices) {
  try {
    enumeration::verify(vertices);
  } catch (const VerificationFailure& e) {
    return {{vertices, e.field(), std::to_string(e.expected()),
             std::to_string(e.actual())}};
  } catch (const InternalInconsistency& e) {
    return {{vertices, "internal", "consistent", e.what()}};
  }
  return {};
}

std::vector<CheckFailure> verify_graphs(std::uint64_t vertices) {
  std::vector<CheckFailure> failures;
  const auto fail = [&](std::string check, std::string expected, std::string actual) {
    failures.push_back({vertices, std::move(check), std::move(expected), std::move(actual)});
  };
  std::set<std::vector<std::uint32_t>> oriented_codes;
  std::set<std::vector<std::uint32_t>> reflective_codes;
  std::size_t reps = 0;
  try {
    for (const Signature& rep : enumeration::trihex_reps(vertices)) {
      ++reps;
      const std::string name = to_string(rep);
      const graph::EmbeddedGraph g = graph::build(rep);
      for (const auto& problem : graph::trihex_violations(g)) {
        fail("invariants " + name, "none", problem);
      }
      const graph::CanonicalCode oriented = graph::canonical_code(g, false);
      oriented_codes.insert(oriented.code);
      reflective_codes.insert(graph::canonical_code(g, true).code);

      const SignatureOrbit members = orbit(rep);
      for (const Signature& member : members.members()) {
        if (graph::canonical_code(graph::build(member), false).code != oriented.code) {
          fail("orbit member " + to_string(member) + " of " + name,
               "oriented-isomorphic", "different");
        }
      }
      const auto mirrored = graph::canonical_code(graph::build(mirror(rep)), false);
      if (mirrored.code != graph::canonical_code(graph::reflect(g), false).code) {
        fail("mirror realization " + name, "reflected map", "different");
      }
      const bool three_fold = oriented.oriented_aut_count % 3 == 0;
      if (three_fold != is_coinciding(rep)) {
        fail("3-fold symmetry " + name, yes_no(is_coinciding(rep)),
             yes_no(three_fold) + " (|Aut+|=" +
                 std::to_string(oriented.oriented_aut_count) + ")");
      }
      if ((3 * g.size()) % oriented.oriented_aut_count != 0) {
        fail("|Aut+| divides 3n " + name, "divides",
             std::to_string(oriented.oriented_aut_count));
      }
      const bool achiral = !graph::is_chiral(g);
      if (achiral != has_mirror_symmetry(rep)) {
        fail("mirror symmetry " + name, yes_no(has_mirror_symmetry(rep)),
             yes_no(achiral));
      }
    }
  } catch (const InternalInconsistency& e) {
    fail("internal", "consistent", e.what());
    return failures;
  }
  if (oriented_codes.size() != reps) {
    fail("separation", std::to_string(reps), std::to_string(oriented_codes.size()));
  }
  const std::uint64_t gamma = counting::gamma(vertices);
  if (reflective_codes.size() != gamma) {
    fail("graph classes", std::to_string(gamma),
         std::to_string(reflective_codes.size()));
  }
  return failures;
}

}  // namespace trihex::verification
