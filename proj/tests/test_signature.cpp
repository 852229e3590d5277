#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "trihex/errors.hpp"
#include "trihex/signature.hpp"

using namespace trihex;

namespace {

std::multiset<Signature> as_set(const SignatureOrbit& o) {
  return {o.members().begin(), o.members().end()};
}

// Every signature with 4 <= V <= limit.
std::vector<Signature> signatures_up_to(std::int64_t limit) {
  std::vector<Signature> out;
  for (std::int64_t v = 4; v <= limit; v += 4) {
    for (const auto& sig : oracle::signatures(v)) out.push_back(sig);
  }
  return out;
}

}  // namespace

TEST_CASE("signature construction and text form") {
  CHECK(Signature::make(6, 2, 1) == Signature{6, 2, 1});
  CHECK_THROWS_AS(Signature::make(1, 0, 2), InvalidInput);
  CHECK_THROWS_AS(Signature::make(-1, 0, 0), InvalidInput);
  CHECK_THROWS_AS(Signature::make(0, -1, 0), InvalidInput);
  CHECK(to_string(Signature{13, 1, 4}) == "(13,1,4)");
  CHECK(parse_signature("13,1,4") == Signature{13, 1, 4});
  CHECK(parse_signature("(3,1,2)") == Signature{3, 1, 2});
  CHECK_THROWS_AS(parse_signature("1,0,2"), InvalidInput);
  CHECK_THROWS_AS(parse_signature("1,2"), InvalidInput);
  CHECK_THROWS_AS(parse_signature("a,b,c"), InvalidInput);
}

TEST_CASE("vertex and hexagon counts") {
  CHECK(vertex_count({0, 0, 0}) == 4);
  CHECK(vertex_count({6, 2, 1}) == 84);
  CHECK(vertex_count({13, 1, 4}) == 112);
  CHECK(hexagon_count({0, 0, 0}) == 0);
  CHECK(hexagon_count({3, 1, 2}) == 14);
  CHECK(hexagon_count({6, 2, 1}) == 40);
}

TEST_CASE("ord_mod and min_multiplier") {
  CHECK(ord_mod(2, 4) == 2);
  CHECK(ord_mod(0, 5) == 1);
  for (std::int64_t a = -3; a <= 10; ++a) CHECK(ord_mod(a, 1) == 1);
  CHECK(min_multiplier(2, 2, 4) == 1);
  CHECK(min_multiplier(0, 4, 4) == 1);
  CHECK(min_multiplier(0, 1, 1) == 1);
  CHECK_THROWS_AS(min_multiplier(2, 1, 4), NoSolution);

  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t a = 0; a < n; ++a) {
      CHECK(ord_mod(a, n) == oracle::ord(a, n));
      for (std::int64_t t = 0; t < n; ++t) {
        const auto expected = oracle::min_multiplier(a, t, n);
        if (expected == 0) {
          CHECK_THROWS_AS(min_multiplier(a, t, n), NoSolution);
        } else {
          CHECK(min_multiplier(a, t, n) == expected);
        }
      }
    }
  }
}

TEST_CASE("orbit examples") {
  const auto distinct = orbit({3, 1, 2});
  CHECK(distinct.first() == Signature{3, 1, 2});
  CHECK(distinct.second() == Signature{3, 1, 0});
  CHECK(distinct.third() == Signature{1, 3, 0});

  const auto coinciding = orbit({13, 1, 4});
  for (const auto& m : coinciding.members()) CHECK(m == Signature{13, 1, 4});

  for (std::int64_t b = 0; b <= 5; ++b) {
    const auto o = orbit({0, b, 0});
    for (const auto& m : o.members()) CHECK(vertex_count(m) == 4 * (b + 1));
  }
}

TEST_CASE("orbit rejects inconsistent members") {
  CHECK_THROWS_AS(SignatureOrbit({3, 1, 2}, {3, 1, 2}, {1, 3, 0}),
                  InternalInconsistency);
  CHECK_THROWS_AS(SignatureOrbit({3, 1, 2}, {3, 1, 0}, {0, 0, 0}),
                  InternalInconsistency);
}

TEST_CASE("mirror examples") {
  CHECK(mirror({4, 2, 1}) == Signature{4, 2, 1});
  CHECK(mirror({14, 0, 11}) == Signature{14, 0, 3});
  CHECK(mirror({0, 0, 0}) == Signature{0, 0, 0});
}

TEST_CASE("coinciding examples") {
  CHECK(is_coinciding({13, 1, 4}));
  CHECK_FALSE(is_coinciding({3, 1, 2}));
  for (std::int64_t m = 1; m <= 10; ++m) CHECK(is_coinciding({m - 1, m - 1, 0}));
}

TEST_CASE("self-mirror and mirror-symmetry examples") {
  CHECK(is_self_mirror({4, 2, 1}));
  CHECK_FALSE(is_self_mirror({14, 0, 11}));
  CHECK(is_self_mirror({6, 0, 3}));
  CHECK(has_mirror_symmetry({14, 0, 11}));
  CHECK(has_mirror_symmetry({0, 0, 0}));
  CHECK(orbit({4, 2, 1}).contains({14, 0, 11}));
  CHECK(orbit({4, 2, 1}).contains({14, 0, 3}));
}

TEST_CASE("canonical representative") {
  CHECK(canonical_rep({3, 1, 2}) == Signature{1, 3, 0});
  CHECK(canonical_rep({13, 1, 4}) == Signature{13, 1, 4});
  CHECK(canonical_rep({0, 0, 0}) == Signature{0, 0, 0});
}

TEST_CASE("orbit matches rotations of the rotocenter lattice") {
  CHECK(oracle::orbit({3, 1, 2}) ==
        std::multiset<Signature>{{3, 1, 2}, {3, 1, 0}, {1, 3, 0}});
  for (const auto& sig : signatures_up_to(400)) {
    CHECK_MESSAGE(as_set(orbit(sig)) == oracle::orbit(sig), to_string(sig));
    CHECK_MESSAGE(mirror(sig) == oracle::reflect(sig), to_string(sig));
  }
}

TEST_CASE("orbit closure") {
  for (const auto& sig : signatures_up_to(400)) {
    const auto o = orbit(sig);
    for (const auto& m : o.members()) {
      CHECK_MESSAGE(as_set(orbit(m)) == as_set(o), to_string(sig) << " via " << to_string(m));
    }
  }
}

TEST_CASE("coinciding predicates agree and imply divisibility") {
  for (const auto& sig : signatures_up_to(400)) {
    const bool by_orbit = orbit(sig).first() == orbit(sig).second();
    CHECK(is_coinciding_by_form(sig) == by_orbit);
    CHECK(is_coinciding(sig) == by_orbit);
    if (by_orbit) {
      CHECK((sig.s + 1) % (sig.b + 1) == 0);
      CHECK(sig.f % (sig.b + 1) == 0);
    }
  }
}

TEST_CASE("mirror is an involution commuting with the orbit") {
  for (const auto& sig : signatures_up_to(400)) {
    CHECK(mirror(mirror(sig)) == sig);
    CHECK(is_self_mirror(sig) == (mirror(sig) == sig));
    std::multiset<Signature> mirrored;
    const auto o = orbit(sig);
    for (const auto& m : o.members()) mirrored.insert(mirror(m));
    CHECK_MESSAGE(as_set(orbit(mirror(sig))) == mirrored, to_string(sig));
  }
}

TEST_CASE("mirror-symmetric orbits without 3-fold symmetry hold one self-mirror member") {
  for (const auto& sig : signatures_up_to(400)) {
    if (!has_mirror_symmetry(sig) || is_coinciding(sig)) continue;
    const auto o = orbit(sig);
    std::vector<Signature> others;
    for (const auto& m : o.members()) {
      if (!is_self_mirror(m)) others.push_back(m);
    }
    REQUIRE_MESSAGE(others.size() == 2, to_string(sig));
    CHECK_MESSAGE(mirror(others[0]) == others[1], to_string(sig));
  }
}

TEST_CASE("canonical representative is the minimum of the orbit") {
  for (const auto& sig : signatures_up_to(400)) {
    const auto sorted = orbit(sig).sorted();
    CHECK(canonical_rep(sig) == sorted[0]);
    CHECK(canonical_rep(canonical_rep(sig)) == canonical_rep(sig));
  }
}
