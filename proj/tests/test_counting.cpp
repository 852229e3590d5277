#include "doctest.h"
#include "oracles.hpp"
#include "published_counts.hpp"
#include "trihex/counting.hpp"
#include "trihex/errors.hpp"

using namespace trihex;
using namespace trihex::counting;

TEST_CASE("invalid vertex counts are rejected") {
  for (std::uint64_t v : {0, 1, 2, 3, 6, 10, 402}) {
    CHECK_THROWS_AS(sigma(v), InvalidInput);
    CHECK_THROWS_AS(report(v), InvalidInput);
  }
}

TEST_CASE("sigma") {
  CHECK(sigma(4) == 1);
  CHECK(sigma(28) == 8);
  CHECK(sigma(112) == 56);
  for (std::uint64_t v = 4; v <= 4000; v += 4) {
    CHECK(sigma(v) == oracle::divisor_sum(v / 4));
  }
}

TEST_CASE("delta, mu and nu") {
  CHECK(delta(28) == 2);
  CHECK(delta(8) == 0);
  CHECK(delta(4) == 1);
  CHECK(mu(4) == 1);
  CHECK(mu(28) == 2);
  CHECK(mu(48) == 6);
  CHECK(nu(4) == 1);
  CHECK(nu(144) == 1);
  CHECK(nu(28) == 0);
}

TEST_CASE("nu witnesses are doubly symmetric") {
  CHECK(nu_witness(4) == Signature{0, 0, 0});
  CHECK(nu_witness(144) == Signature{5, 5, 0});
  CHECK(nu_witness(12) == Signature{2, 0, 1});
  CHECK_FALSE(nu_witness(28).has_value());
  for (std::uint64_t v = 4; v <= 4000; v += 4) {
    const auto w = nu_witness(v);
    CHECK(w.has_value() == (nu(v) == 1));
    if (!w) continue;
    CHECK(vertex_count(*w) == static_cast<std::int64_t>(v));
    CHECK(is_coinciding(*w));
    CHECK(has_mirror_symmetry(*w));
  }
}

TEST_CASE("trihex count, gamma and rotational classes") {
  CHECK(trihex_count(28) == 4);
  CHECK(trihex_count(120) == 24);
  CHECK(trihex_count(360) == 78);
  CHECK(gamma(28) == 3);
  CHECK(gamma(4) == 1);
  CHECK(gamma(240) == 34);
  CHECK(rot_classes(4) == 1);
  CHECK(rot_classes(28) == 1);
  CHECK(rot_classes(8) == 0);
}

TEST_CASE("published table") {
  for (const auto& row : testing::kPublishedCounts) {
    CHECK_MESSAGE(trihex_count(row.vertices) == row.trihexes, "V=" << row.vertices);
    CHECK_MESSAGE(gamma(row.vertices) == row.gamma, "V=" << row.vertices);
  }
}

TEST_CASE("reports") {
  const CountReport four{4, 1, 1, 1, 1, 1, 1, 1};
  CHECK(report(4) == four);
  const CountReport twenty_eight{28, 8, 2, 2, 0, 4, 3, 1};
  CHECK(report(28) == twenty_eight);
  const auto r360 = report(360);
  CHECK(r360.trihexes == 78);
  CHECK(r360.gamma == 42);
  const auto r112 = report(112);
  CHECK(r112.sigma == 56);
  CHECK(r112.trihexes == 20);
  CHECK(r112.gamma == 13);
}

TEST_CASE("integrality and dual paths up to 4000") {
  for (std::uint64_t v = 4; v <= 4000; v += 4) {
    const auto s = sigma(v), d = delta(v), m = mu(v), n = nu(v);
    CHECK((s + 2 * d) % 3 == 0);
    CHECK((s + 2 * d + 3 * m) % 6 == 0);
    CHECK((d + n) % 2 == 0);
    CHECK_MESSAGE(gamma_by_combination(v) == gamma_by_cases(v), "V=" << v);
    CHECK_MESSAGE(rot_classes_by_cases(v) == (d + n) / 2, "V=" << v);
    const auto r = report(v);
    CHECK(r.nu <= 1);
    CHECK(r.delta >= r.nu);
    CHECK(r.mu >= r.nu);
  }
}
