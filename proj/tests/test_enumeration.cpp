#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "trihex/counting.hpp"
#include "trihex/enumeration.hpp"
#include "trihex/errors.hpp"

using namespace trihex;
using namespace trihex::enumeration;
using Sigs = std::vector<Signature>;

namespace {

bool contains(const Sigs& list, const Signature& sig) {
  return std::find(list.begin(), list.end(), sig) != list.end();
}

}  // namespace

TEST_CASE("all signatures") {
  CHECK(all_signatures(4) == Sigs{{0, 0, 0}});
  const Sigs twenty_eight{{0, 6, 0}, {6, 0, 0}, {6, 0, 1}, {6, 0, 2},
                          {6, 0, 3}, {6, 0, 4}, {6, 0, 5}, {6, 0, 6}};
  CHECK(all_signatures(28) == twenty_eight);
  CHECK(all_signatures(16).size() == 7);
  for (std::int64_t v = 4; v <= 400; v += 4) {
    CHECK(all_signatures(v) == oracle::signatures(v));
  }
}

TEST_CASE("trihex representatives") {
  CHECK(trihex_reps(4) == Sigs{{0, 0, 0}});
  CHECK(trihex_reps(28).size() == 4);
  const auto reps32 = trihex_reps(32);
  CHECK(reps32.size() == 5);
  CHECK(contains(reps32, {1, 3, 0}));
  CHECK(std::is_sorted(reps32.begin(), reps32.end()));
}

TEST_CASE("coinciding signatures") {
  CHECK(coinciding_signatures(28) == Sigs{{6, 0, 2}, {6, 0, 4}});
  CHECK(coinciding_signatures(112) == Sigs{{13, 1, 4}, {13, 1, 8}});
  CHECK(coinciding_signatures(8).empty());
}

TEST_CASE("self-mirror signatures") {
  CHECK(self_mirror_signatures(28) == Sigs{{0, 6, 0}, {6, 0, 3}});
  CHECK(contains(self_mirror_signatures(60), {4, 2, 1}));
  CHECK(self_mirror_signatures(4) == Sigs{{0, 0, 0}});
}

TEST_CASE("graph class representatives") {
  CHECK(graph_class_reps(28).size() == 3);
  CHECK(graph_class_reps(4).size() == 1);
  CHECK(trihex_reps(112).size() == 20);
  CHECK(graph_class_reps(112).size() == 13);
}

TEST_CASE("verify") {
  CHECK_NOTHROW(verify(28));
  const auto r = verify(360);
  CHECK(r.trihex_reps.size() == 78);
  CHECK(r.graph_class_reps.size() == 42);
  CHECK_THROWS_AS(verify(6), InvalidInput);
}

TEST_CASE("size identities and stream structure up to 400") {
  for (std::uint64_t v = 4; v <= 400; v += 4) {
    CAPTURE(v);
    const auto r = verify(v);
    const auto counts = counting::report(v);
    CHECK(r.all_signatures.size() == counts.sigma);
    CHECK(r.trihex_reps.size() == counts.trihexes);
    CHECK(r.coinciding.size() == counts.delta);
    CHECK(r.self_mirror.size() == counts.mu);
    CHECK(r.coinciding_self_mirror.size() == counts.nu);
    CHECK(r.graph_class_reps.size() == counts.gamma);

    std::set<Signature> reps(r.trihex_reps.begin(), r.trihex_reps.end());
    std::set<Signature> mirrored;
    std::size_t mirror_symmetric = 0, doubly = 0, rot_classes = 0;
    for (const auto& rep : r.trihex_reps) {
      mirrored.insert(canonical_rep(mirror(rep)));
      if (has_mirror_symmetry(rep)) ++mirror_symmetric;
      if (has_mirror_symmetry(rep) && is_coinciding(rep)) ++doubly;
    }
    CHECK(mirrored == reps);
    CHECK(mirror_symmetric == counts.mu);
    CHECK(doubly == counts.nu);

    for (const auto& sig : r.coinciding) {
      CHECK(reps.count(sig) == 1);
      const auto o = orbit(sig);
      CHECK(o.first() == o.second());
      CHECK(o.second() == o.third());
    }
    for (const auto& sig : r.self_mirror) CHECK(is_self_mirror(sig));
    for (const auto& sig : r.graph_class_reps) {
      CHECK(reps.count(sig) == 1);
      CHECK(sig <= canonical_rep(mirror(sig)));
    }
    std::set<Signature> classes;
    for (const auto& sig : r.coinciding) {
      classes.insert(std::min(sig, canonical_rep(mirror(sig))));
    }
    rot_classes = classes.size();
    CHECK(rot_classes == counts.rot_classes);
  }
}
