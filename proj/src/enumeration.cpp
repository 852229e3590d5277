#include "trihex/enumeration.hpp"

#include <algorithm>
#include <set>

#include "trihex/counting.hpp"
#include "trihex/errors.hpp"
#include "trihex/numtheory.hpp"

namespace trihex::enumeration {

namespace {

void sort_unique(std::vector<Signature>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void expect_size(std::uint64_t vertices, const char* field,
                 std::uint64_t expected, std::size_t actual) {
  if (expected != actual) {
    throw VerificationFailure(vertices, field, expected, actual);
  }
}

}  // namespace

std::vector<Signature> all_signatures(std::uint64_t vertices) {
  const auto quarter = counting::quarter_factorization(vertices);
  std::vector<Signature> out;
  for (std::uint64_t d : numtheory::divisors(quarter)) {
    const auto s = static_cast<std::int64_t>(d) - 1;
    const auto b = static_cast<std::int64_t>(quarter.n() / d) - 1;
    for (std::int64_t f = 0; f <= s; ++f) out.push_back(Signature{s, b, f});
  }
  return out;
}

std::vector<Signature> trihex_reps(std::uint64_t vertices) {
  std::vector<Signature> out;
  for (const auto& sig : all_signatures(vertices)) out.push_back(canonical_rep(sig));
  sort_unique(out);
  return out;
}

std::vector<Signature> coinciding_signatures(std::uint64_t vertices) {
  const auto quarter = counting::quarter_factorization(vertices);
  std::vector<Signature> out;
  for (std::uint64_t m : numtheory::divisors(quarter)) {
    if (quarter.n() % (m * m) != 0) continue;
    const std::uint64_t t = quarter.n() / (m * m);
    const auto roots = numtheory::solve_fast(numtheory::factorize(t));
    const auto mi = static_cast<std::int64_t>(m);
    const auto ti = static_cast<std::int64_t>(t);
    for (std::uint64_t g : roots.roots) {
      out.push_back(Signature{ti * mi - 1, mi - 1, static_cast<std::int64_t>(g) * mi});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Signature> self_mirror_signatures(std::uint64_t vertices) {
  const auto quarter = counting::quarter_factorization(vertices);
  std::vector<Signature> out;
  for (std::uint64_t d : numtheory::divisors(quarter)) {
    const auto n = static_cast<std::int64_t>(d);
    const auto b = static_cast<std::int64_t>(quarter.n() / d) - 1;
    for (std::int64_t f = 0; f < n; ++f) {
      if ((2 * f + b + 1) % n == 0) out.push_back(Signature{n - 1, b, f});
    }
  }
  return out;
}

std::vector<Signature> coinciding_self_mirror_signatures(std::uint64_t vertices) {
  std::vector<Signature> out;
  for (const auto& sig : coinciding_signatures(vertices)) {
    if (is_self_mirror(sig)) out.push_back(sig);
  }
  return out;
}

std::vector<Signature> graph_class_reps(std::uint64_t vertices) {
  std::vector<Signature> out;
  for (const auto& rep : trihex_reps(vertices)) {
    if (rep <= canonical_rep(mirror(rep))) out.push_back(rep);
  }
  return out;
}

EnumerationResult verify(std::uint64_t vertices) {
  const counting::CountReport counts = counting::report(vertices);
  EnumerationResult r;
  r.vertices = vertices;
  r.all_signatures = all_signatures(vertices);
  r.trihex_reps = trihex_reps(vertices);
  r.coinciding = coinciding_signatures(vertices);
  r.self_mirror = self_mirror_signatures(vertices);
  r.coinciding_self_mirror = coinciding_self_mirror_signatures(vertices);
  r.graph_class_reps = graph_class_reps(vertices);

  expect_size(vertices, "sigma", counts.sigma, r.all_signatures.size());
  expect_size(vertices, "trihexes", counts.trihexes, r.trihex_reps.size());
  expect_size(vertices, "delta", counts.delta, r.coinciding.size());
  expect_size(vertices, "mu", counts.mu, r.self_mirror.size());
  expect_size(vertices, "nu", counts.nu, r.coinciding_self_mirror.size());
  expect_size(vertices, "gamma", counts.gamma, r.graph_class_reps.size());

  const auto coinciding_by_filter = std::count_if(
      r.all_signatures.begin(), r.all_signatures.end(),
      [](const Signature& sig) { return is_coinciding(sig); });
  expect_size(vertices, "delta (orbit filter)", counts.delta,
              static_cast<std::size_t>(coinciding_by_filter));

  std::size_t with_mirror = 0, with_both = 0;
  for (const auto& rep : r.trihex_reps) {
    if (!has_mirror_symmetry(rep)) continue;
    ++with_mirror;
    if (is_coinciding(rep)) ++with_both;
  }
  expect_size(vertices, "mu (mirror-symmetric reps)", counts.mu, with_mirror);
  expect_size(vertices, "nu (doubly symmetric reps)", counts.nu, with_both);

  const std::set<Signature> reps(r.trihex_reps.begin(), r.trihex_reps.end());
  std::size_t missing = 0;
  for (const auto& sig : r.coinciding) {
    if (!reps.contains(sig)) ++missing;
  }
  expect_size(vertices, "coinciding outside trihex_reps", 0, missing);
  for (const auto& sig : r.all_signatures) {
    if (vertex_count(sig) != static_cast<std::int64_t>(vertices)) {
      throw VerificationFailure(vertices, "vertex_count of " + to_string(sig),
                                vertices,
                                static_cast<std::uint64_t>(vertex_count(sig)));
    }
  }
  return r;
}

}  // namespace trihex::enumeration
