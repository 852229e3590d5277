#include "trihex/signature.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <tuple>
#include <utility>

#include "trihex/errors.hpp"

namespace trihex {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t exact_div(std::int64_t num, std::int64_t den, const Signature& sig) {
  if (den <= 0 || num < 0 || num % den != 0) {
    throw InternalInconsistency("inexact belt count " + std::to_string(num) +
                                "/" + std::to_string(den) + " for " +
                                to_string(sig));
  }
  return num / den;
}

// One alternative direction of the orbit construction. `step` is f for the
// SW-NE spines and f + b + 1 for the NW-SE spines; `extra` is the (b2 + 1)
// correction that only the SW-NE offset carries.
Signature alternative(const Signature& sig, std::int64_t step, bool with_extra) {
  const std::int64_t h = hexagon_count(sig);
  const std::int64_t j = ord_mod(step, sig.s + 1);
  const std::int64_t s2 = j * (sig.b + 1) - 1;
  const std::int64_t b2 = exact_div(h - 2 * s2, 2 * s2 + 2, sig);
  std::int64_t p = 0;
  try {
    p = min_multiplier(step, b2 + 1, sig.s + 1);
  } catch (const NoSolution& e) {
    throw InternalInconsistency("orbit of " + to_string(sig) + ": " + e.what());
  }
  const std::int64_t raw = -p * (sig.b + 1) - (with_extra ? b2 + 1 : 0);
  return Signature{s2, b2, mod_floor(raw, s2 + 1)};
}

}  // namespace

Signature Signature::make(std::int64_t s, std::int64_t b, std::int64_t f) {
  if (s < 0 || b < 0 || f < 0 || f > s) {
    throw InvalidInput("invalid signature (" + std::to_string(s) + "," +
                       std::to_string(b) + "," + std::to_string(f) +
                       "): need s, b >= 0 and 0 <= f <= s");
  }
  return Signature{s, b, f};
}

std::string to_string(const Signature& sig) {
  return "(" + std::to_string(sig.s) + "," + std::to_string(sig.b) + "," +
         std::to_string(sig.f) + ")";
}

Signature parse_signature(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t') compact.push_back(c);
  }
  std::string_view body = compact;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  std::array<std::int64_t, 3> parts{};
  const char* cursor = body.data();
  const char* end = body.data() + body.size();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto [next, ec] = std::from_chars(cursor, end, parts[i]);
    if (ec != std::errc{} || next == cursor) {
      throw InvalidInput("malformed signature '" + std::string(text) + "'");
    }
    cursor = next;
    if (i + 1 < parts.size()) {
      if (cursor == end || *cursor != ',') {
        throw InvalidInput("malformed signature '" + std::string(text) + "'");
      }
      ++cursor;
    }
  }
  if (cursor != end) {
    throw InvalidInput("malformed signature '" + std::string(text) + "'");
  }
  return Signature::make(parts[0], parts[1], parts[2]);
}

SignatureOrbit::SignatureOrbit(Signature first, Signature second, Signature third)
    : members_{first, second, third} {
  for (const auto& m : members_) {
    if (vertex_count(m) != vertex_count(first) ||
        hexagon_count(m) != hexagon_count(first)) {
      throw InternalInconsistency("orbit of " + to_string(first) +
                                  " changes the vertex or hexagon count");
    }
  }
  const bool a = first == second, b = second == third, c = first == third;
  const bool all_same = a && b;
  const bool all_distinct = !a && !b && !c;
  if (!all_same && !all_distinct) {
    throw InternalInconsistency("orbit of " + to_string(first) +
                                " is neither coinciding nor distinct");
  }
}

bool SignatureOrbit::contains(const Signature& sig) const noexcept {
  return std::find(members_.begin(), members_.end(), sig) != members_.end();
}

std::array<Signature, 3> SignatureOrbit::sorted() const {
  auto out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t vertex_count(const Signature& sig) {
  return 4 * (sig.s + 1) * (sig.b + 1);
}

std::int64_t hexagon_count(const Signature& sig) {
  const std::int64_t h = 2 * sig.s * sig.b + 2 * sig.s + 2 * sig.b;
  if (h != vertex_count(sig) / 2 - 2) {
    throw InternalInconsistency("hexagon count disagrees with Euler for " +
                                to_string(sig));
  }
  return h;
}

std::int64_t ord_mod(std::int64_t a, std::int64_t n) {
  if (n < 1) throw InvalidInput("ord_mod: modulus must be positive");
  return n / std::gcd(mod_floor(a, n), n);
}

std::int64_t min_multiplier(std::int64_t a, std::int64_t target, std::int64_t n) {
  if (n < 1) throw InvalidInput("min_multiplier: modulus must be positive");
  if (n == 1) return 1;
  const std::int64_t ar = mod_floor(a, n);
  const std::int64_t tr = mod_floor(target, n);
  const std::int64_t g = std::gcd(ar, n);
  if (tr % g != 0) {
    throw NoSolution("no p with p*" + std::to_string(a) + " = " +
                     std::to_string(target) + " (mod " + std::to_string(n) +
                     ")");
  }
  const std::int64_t reduced = n / g;
  if (reduced == 1) return 1;
  // Solve p * (ar/g) = tr/g (mod n/g) with the extended Euclid inverse.
  std::int64_t old_r = (ar / g) % reduced, r = reduced;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  const std::int64_t inv = mod_floor(old_s, reduced);
  const std::int64_t p = static_cast<std::int64_t>(
      static_cast<__int128>(inv) * (tr / g) % reduced);
  return p == 0 ? reduced : p;
}

SignatureOrbit orbit(const Signature& sig) {
  const Signature second = alternative(sig, sig.f, true);
  const Signature third = alternative(sig, sig.f + sig.b + 1, false);
  return SignatureOrbit(sig, second, third);
}

Signature mirror(const Signature& sig) {
  return Signature{sig.s, sig.b, mod_floor(sig.s - sig.b - sig.f, sig.s + 1)};
}

bool is_coinciding_by_form(const Signature& sig) {
  const std::int64_t m = sig.b + 1;
  if ((sig.s + 1) % m != 0 || sig.f % m != 0) return false;
  const std::int64_t t = (sig.s + 1) / m;
  const std::int64_t g = sig.f / m;
  const __int128 value = static_cast<__int128>(g) * g + g + 1;
  return value % t == 0;
}

bool is_coinciding(const Signature& sig) {
  const SignatureOrbit o = orbit(sig);
  const bool by_orbit = o.first() == o.second() && o.second() == o.third();
  if (by_orbit != is_coinciding_by_form(sig)) {
    throw InternalInconsistency("coinciding tests disagree for " +
                                to_string(sig));
  }
  return by_orbit;
}

bool is_self_mirror(const Signature& sig) {
  const bool by_mirror = mirror(sig) == sig;
  const bool by_congruence = mod_floor(2 * sig.f + sig.b + 1, sig.s + 1) == 0;
  if (by_mirror != by_congruence) {
    throw InternalInconsistency("self-mirror tests disagree for " +
                                to_string(sig));
  }
  return by_mirror;
}

bool has_mirror_symmetry(const Signature& sig) {
  return orbit(sig).contains(mirror(sig));
}

Signature canonical_rep(const Signature& sig) {
  const SignatureOrbit o = orbit(sig);
  return *std::min_element(o.members().begin(), o.members().end());
}

}  // namespace trihex
