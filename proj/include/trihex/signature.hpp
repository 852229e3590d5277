#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace trihex {

/// Spine length, belt count and offset of a trihex. The offset is a residue
/// mod s + 1 and is always stored in [0, s].
struct Signature {
  std::int64_t s = 0;
  std::int64_t b = 0;
  std::int64_t f = 0;

  /// Validating constructor; throws InvalidInput unless 0 <= f <= s, b >= 0.
  static Signature make(std::int64_t s, std::int64_t b, std::int64_t f);

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// `(s,b,f)`
std::string to_string(const Signature& sig);

/// Accepts `s,b,f` or `(s,b,f)`, optional blanks. Throws InvalidInput.
Signature parse_signature(std::string_view text);

/// The three equivalent signatures of one trihex. `second` and `third` are
/// computed from `first`; construction checks that all three describe the
/// same vertex and hexagon counts and are either all equal or all distinct.
class SignatureOrbit {
 public:
  SignatureOrbit(Signature first, Signature second, Signature third);

  const Signature& first() const noexcept { return members_[0]; }
  const Signature& second() const noexcept { return members_[1]; }
  const Signature& third() const noexcept { return members_[2]; }
  const std::array<Signature, 3>& members() const noexcept { return members_; }

  bool contains(const Signature& sig) const noexcept;

  /// Members sorted ascending; two orbits describe the same trihex iff their
  /// sorted members are equal.
  std::array<Signature, 3> sorted() const;

 private:
  std::array<Signature, 3> members_;
};

std::int64_t vertex_count(const Signature& sig);
std::int64_t hexagon_count(const Signature& sig);

/// Additive order of a in Z_n: n / gcd(a mod n, n).
std::int64_t ord_mod(std::int64_t a, std::int64_t n);

/// Smallest p >= 1 with p*a = target (mod n). Returns 1 when n = 1. Throws
/// NoSolution when gcd(a, n) does not divide target.
std::int64_t min_multiplier(std::int64_t a, std::int64_t target, std::int64_t n);

SignatureOrbit orbit(const Signature& sig);

/// (s, b, (s - b - f) mod (s + 1))
Signature mirror(const Signature& sig);

/// All three equivalent signatures coincide. Evaluated both from the orbit
/// and from the (tm - 1, m - 1, gm) characterization; a disagreement throws
/// InternalInconsistency.
bool is_coinciding(const Signature& sig);

/// The arithmetic characterization alone: m = b + 1 divides s + 1 and f, and
/// g = f/m is a root of x^2 + x + 1 modulo t = (s + 1)/m.
bool is_coinciding_by_form(const Signature& sig);

/// mirror(sig) == sig, cross-checked against 2f = -(b + 1) (mod s + 1).
bool is_self_mirror(const Signature& sig);

/// mirror(sig) is one of the equivalent signatures of sig.
bool has_mirror_symmetry(const Signature& sig);

/// Lexicographically smallest member of orbit(sig).
Signature canonical_rep(const Signature& sig);

}  // namespace trihex
