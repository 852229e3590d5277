#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trihex {

// Caller handed us something outside an operation's domain (n = 0, V not a
// multiple of 4, f > s, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A linear congruence a*p = target (mod n) has no solution.
class NoSolution : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An identity that holds for every valid input failed. Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised by the enumeration harness when a constructed count disagrees with
// its closed form.
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(std::uint64_t vertices, std::string field,
                      std::uint64_t expected, std::uint64_t actual)
      : std::runtime_error("V=" + std::to_string(vertices) + ": " + field +
                           " expected " + std::to_string(expected) + ", got " +
                           std::to_string(actual)),
        vertices_(vertices),
        field_(std::move(field)),
        expected_(expected),
        actual_(actual) {}

  std::uint64_t vertices() const noexcept { return vertices_; }
  const std::string& field() const noexcept { return field_; }
  std::uint64_t expected() const noexcept { return expected_; }
  std::uint64_t actual() const noexcept { return actual_; }

 private:
  std::uint64_t vertices_;
  std::string field_;
  std::uint64_t expected_;
  std::uint64_t actual_;
};

}  // namespace trihex
