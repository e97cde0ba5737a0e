#pragma once

#include <stdexcept>
#include <string>

namespace cofmat {

// Edge sets (or matroids) built over different ambient K_n were combined.
struct AmbientMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// An operation was called outside its documented domain.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed edge-list or matroid file.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration cap (ambient n, ground size, cover size) would be exceeded.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The seeded field evaluations disagree beyond the majority policy.
struct SeedDisagreement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two independently computed witnesses that must coincide did not.
// `diagnostic` carries a JSON dump describing the failing instance.
struct WitnessMismatch : std::runtime_error {
  WitnessMismatch(const std::string& what, std::string diag)
      : std::runtime_error(what), diagnostic(std::move(diag)) {}
  std::string diagnostic;
};

}  // namespace cofmat
