#pragma once

#include <stdexcept>
#include <string>

namespace fractal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Automaton / word problem
struct MalformedTable : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct NotContractingWithinCap : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };

// Graphs
struct StabilizationNotReached : Error { using Error::Error; };
struct PatternMismatch : Error { using Error::Error; };

// Spectra
struct AsymmetricPencil : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct RootCountMismatch : Error { using Error::Error; };

// Schur complements
struct SingularBlock : Error { using Error::Error; };
struct ZeroCharacter : Error {
  explicit ZeroCharacter(int idx)
      : Error("group algebra element not invertible: character " +
              std::to_string(idx) + " vanishes"),
        index(idx) {}
  int index;
};

// Rational maps / measures
struct Indeterminate : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };

// Substitutions
struct PrefixConditionViolated : Error { using Error::Error; };

}  // namespace fractal
