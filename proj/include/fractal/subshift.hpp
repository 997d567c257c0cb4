#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fractal/errors.hpp"

namespace fractal {

// A substitution over a finite alphabet of single-character symbols.
struct Substitution {
  std::string alphabet;                 // distinct symbols
  std::map<char, std::string> rules;    // nonempty image per symbol
  void validate() const;                // throws MalformedTable
};

// The two substitutions tied to the classic torsion group: the presentation
// substitution a->aca, b->d, c->b, d->c and the primitive generator of the
// same subshift a->ac, b->ac, c->ad, d->ab; Thue-Morse for calibration.
Substitution sigma_substitution();
Substitution sigma_prime_substitution();
Substitution thue_morse_substitution();

std::string apply_substitution(const Substitution& sub, const std::string& w);

// First L letters of the one-sided fixed point starting from `seed`; requires
// seed to be a proper prefix of its own image (PrefixConditionViolated).
std::string fixed_point_prefix(const Substitution& sub, char seed,
                               std::size_t L);

// Least verified period per position (positions n < L/4 of the given prefix).
// A period p is accepted only when every index n+pk inside the prefix carries
// the same symbol and at least `min_checks` repetitions were seen; positions
// with no verifiable period are skipped and counted.
struct ToeplitzResult {
  std::map<std::size_t, std::size_t> period;  // position -> least period
  std::size_t skipped = 0;
};
ToeplitzResult toeplitz_periods(const std::string& prefix,
                                std::size_t min_checks = 4);

// Substitution matrix positivity: primitive iff some power K <= 4|A|^2 of the
// incidence matrix is strictly positive; returns the witness exponent.
struct PrimitivityResult {
  bool primitive = false;
  int witness_k = 0;  // least positive power when primitive
};
PrimitivityResult is_primitive(const Substitution& sub);

// Incidence matrix: entry (i,j) counts symbol alphabet[i] in rules[alphabet[j]].
std::vector<std::vector<long long>> substitution_matrix(const Substitution& sub);

// All factors of the fixed-point language up to max_len (computed from
// iterates of the seed until the factor set stabilizes).
struct FactorLanguage {
  std::size_t max_len = 0;
  std::set<std::string> factors;
};
FactorLanguage language(const Substitution& sub, char seed,
                        std::size_t max_len);

// Searches for a letter permutation of `alphabet` carrying the factors of
// `from` exactly onto the factors of `to`; returns the permutation as a map,
// or an empty map when none exists.  The identity permutation is tried first,
// so equal languages report the identity.
std::map<char, char> language_match_permutation(const FactorLanguage& from,
                                                const FactorLanguage& to,
                                                const std::string& alphabet);

// Finite-window estimate of the linear-repetitivity constant: max over
// factors w with |w| <= w_len of R(w)/|w|, where R(w) is the least window
// length such that every window of that length in the sampled prefix
// contains w.  Upper-bound estimate from a finite prefix.
double repetitivity_bound(const Substitution& sub, char seed,
                          std::size_t w_len);

// Relator words sigma^k((ad)^4) and sigma^k((adacac)^4) over {a,b,c,d}.
std::vector<std::string> presentation_relators(int k_max);

}  // namespace fractal
