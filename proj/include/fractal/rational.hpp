#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fractal {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline std::string rat_str(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "p", "-p", "p/q" and plain decimals like "1.5".
Rat rat_parse(const std::string& s);

inline double rat_double(const Rat& q) { return q.get_d(); }

// Deterministic stream of small nonzero rationals for property tests.
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : rng_(seed) {}
  // numerator in [-max,max]\{0}, denominator in [1,max]
  Rat next(int max = 9) {
    std::uniform_int_distribution<int> num(-max, max);
    std::uniform_int_distribution<int> den(1, max);
    int n = 0;
    while (n == 0) n = num(rng_);
    Rat q(n, den(rng_));
    q.canonicalize();
    return q;
  }
  std::vector<Rat> tuple(int k, int max = 9) {
    std::vector<Rat> v;
    v.reserve(k);
    for (int i = 0; i < k; ++i) v.push_back(next(max));
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fractal
