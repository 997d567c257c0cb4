#include "fractal/rational.hpp"

#include <cstddef>

#include "fractal/errors.hpp"

namespace fractal {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw UnknownName("empty rational literal");
  auto slash = s.find('/');
  auto dot = s.find('.');
  try {
    if (slash != std::string::npos) {
      Rat q(s);
      q.canonicalize();
      return q;
    }
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t frac = s.size() - dot - 1;
      Rat q{mpz_class(digits)};
      for (std::size_t i = 0; i < frac; ++i) q /= 10;
      q.canonicalize();
      return q;
    }
    return Rat{mpz_class(s)};
  } catch (const std::invalid_argument&) {
    throw UnknownName("bad rational literal '" + s + "'");
  }
}

}  // namespace fractal
