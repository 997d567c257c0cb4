#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "fractal/errors.hpp"
#include "fractal/rational.hpp"

namespace fractal {

template <typename T>
struct Dense {
  int n = 0, m = 0;
  std::vector<T> a;

  Dense() = default;
  Dense(int rows, int cols) : n(rows), m(cols), a((std::size_t)rows * cols) {}
  T& at(int i, int j) { return a[(std::size_t)i * m + j]; }
  const T& at(int i, int j) const { return a[(std::size_t)i * m + j]; }

  static Dense identity(int k) {
    Dense I(k, k);
    for (int i = 0; i < k; ++i) I.at(i, i) = T(1);
    return I;
  }
  bool operator==(const Dense&) const = default;
};

using MatQ = Dense<Rat>;
using MatD = Dense<double>;

template <typename T>
Dense<T> operator*(const Dense<T>& x, const Dense<T>& y) {
  Dense<T> r(x.n, y.m);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.m; ++k) {
      const T& v = x.at(i, k);
      if (v == T(0)) continue;
      for (int j = 0; j < y.m; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

template <typename T>
Dense<T> operator-(const Dense<T>& x, const Dense<T>& y) {
  Dense<T> r(x.n, x.m);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

template <typename T>
Dense<T> operator+(const Dense<T>& x, const Dense<T>& y) {
  Dense<T> r(x.n, x.m);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

// Exact Gauss-Jordan inverse; throws SingularBlock.
MatQ inverse(const MatQ& m);
MatD inverse(const MatD& m);  // partial pivoting

inline MatD to_double(const MatQ& m) {
  MatD r(m.n, m.m);
  for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.a[i].get_d();
  return r;
}

inline double max_abs(const MatD& m) {
  double v = 0;
  for (double x : m.a) v = std::max(v, std::fabs(x));
  return v;
}

inline Rat max_abs(const MatQ& m) {
  Rat v = 0;
  for (const Rat& x : m.a) v = std::max(v, Rat(abs(x)));
  return v;
}

}  // namespace fractal
