#include "fractal/walks.hpp"

#include <algorithm>
#include <cmath>

#include "fractal/maps.hpp"
#include "fractal/schur.hpp"

namespace fractal {

template <typename T>
bool on_simplex(const SimplexPoint<T>& p, const T& tol) {
  T s = p[0] + p[1] + p[2] + p[3];
  if (s - T(1) > tol || T(1) - s > tol) return false;
  for (const T& c : p)
    if (c < -tol) return false;
  return true;
}
template bool on_simplex<Rat>(const SimplexPoint<Rat>&, const Rat&);
template bool on_simplex<double>(const SimplexPoint<double>&, const double&);

template <typename T>
MeasureWithAtom<T> walk_k1(const SimplexPoint<T>& p) {
  const T &x = p[0], &y = p[1], &z = p[2], &u = p[3];
  {
    // the simplex vertices are left undefined rather than assigned limits
    int zeros = 0;
    for (const T& c : p)
      if (c == T(0)) ++zeros;
    if (zeros >= 3) throw Indeterminate("vertex of the simplex");
  }
  if (x == T(0)) {
    // On the face x = 0 the quartic denominator vanishes identically, but so
    // do all numerators carrying x^2; the continuous extension across the
    // face keeps only the zeroth-order terms.
    return {y + z, T(0), T(0), T(0), u};
  }
  T d1 = u + y + z - T(1), d2 = -u + y - z - T(1), d3 = u - y - z - T(1),
    d4 = -u - y + z - T(1);
  detail::guard_denominator(d1);
  detail::guard_denominator(d2);
  detail::guard_denominator(d3);
  detail::guard_denominator(d4);
  T den = d1 * d2 * d3 * d4;
  T x2 = x * x;
  MeasureWithAtom<T> out;
  out[0] = y + z;
  out[1] = x2 * (T(2) * y * z + u * (T(1) - u * u + y * y + z * z)) / den;
  out[2] = x2 * (T(2) * u * z + y * (T(1) + u * u - y * y + z * z)) / den;
  out[3] = x2 * (T(2) * u * y + z * (T(1) + u * u + y * y - z * z)) / den;
  out[4] =
      u - x2 * (T(2) * u * y * z + u * u + y * y + z * z - T(1)) / den;
  return out;
}

template <typename T>
MeasureWithAtom<T> walk_k2(const SimplexPoint<T>& p) {
  const T &x = p[0], &y = p[1], &z = p[2], &u = p[3];
  T d1 = T(1) - u - y - z, d2 = T(1) - u + y + z;
  detail::guard_denominator(d1);
  detail::guard_denominator(d2);
  T den = d1 * d2;
  MeasureWithAtom<T> out;
  out[0] = x * x * (y + z) / den;
  out[1] = u;
  out[2] = y;
  out[3] = z;
  out[4] = x * x * (T(1) - u) / den;
  return out;
}

namespace {
template <typename T>
SimplexPoint<T> normalize_measure(const MeasureWithAtom<T>& m) {
  T rest = T(1) - m[4];
  detail::guard_denominator(rest);
  return {m[0] / rest, m[1] / rest, m[2] / rest, m[3] / rest};
}
}  // namespace

template <typename T>
SimplexPoint<T> walk_k1_hat(const SimplexPoint<T>& p) {
  return normalize_measure(walk_k1(p));
}
template <typename T>
SimplexPoint<T> walk_k2_hat(const SimplexPoint<T>& p) {
  return normalize_measure(walk_k2(p));
}

template MeasureWithAtom<Rat> walk_k1<Rat>(const SimplexPoint<Rat>&);
template MeasureWithAtom<double> walk_k1<double>(const SimplexPoint<double>&);
template MeasureWithAtom<Rat> walk_k2<Rat>(const SimplexPoint<Rat>&);
template MeasureWithAtom<double> walk_k2<double>(const SimplexPoint<double>&);
template SimplexPoint<Rat> walk_k1_hat<Rat>(const SimplexPoint<Rat>&);
template SimplexPoint<double> walk_k1_hat<double>(const SimplexPoint<double>&);
template SimplexPoint<Rat> walk_k2_hat<Rat>(const SimplexPoint<Rat>&);
template SimplexPoint<double> walk_k2_hat<double>(const SimplexPoint<double>&);

std::optional<Rat> self_similarity_factor(const SimplexPoint<Rat>& p) {
  MeasureWithAtom<Rat> m = walk_k1(p);
  Rat alpha = 1 - m[4];
  for (int i = 0; i < 4; ++i)
    if (m[i] != alpha * p[i]) return std::nullopt;
  return alpha;
}

FixedPointSearch find_fixed_points(int map_index, int grid, int iterations,
                                   double tol) {
  FixedPointSearch res;
  auto step = [map_index](const SimplexPoint<double>& q) {
    return map_index == 1 ? walk_k1_hat<double>(q) : walk_k2_hat<double>(q);
  };
  for (int i = 1; i < grid; ++i)
    for (int j = 1; j < grid; ++j)
      for (int k = 1; k < grid; ++k) {
        int l = grid + 2 - i - j - k;  // keep all four coordinates positive
        if (l <= 0) continue;
        double s = grid + 2;
        SimplexPoint<double> q{i / s, j / s, k / s, l / s};
        bool ok = false;
        try {
          for (int it = 0; it < iterations; ++it) {
            SimplexPoint<double> nq = step(q);
            // Re-project onto the simplex: the exact map preserves the sum
            // x+y+z+u=1, but the off-simplex direction is numerically
            // expanding, so rounding drift must be normalized away.
            double s = nq[0] + nq[1] + nq[2] + nq[3];
            detail::guard_denominator(s);
            for (double& c : nq) c /= s;
            double d = 0;
            for (int c = 0; c < 4; ++c) d = std::max(d, std::fabs(nq[c] - q[c]));
            q = nq;
            if (d < tol) {
              ok = true;
              break;
            }
          }
        } catch (const Indeterminate&) {
          ok = false;
        }
        if (!ok) {
          ++res.non_converged;
          continue;
        }
        ++res.converged;
        bool fresh = true;
        for (const auto& seen : res.points) {
          double d = 0;
          for (int c = 0; c < 4; ++c) d = std::max(d, std::fabs(seen[c] - q[c]));
          if (d < 1e-8) fresh = false;
        }
        if (fresh) res.points.push_back(q);
      }
  return res;
}

Rat walk_schur_consistency(const SimplexPoint<Rat>& p) {
  MeasureWithAtom<Rat> printed = walk_k1(p);
  // Operator path: K1 = J S1 J^{-1} on M = xa+yb+zc+ud, i.e. the first Schur
  // complement of the pencil with v = -1 followed by the +1 identity shift.
  std::array<Rat, 5> s1 = derive_grigorchuk_s1({p[0], p[1], p[2], p[3], -1});
  MeasureWithAtom<Rat> op{s1[0], s1[1], s1[2], s1[3], s1[4] + 1};
  Rat m = 0;
  for (int i = 0; i < 5; ++i) {
    Rat d = abs(printed[i] - op[i]);
    if (d > m) m = d;
  }
  return m;
}

}  // namespace fractal
