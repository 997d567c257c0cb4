#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fractal/errors.hpp"
#include "fractal/rational.hpp"

namespace fractal {

// Probability vector (x,y,z,u) on the generators (a,b,c,d): a point of the
// 3-simplex.  The probabilistic Schur complements push such a measure to a
// measure (X,Y,Z,U,V) that additionally charges the identity element.
template <typename T>
using SimplexPoint = std::array<T, 4>;
template <typename T>
using MeasureWithAtom = std::array<T, 5>;  // weights on (a,b,c,d,e)

template <typename T>
bool on_simplex(const SimplexPoint<T>& p, const T& tol = T(0));

// First and second probabilistic Schur complements (exact printed formulas;
// both paths share the template).  Throw Indeterminate when a denominator
// factor vanishes.
template <typename T>
MeasureWithAtom<T> walk_k1(const SimplexPoint<T>& p);
template <typename T>
MeasureWithAtom<T> walk_k2(const SimplexPoint<T>& p);

// Normalized maps: drop the identity atom V and rescale by 1-V.  Defined
// everywhere on the simplex except where 1-V or a k-denominator vanishes
// (in particular at the indeterminacy vertices).
template <typename T>
SimplexPoint<T> walk_k1_hat(const SimplexPoint<T>& p);
template <typename T>
SimplexPoint<T> walk_k2_hat(const SimplexPoint<T>& p);

extern template MeasureWithAtom<Rat> walk_k1<Rat>(const SimplexPoint<Rat>&);
extern template MeasureWithAtom<double> walk_k1<double>(
    const SimplexPoint<double>&);
extern template MeasureWithAtom<Rat> walk_k2<Rat>(const SimplexPoint<Rat>&);
extern template MeasureWithAtom<double> walk_k2<double>(
    const SimplexPoint<double>&);
extern template SimplexPoint<Rat> walk_k1_hat<Rat>(const SimplexPoint<Rat>&);
extern template SimplexPoint<double> walk_k1_hat<double>(
    const SimplexPoint<double>&);
extern template SimplexPoint<Rat> walk_k2_hat<Rat>(const SimplexPoint<Rat>&);
extern template SimplexPoint<double> walk_k2_hat<double>(
    const SimplexPoint<double>&);

// Exact self-similarity test: returns alpha with
//   k1(mu) = (1-alpha) delta_e + alpha mu
// when the output is that convex combination, nothing otherwise.
std::optional<Rat> self_similarity_factor(const SimplexPoint<Rat>& p);

// Plain iteration of the normalized map (map_index 1 or 2) from a grid of
// interior seeds; converged limits are clustered.
struct FixedPointSearch {
  std::vector<SimplexPoint<double>> points;  // distinct limits found
  int converged = 0;
  int non_converged = 0;
};
FixedPointSearch find_fixed_points(int map_index, int grid, int iterations,
                                   double tol = 1e-12);

// Cross-module check: k1 computed from the exact operator Schur complement
// (pencil (x,y,z,u,v=-1), then the +1 identity shift) minus the printed
// formulas; exactly zero wherever both paths are defined.
Rat walk_schur_consistency(const SimplexPoint<Rat>& p);

}  // namespace fractal
