#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fractal/errors.hpp"
#include "fractal/rational.hpp"

namespace fractal {

// ---------------------------------------------------------------------------
// Registry of multi-dimensional rational maps.  Every map is evaluated both
// over exact rationals and over doubles by the same template; the only
// difference is the indeterminacy guard (exact zero vs. |d| < 1e-13).
// ---------------------------------------------------------------------------

struct RationalMapSpec {
  std::string id;
  int dimension = 2;                 // phase-space dimension
  std::vector<std::string> params;   // parameter names, in call order
};

const std::vector<RationalMapSpec>& map_registry();
const RationalMapSpec& map_get(const std::string& id);  // throws UnknownName

namespace detail {
inline void guard_denominator(const Rat& d) {
  if (d == 0) throw Indeterminate("zero denominator");
}
inline void guard_denominator(double d) {
  if (std::fabs(d) < 1e-13) throw Indeterminate("vanishing denominator");
}
}  // namespace detail

template <typename T>
std::vector<T> map_eval(const std::string& id, const std::vector<T>& params,
                        const std::vector<T>& p);

extern template std::vector<Rat> map_eval<Rat>(const std::string&,
                                               const std::vector<Rat>&,
                                               const std::vector<Rat>&);
extern template std::vector<double> map_eval<double>(
    const std::string&, const std::vector<double>&, const std::vector<double>&);

// ---------------------------------------------------------------------------
// Invariant structure of the two-dimensional map "F": the two almost
// transversal families of hyperbolas and the semiconjugacies onto the
// Chebyshev map.
// ---------------------------------------------------------------------------

// theta-index of the horizontal hyperbola through (x,y): (4+x^2-y^2)/(4x).
template <typename T>
T cross_theta(const T& x, const T& y) {
  detail::guard_denominator(x);
  return (T(4) + x * x - y * y) / (T(4) * x);
}
// eta-index of the vertical hyperbola through (x,y): (4-x^2+y^2)/(4y).
template <typename T>
T cross_eta(const T& x, const T& y) {
  detail::guard_denominator(y);
  return (T(4) - x * x + y * y) / (T(4) * y);
}
// Chebyshev (Ulam-von Neumann) map z -> 2z^2-1.
template <typename T>
T chebyshev(const T& z) {
  return T(2) * z * z - T(1);
}
// Semiconjugacy of the Hanoi map: (x^2-1-xy-2y^2)/y, target x -> x^2-x-3.
template <typename T>
T hanoi_psi(const T& x, const T& y) {
  detail::guard_denominator(y);
  return (x * x - T(1) - x * y - T(2) * y * y) / y;
}
template <typename T>
T hanoi_beta(const T& x) {
  return x * x - x - T(3);
}

// A point of the horizontal family ('F': 4+x^2-y^2-4*theta*x = 0) or the
// vertical family ('H': 4-x^2+y^2-4*eta*y = 0), parametrized by t in R.
std::pair<double, double> hyperbola_point(char family, double parameter,
                                          double t);

// Residuals of the semiconjugacies, evaluated exactly:
//   for "F":      { psi(F(p)) - chebyshev(psi(p)), eta(F(p)) - eta(p) }
//   for "hanoi":  { hanoi_psi(map(p)) - hanoi_beta(hanoi_psi(p)) }
std::vector<Rat> semiconjugacy_residual(const std::string& id,
                                        const std::vector<Rat>& p);

// ---------------------------------------------------------------------------
// The lamplighter map permutes the family of lines x+y = c.  Given sample
// parameters t (points (t, c-t) on the source line), verifies that all images
// lie on one line of the family and that the restriction is the Moebius
// transformation of the printed SL(2,R) matrix (under the reflection that
// identifies the source line with the image line).  Returns the image index.
struct LineImage {
  Rat c_prime;
  Rat mobius_det;       // determinant of the printed matrix (always 1)
  bool mobius_match;    // restriction agrees with the matrix action
};
LineImage line_family_check_lamplighter(const Rat& c,
                                        const std::vector<Rat>& ts);

// ---------------------------------------------------------------------------
// Conjugacy / relation residuals, evaluated exactly.  Supported ids:
//   "HH"       H(H(p)) = p
//   "HF_G"     H(F(p)) = G(p)
//   "HG_F"     H(G(p)) = F(p)
//   "R"        params (alpha,beta):  R(F_ab(p)) = F(R(p))
//   "S"        params (alpha,beta,gamma,delta):
//              S(F4(p)) = F3_{alpha,(g+d)/2-beta,(g-d)/2}(S(p))
//   "F5_slice" the y=z=u=1 slice of the 5-dim map matches F after
//              (x,v) -> (-x,-v-1)
//   "G5_slice" same coordinate change carries the renormalized slice to G
//   "F0_ab"    params (y,z,u): F0 equals F_ab with (alpha,beta)=(y+z,u)
//   "F1_ab"    params (y,z,u): alpha=y+u, beta=z
//   "F2_ab"    params (y,z,u): alpha=z+u, beta=y
// Returns the maximum absolute coordinate residual (exact; 0 when the
// identity holds).
Rat conjugacy_residual(const std::string& which, const std::vector<Rat>& params,
                       const std::vector<Rat>& p);

// ---------------------------------------------------------------------------
// Iteration and escape-time rendering.
// ---------------------------------------------------------------------------

struct OrbitRecord {
  std::vector<std::vector<double>> points;  // includes the starting point
  bool escaped = false;
  bool indeterminate = false;
  int escape_step = -1;  // step index at which escape/indeterminacy occurred
};

// Applies the listed maps cyclically (ids[0] first); a single-element list is
// plain iteration.  Stops after n steps, on escape (sup-norm > radius) or on
// an indeterminate point.
OrbitRecord iterate_maps(const std::vector<std::string>& ids,
                         const std::vector<double>& params,
                         std::vector<double> point, int n,
                         double escape_radius = 1e6);

// Exact orbit; throws Indeterminate when a denominator vanishes.
std::vector<std::vector<Rat>> iterate_exact(const std::string& id,
                                            const std::vector<Rat>& params,
                                            std::vector<Rat> point, int n);

struct Window {
  double xmin, xmax, ymin, ymax;
};

struct RasterImage {
  int width = 0, height = 0;
  std::vector<std::uint8_t> pixels;  // row-major grayscale
};

// Escape-time picture of a two-dimensional map (or cyclic map sequence):
// intensity = escape step (clamped to 254), 255 = still bounded after n
// iterations, 0 = indeterminate start or immediate escape.
RasterImage render_map(const std::vector<std::string>& ids,
                       const std::vector<double>& params, const Window& win,
                       int width, int height, int iters = 100,
                       double escape_radius = 1e6);

std::string ppm_encode(const RasterImage& img);           // binary P6
void write_ppm(const RasterImage& img, const std::string& path);
std::uint64_t image_hash(const RasterImage& img);         // FNV-1a

}  // namespace fractal
