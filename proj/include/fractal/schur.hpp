#pragma once

#include <array>
#include <utility>
#include <vector>

#include "fractal/catalog.hpp"
#include "fractal/matrix.hpp"
#include "fractal/spectra.hpp"

namespace fractal {

template <typename T>
struct Block {
  Dense<T> A, B, C, D;
};

// Split a square matrix into equal quadrants (dimension must be even).
template <typename T>
Block<T> split_blocks(const Dense<T>& m) {
  if (m.n != m.m || m.n % 2 != 0)
    throw SingularBlock("block split needs an even-dimensional square matrix");
  const int h = m.n / 2;
  Block<T> b{Dense<T>(h, h), Dense<T>(h, h), Dense<T>(h, h), Dense<T>(h, h)};
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      b.A.at(i, j) = m.at(i, j);
      b.B.at(i, j) = m.at(i, j + h);
      b.C.at(i, j) = m.at(i + h, j);
      b.D.at(i, j) = m.at(i + h, j + h);
    }
  return b;
}

template <typename T>
Dense<T> schur1(const Block<T>& m) {  // A - B D^{-1} C
  return m.A - m.B * inverse(m.D) * m.C;
}

template <typename T>
Dense<T> schur2(const Block<T>& m) {  // D - C A^{-1} B
  return m.D - m.C * inverse(m.A) * m.B;
}

// M^{-1} assembled from S1^{-1} and D^{-1}.
template <typename T>
Block<T> frobenius_inverse(const Block<T>& m) {
  Dense<T> Dinv = inverse(m.D);
  Dense<T> S1inv = inverse(schur1(m));
  Block<T> r;
  r.A = S1inv;
  r.B = Dense<T>(m.B.n, m.B.m) - S1inv * m.B * Dinv;
  r.C = Dense<T>(m.C.n, m.C.m) - Dinv * m.C * S1inv;
  r.D = Dinv * m.C * S1inv * m.B * Dinv + Dinv;
  return r;
}

template <typename T>
Dense<T> assemble(const Block<T>& b) {
  const int h = b.A.n;
  Dense<T> m(2 * h, 2 * h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      m.at(i, j) = b.A.at(i, j);
      m.at(i, j + h) = b.B.at(i, j);
      m.at(i + h, j) = b.C.at(i, j);
      m.at(i + h, j + h) = b.D.at(i, j);
    }
  return m;
}

// Element of the rational group algebra of Z_2^k, coefficients indexed by
// bitmask subsets of the generators.
struct EA2Element {
  int rank = 0;
  std::vector<Rat> coeff;  // size 2^rank
};

// Characters: signed subset sums (Walsh-Hadamard transform).
std::vector<Rat> ea2_characters(const EA2Element& e);
EA2Element ea2_invert(const EA2Element& e);  // throws ZeroCharacter
EA2Element ea2_mul(const EA2Element& a, const EA2Element& b);  // XOR convolution

// Both Schur maps of the classic five-parameter pencil, coefficients over
// (a, b, c, d, 1), derived by executing the block/character recipe.
std::array<Rat, 5> derive_grigorchuk_s1(const std::array<Rat, 5>& xyzuv);
std::array<Rat, 5> derive_grigorchuk_s2(const std::array<Rat, 5>& xyzuv);

// Nine-parameter overgroup pencil, coefficients over
// (a, b, c, d, a~, b~, c~, d~, 1) in the input order (x,y,z,u,q,r,s,t,v).
std::array<Rat, 9> derive_overgroup_s1(const std::array<Rat, 9>& p);
std::array<Rat, 9> derive_overgroup_s2(const std::array<Rat, 9>& p);

// Second Schur map of the omega-family pencil: returns (x', v') for the
// given first symbol; the (y,z,u) weights pass through unchanged.
std::pair<Rat, Rat> derive_gomega_schur2(const Rat& x, const Rat& v,
                                         const Rat& y, const Rat& z,
                                         const Rat& u, int omega0);

// || schur2(level-n pencil split at the top branch) - level-(n-1) pencil at
// the mapped parameters ||_inf, computed exactly and returned as double.
double level_renormalization_check(const GroupSpec& spec,
                                   const PencilSpec& pencil, int n);

}  // namespace fractal
