#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fractal/catalog.hpp"
#include "fractal/matrix.hpp"

namespace fractal {

struct PencilSpec {
  std::vector<std::pair<std::string, Rat>> weights;  // generator -> weight
  Rat identity = 0;
  bool require_symmetric = true;
};

PencilSpec adjacency_pencil(const GroupSpec& spec);  // all weights 1

// Weighted level-n action matrix: sum of w_g * P_g plus identity weight,
// where (P_g)[g(v)][v] = 1 over the level words. Validates exact symmetry
// when the pencil demands it.
MatQ pencil_matrix(const GroupSpec& spec, const PencilSpec& pencil, int n);

// Cyclic Jacobi rotations; eigenvalues ascending.
std::vector<double> eigen_sym(MatD m, int sweep_cap = 100);

// Gap clustering into (value, multiplicity) at the given tolerance.
std::vector<std::pair<double, int>> cluster(const std::vector<double>& eigs,
                                            double tol = 1e-8);

struct DensityOfStates {
  int level = 0;
  std::vector<std::pair<double, double>> atoms;  // (eigenvalue, mass)
};

struct DosResult {
  std::vector<DensityOfStates> levels;
  std::vector<double> kolmogorov;  // distance between consecutive levels
};

DosResult dos(const GroupSpec& spec, const PencilSpec& pencil,
              const std::vector<int>& levels);

double kolmogorov_distance(const DensityOfStates& a, const DensityOfStates& b);

// Closed-form spectrum of the level-n pegs-and-discs adjacency matrix:
// {3} plus backward orbits of 0 and -2 under f(x) = x^2 - x - 3.
std::vector<std::pair<double, std::int64_t>> hanoi_reference_spectrum(int n);

// Atomic part of the lamplighter spectral measure: atom at mu with mass
// 1/4 plus the k zeros of G_k(z,mu) = 2^k [U_k(w) + mu U_{k-1}(w)],
// w = (-z-mu)/4, each carrying mass 2^{-(k+1)}, for k = 2..k_max.
std::vector<std::pair<double, double>> lamplighter_spectral_atoms(double mu,
                                                                  int k_max);

std::string spectrum_csv(const std::vector<std::pair<double, int>>& spec);

}  // namespace fractal
