#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fractal/spectra.hpp"

using namespace fractal;

namespace {
PencilSpec isotropic_grig() {
  PencilSpec p;
  p.weights = {{"a", Rat(1, 4)}, {"b", Rat(1, 4)}, {"c", Rat(1, 4)},
               {"d", Rat(1, 4)}};
  return p;
}
}

TEST_CASE("pencil matrices at level 1") {
  auto g = catalog_get("grigorchuk");
  MatQ m = pencil_matrix(g, isotropic_grig(), 1);
  CHECK(m.at(0, 0) == Rat(3, 4));
  CHECK(m.at(0, 1) == Rat(1, 4));
  CHECK(m.at(1, 0) == Rat(1, 4));
  CHECK(m.at(1, 1) == Rat(3, 4));

  PencilSpec idp;
  idp.identity = 1;
  MatQ ident = pencil_matrix(g, idp, 3);
  CHECK(ident == MatQ::identity(8));

  auto h = catalog_get("hanoi3");
  MatQ j = pencil_matrix(h, adjacency_pencil(h), 1);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) CHECK(j.at(i, k) == 1);
}

TEST_CASE("asymmetric pencils are rejected when symmetry is demanded") {
  auto b = catalog_get("basilica");
  PencilSpec p;
  p.weights = {{"a", 1}};
  CHECK_THROWS_AS(pencil_matrix(b, p, 4), AsymmetricPencil);
  p.require_symmetric = false;
  CHECK_NOTHROW(pencil_matrix(b, p, 4));
  // adding both a and a-inverse weight is left to callers; symmetric pencils
  // over involutions always pass
  auto g = catalog_get("grigorchuk");
  CHECK_NOTHROW(pencil_matrix(g, isotropic_grig(), 5));
}

TEST_CASE("jacobi eigensolver basics") {
  MatD m(2, 2);
  m.at(0, 0) = m.at(1, 1) = 0.75;
  m.at(0, 1) = m.at(1, 0) = 0.25;
  auto eig = eigen_sym(m);
  CHECK(eig[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eig[1] == doctest::Approx(1.0).epsilon(1e-12));

  MatD j(3, 3);
  for (auto& x : j.a) x = 1;
  auto ej = eigen_sym(j);
  CHECK(std::fabs(ej[0]) < 1e-10);
  CHECK(std::fabs(ej[1]) < 1e-10);
  CHECK(ej[2] == doctest::Approx(3.0).epsilon(1e-12));

  MatD diag(4, 4);
  for (int i = 0; i < 4; ++i) diag.at(i, i) = i - 1.5;
  auto ed = eigen_sym(diag);
  for (int i = 0; i < 4; ++i) CHECK(ed[i] == doctest::Approx(i - 1.5));
}

TEST_CASE("eigenvalues are invariant under vertex relabeling") {
  auto g = catalog_get("grigorchuk");
  MatD m = to_double(pencil_matrix(g, isotropic_grig(), 3));
  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(5);
  std::shuffle(perm.begin(), perm.end(), rng);
  MatD pm(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) pm.at(perm[i], perm[j]) = m.at(i, j);
  auto e1 = eigen_sym(m), e2 = eigen_sym(pm);
  for (int i = 0; i < 8; ++i)
    CHECK(e1[i] == doctest::Approx(e2[i]).epsilon(1e-10));
}

TEST_CASE("hanoi reference spectrum formulas") {
  auto s1 = hanoi_reference_spectrum(1);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0].first == doctest::Approx(0.0));
  CHECK(s1[0].second == 2);
  CHECK(s1[1].first == doctest::Approx(3.0));
  CHECK(s1[1].second == 1);

  auto s2 = hanoi_reference_spectrum(2);
  REQUIRE(s2.size() == 5);  // 3*2^{n-1}-1 = 5 points
  std::int64_t total = 0;
  for (auto& [v, m] : s2) total += m;
  CHECK(total == 9);
  double r13 = std::sqrt(13.0);
  CHECK(s2[0].first == doctest::Approx(-2.0));
  CHECK(s2[0].second == 1);
  CHECK(s2[1].first == doctest::Approx((1 - r13) / 2));
  CHECK(s2[1].second == 2);
  CHECK(s2[2].first == doctest::Approx(0.0));
  CHECK(s2[2].second == 3);
  CHECK(s2[3].first == doctest::Approx((1 + r13) / 2));
  CHECK(s2[3].second == 2);

  for (int n = 1; n <= 6; ++n) {
    auto s = hanoi_reference_spectrum(n);
    CHECK((std::int64_t)s.size() == 3 * (1 << (n - 1)) - 1);
    std::int64_t sum = 0;
    for (auto& [v, m] : s) sum += m;
    std::int64_t dim = 1;
    for (int i = 0; i < n; ++i) dim *= 3;
    CHECK(sum == dim);
  }
}

TEST_CASE("hanoi adjacency eigenvalues match the closed form") {
  auto h = catalog_get("hanoi3");
  auto adj = adjacency_pencil(h);
  for (int n = 1; n <= 4; ++n) {
    auto eig = eigen_sym(to_double(pencil_matrix(h, adj, n)));
    auto cl = cluster(eig);
    auto ref = hanoi_reference_spectrum(n);
    REQUIRE(cl.size() == ref.size());
    for (std::size_t i = 0; i < cl.size(); ++i) {
      CHECK(cl[i].first == doctest::Approx(ref[i].first).epsilon(1e-8));
      CHECK(cl[i].second == (int)ref[i].second);
    }
  }
}

TEST_CASE("density of states bookkeeping") {
  auto h = catalog_get("hanoi3");
  auto res = dos(h, adjacency_pencil(h), {1, 2, 3, 4});
  REQUIRE(res.levels.size() == 4);
  REQUIRE(res.kolmogorov.size() == 3);
  for (const auto& lvl : res.levels) {
    double mass = 0;
    for (auto& [v, m] : lvl.atoms) {
      CHECK(m >= 0);
      mass += m;
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
  }
  for (double k : res.kolmogorov) {
    CHECK(k >= 0);
    CHECK(k < 0.5);
  }
  // Finite-level mass at the two fixed atoms: the deviation from the limit
  // masses 1/6 is exactly +1.5/3^n at 0 and -0.5/3^n at -2.
  for (int idx = 2; idx < 4; ++idx) {
    const auto& lvl = res.levels[idx];
    double dim = std::pow(3.0, lvl.level);
    for (auto& [v, m] : lvl.atoms) {
      if (std::fabs(v) < 1e-8)
        CHECK(m - 1.0 / 6 == doctest::Approx(1.5 / dim).epsilon(1e-6));
      if (std::fabs(v + 2) < 1e-8)
        CHECK(m - 1.0 / 6 == doctest::Approx(-0.5 / dim).epsilon(1e-6));
    }
  }
}

TEST_CASE("grigorchuk isotropic spectrum stays in the two bands") {
  auto g = catalog_get("grigorchuk");
  auto res = dos(g, isotropic_grig(), {1, 2, 3, 4, 5, 6});
  for (const auto& lvl : res.levels) {
    for (auto& [v, m] : lvl.atoms) {
      bool in_bands = (v >= -0.5 - 1e-9 && v <= 0 + 1e-9) ||
                      (v >= 0.5 - 1e-9 && v <= 1 + 1e-9);
      CHECK(in_bands);
    }
  }
  // spectra grow toward the limit set: directed Hausdorff distance from
  // sp(M_n) into sp(M_{n+1}) stays small
  for (std::size_t i = 0; i + 1 < res.levels.size(); ++i) {
    double h = 0;
    for (auto& [v, m] : res.levels[i].atoms) {
      double best = 1e9;
      for (auto& [w, m2] : res.levels[i + 1].atoms)
        best = std::min(best, std::fabs(v - w));
      h = std::max(h, best);
    }
    CHECK(h < 0.25);
  }
}

TEST_CASE("lamplighter atomic spectrum") {
  auto atoms = lamplighter_spectral_atoms(0, 12);
  for (auto& [v, m] : atoms) {
    CHECK(v >= -4.0 - 1e-9);
    CHECK(v <= 4.0 + 1e-9);
    CHECK(m > 0);
  }
  // atom count: 1 + sum k = 2..12
  CHECK(atoms.size() == 1 + (2 + 12) * 11 / 2);
  // masses approach 1: 1/4 + sum k 2^-(k+1)
  auto atoms20 = lamplighter_spectral_atoms(0, 20);
  double mass = 0;
  for (auto& [v, m] : atoms20) mass += m;
  CHECK(std::fabs(mass - 1.0) < 1e-4);

  // mu=2: atoms escape the continuous band [-6, 2] toward mu + 2/mu = 3
  auto at2 = lamplighter_spectral_atoms(2, 15);
  double biggest = -1e9;
  for (auto& [v, m] : at2) biggest = std::max(biggest, v);
  CHECK(biggest > 2.0);
  CHECK(biggest <= 3.0 + 1e-9);

  CHECK_THROWS_AS(lamplighter_spectral_atoms(0, 1), RootCountMismatch);
}

TEST_CASE("spectrum csv export") {
  std::string csv = spectrum_csv({{0.5, 2}, {1.0, 1}});
  CHECK(csv == "value,multiplicity\n0.5,2\n1,1\n");
}
