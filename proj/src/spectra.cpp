#include "fractal/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace fractal {

PencilSpec adjacency_pencil(const GroupSpec& spec) {
  PencilSpec p;
  for (const auto& g : spec.generators) p.weights.emplace_back(g, 1);
  return p;
}

MatQ pencil_matrix(const GroupSpec& spec, const PencilSpec& pencil, int n) {
  const int d = spec.machine->d;
  std::int64_t dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  if (dim > 4096)
    throw NoConvergence("level too deep: dense dimension above 4096");
  MatQ m((int)dim, (int)dim);
  for (const auto& [gname, w] : pencil.weights) {
    ElementWord g = spec.gen(gname);
    // walk all level-n words in index order
    std::vector<std::string> words;
    words.reserve(dim);
    for (std::int64_t v = 0; v < dim; ++v) {
      std::string wd(n, '0');
      std::int64_t rest = v;
      for (int i = n - 1; i >= 0; --i) {
        wd[i] = static_cast<char>('0' + rest % d);
        rest /= d;
      }
      words.push_back(wd);
    }
    for (std::int64_t v = 0; v < dim; ++v) {
      std::string img = g.apply(words[v]);
      std::int64_t y = 0;
      for (char c : img) y = y * d + (c - '0');
      m.at((int)y, (int)v) += w;
    }
  }
  for (std::int64_t i = 0; i < dim; ++i) m.at((int)i, (int)i) += pencil.identity;
  if (pencil.require_symmetric) {
    for (int i = 0; i < m.n; ++i)
      for (int j = i + 1; j < m.m; ++j)
        if (m.at(i, j) != m.at(j, i))
          throw AsymmetricPencil("pencil matrix is not symmetric at (" +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 ")");
  }
  return m;
}

std::vector<double> eigen_sym(MatD m, int sweep_cap) {
  const int n = m.n;
  double frob = 0;
  for (double x : m.a) frob += x * x;
  frob = std::sqrt(frob);
  const double target = 1e-12 * (frob > 0 ? frob : 1.0);
  auto off = [&]() {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2 * m.at(i, j) * m.at(i, j);
    return std::sqrt(s);
  };
  for (int sweep = 0; sweep < sweep_cap; ++sweep) {
    if (off() < target) {
      std::vector<double> eig(n);
      for (int i = 0; i < n; ++i) eig[i] = m.at(i, i);
      std::sort(eig.begin(), eig.end());
      return eig;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = m.at(p, q);
        if (std::fabs(apq) < 1e-300) continue;
        double theta = (m.at(q, q) - m.at(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = m.at(k, p), akq = m.at(k, q);
          m.at(k, p) = c * akp - s * akq;
          m.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = m.at(p, k), aqk = m.at(q, k);
          m.at(p, k) = c * apk - s * aqk;
          m.at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  throw NoConvergence("Jacobi sweeps exceeded cap");
}

std::vector<std::pair<double, int>> cluster(const std::vector<double>& eigs,
                                            double tol) {
  std::vector<std::pair<double, int>> out;
  std::size_t i = 0;
  while (i < eigs.size()) {
    std::size_t j = i + 1;
    double sum = eigs[i];
    while (j < eigs.size() && eigs[j] - eigs[j - 1] <= tol) {
      sum += eigs[j];
      ++j;
    }
    out.emplace_back(sum / (double)(j - i), (int)(j - i));
    i = j;
  }
  return out;
}

double kolmogorov_distance(const DensityOfStates& a, const DensityOfStates& b) {
  // sup-norm of CDF difference over the merged support
  std::vector<double> pts;
  for (auto& [v, m] : a.atoms) pts.push_back(v);
  for (auto& [v, m] : b.atoms) pts.push_back(v);
  std::sort(pts.begin(), pts.end());
  auto cdf = [](const DensityOfStates& d, double x) {
    double s = 0;
    for (auto& [v, m] : d.atoms)
      if (v <= x + 1e-12) s += m;
    return s;
  };
  double best = 0;
  for (double x : pts)
    best = std::max(best, std::fabs(cdf(a, x) - cdf(b, x)));
  return best;
}

DosResult dos(const GroupSpec& spec, const PencilSpec& pencil,
              const std::vector<int>& levels) {
  DosResult res;
  for (int n : levels) {
    MatQ m = pencil_matrix(spec, pencil, n);
    auto eigs = eigen_sym(to_double(m));
    DensityOfStates d;
    d.level = n;
    double mass = 1.0 / (double)eigs.size();
    for (auto& [v, mult] : cluster(eigs))
      d.atoms.emplace_back(v, mass * mult);
    res.levels.push_back(std::move(d));
  }
  for (std::size_t i = 0; i + 1 < res.levels.size(); ++i)
    res.kolmogorov.push_back(
        kolmogorov_distance(res.levels[i], res.levels[i + 1]));
  return res;
}

std::vector<std::pair<double, std::int64_t>> hanoi_reference_spectrum(int n) {
  // f(x) = x^2 - x - 3; preimages of t are (1 +- sqrt(13+4t))/2.
  auto preimages = [](const std::vector<double>& pts) {
    std::vector<double> out;
    for (double t : pts) {
      double disc = 13 + 4 * t;
      double r = std::sqrt(disc);
      out.push_back((1 - r) / 2);
      out.push_back((1 + r) / 2);
    }
    return out;
  };
  auto a_mult = [](int k) {  // (3^{k-1}+3)/2
    std::int64_t p = 1;
    for (int i = 0; i < k - 1; ++i) p *= 3;
    return (p + 3) / 2;
  };
  auto b_mult = [](int k) {  // (3^{k-1}-1)/2
    std::int64_t p = 1;
    for (int i = 0; i < k - 1; ++i) p *= 3;
    return (p - 1) / 2;
  };
  std::vector<std::pair<double, std::int64_t>> spec;
  spec.emplace_back(3.0, 1);
  std::vector<double> chain{0.0};
  for (int i = 0; i <= n - 1; ++i) {
    for (double v : chain) spec.emplace_back(v, a_mult(n - i));
    chain = preimages(chain);
  }
  chain = {-2.0};
  for (int j = 0; j <= n - 2; ++j) {
    for (double v : chain) spec.emplace_back(v, b_mult(n - j));
    chain = preimages(chain);
  }
  std::sort(spec.begin(), spec.end());
  return spec;
}

std::vector<std::pair<double, double>> lamplighter_spectral_atoms(double mu,
                                                                  int k_max) {
  if (k_max < 2) throw RootCountMismatch("k_max must be at least 2");
  std::vector<std::pair<double, double>> atoms;
  atoms.emplace_back(mu, 0.25);
  auto G = [mu](int k, double z) {
    double w = (-z - mu) / 4;
    double u0 = 1, u1 = 2 * w;  // U_0, U_1
    double prev = u0, cur = u1;
    for (int i = 2; i <= k; ++i) {
      double next = 2 * w * cur - prev;
      prev = cur;
      cur = next;
    }  // cur = U_k, prev = U_{k-1}
    return cur + mu * prev;  // 2^k factor does not move zeros
  };
  double lo = std::min(-6.0 - mu, mu + (mu != 0 ? 2 / mu : 0) - 2);
  double hi = std::max(6.0 - mu, mu + (mu != 0 ? 2 / mu : 0) + 2);
  for (int k = 2; k <= k_max; ++k) {
    std::vector<double> zeros;
    const int grid = 200000;
    double prev_z = lo, prev_v = G(k, lo);
    for (int i = 1; i <= grid; ++i) {
      double z = lo + (hi - lo) * i / grid;
      double v = G(k, z);
      if (prev_v == 0) zeros.push_back(prev_z);
      else if (v != 0 && ((prev_v < 0) != (v < 0))) {
        double a = prev_z, b = z;
        for (int it = 0; it < 100 && b - a > 1e-12; ++it) {
          double m = (a + b) / 2, fm = G(k, m);
          if (fm == 0) { a = b = m; break; }
          if ((G(k, a) < 0) != (fm < 0)) b = m; else a = m;
        }
        zeros.push_back((a + b) / 2);
      }
      prev_z = z;
      prev_v = v;
    }
    if ((int)zeros.size() != k)
      throw RootCountMismatch("expected " + std::to_string(k) +
                              " zeros, found " + std::to_string(zeros.size()));
    double mass = std::ldexp(1.0, -(k + 1));
    for (double z : zeros) atoms.emplace_back(z, mass);
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

std::string spectrum_csv(const std::vector<std::pair<double, int>>& spec) {
  std::ostringstream os;
  os << "value,multiplicity\n";
  os.precision(17);
  for (auto& [v, m] : spec) os << v << "," << m << "\n";
  return os.str();
}

}  // namespace fractal
