#include "fractal/maps.hpp"

#include <algorithm>
#include <fstream>
#include <thread>

namespace fractal {

const std::vector<RationalMapSpec>& map_registry() {
  static const std::vector<RationalMapSpec> regs = {
      {"identity", 2, {}},
      {"F", 2, {}},
      {"G", 2, {}},
      {"H", 2, {}},
      {"lamplighter", 2, {}},
      {"hanoi", 2, {}},
      {"basilica", 2, {}},
      {"img", 3, {}},
      {"img_simple", 3, {}},
      {"F5", 5, {}},
      {"G5", 5, {}},
      {"F5r", 2, {}},
      {"G5r", 2, {}},
      {"F0", 2, {"y", "z", "u"}},
      {"F1", 2, {"y", "z", "u"}},
      {"F2", 2, {"y", "z", "u"}},
      {"F4", 2, {"alpha", "beta", "gamma", "delta"}},
      {"F3", 2, {"alpha", "beta", "gamma"}},
      {"Fab", 2, {"alpha", "beta"}},
      {"R", 2, {"alpha", "beta"}},
      {"S", 2, {"gamma", "delta"}},
  };
  return regs;
}

const RationalMapSpec& map_get(const std::string& id) {
  for (const auto& r : map_registry())
    if (r.id == id) return r;
  throw UnknownName("unknown map: " + id);
}

namespace {

template <typename T>
void expect_sizes(const RationalMapSpec& spec, const std::vector<T>& params,
                  const std::vector<T>& p) {
  if ((int)p.size() != spec.dimension)
    throw MalformedTable("map " + spec.id + " expects a " +
                         std::to_string(spec.dimension) + "-dimensional point");
  if (params.size() != spec.params.size())
    throw MalformedTable("map " + spec.id + " expects " +
                         std::to_string(spec.params.size()) + " parameter(s)");
}

// The common second-Schur shape (x,v) -> (a x^2/((v+g)(v+d)),
//                                          v - (v+b) x^2/((v+g)(v+d))).
template <typename T>
std::vector<T> four_param(const T& a, const T& b, const T& g, const T& d,
                          const T& x, const T& v) {
  T den = (v + g) * (v + d);
  detail::guard_denominator(den);
  return {a * x * x / den, v - (v + b) * x * x / den};
}

}  // namespace

template <typename T>
std::vector<T> map_eval(const std::string& id, const std::vector<T>& params,
                        const std::vector<T>& p) {
  const RationalMapSpec& spec = map_get(id);
  expect_sizes(spec, params, p);
  using detail::guard_denominator;

  if (id == "identity") return p;
  if (id == "F") {
    const T &x = p[0], &y = p[1];
    T den = T(4) - y * y;
    guard_denominator(den);
    return {T(2) * x * x / den, y + x * x * y / den};
  }
  if (id == "G") {
    const T &x = p[0], &y = p[1];
    T den = x * x;
    guard_denominator(den);
    return {T(2) * (T(4) - y * y) / den, -y - y * (T(4) - y * y) / den};
  }
  if (id == "H") {
    const T &x = p[0], &y = p[1];
    guard_denominator(x);
    return {T(4) / x, -T(2) * y / x};
  }
  if (id == "lamplighter") {
    const T &x = p[0], &y = p[1];
    T den = y - x;
    guard_denominator(den);
    return {(x * x - y * y - T(2)) / den, T(2) / den};
  }
  if (id == "hanoi") {
    const T &x = p[0], &y = p[1];
    T den = (x - y - T(1)) * (x * x + y - y * y - T(1));
    guard_denominator(den);
    return {x - T(2) * (x * x - x - y * y) * y * y / den,
            (x + y - T(1)) * y * y / den};
  }
  if (id == "basilica") {
    const T &x = p[0], &y = p[1];
    T den = y * y;
    guard_denominator(den);
    return {-T(2) + x * (x - T(2)) / den, (T(2) - x) / den};
  }
  if (id == "img") {
    const T &y = p[0], &z = p[1], &l = p[2];
    T q = -y * y + z * z - T(2) * z * l + l * l;
    guard_denominator(y);
    guard_denominator(q);
    return {z / y, T(1) / q,
            (-l * y * y + l * z * z - T(2) * z * l * l + l * l * l + z - l) /
                (y * q)};
  }
  if (id == "img_simple") {
    const T &y = p[0], &z = p[1], &l = p[2];
    guard_denominator(y);
    guard_denominator(l);
    return {z / y, l / y * (-T(2) + y * l), (-y - y * l * l - l) / l};
  }
  if (id == "F5") {
    const T &x = p[0], &y = p[1], &z = p[2], &u = p[3], &v = p[4];
    T den = (v + u + y + z) * (v + u - y - z);
    guard_denominator(den);
    return {x * x * (y + z) / den, u, y, z, v - x * x * (v + u) / den};
  }
  if (id == "G5") {
    const T &x = p[0], &y = p[1], &z = p[2], &u = p[3], &v = p[4];
    T den = (v + u + y + z) * (v - u + y - z) * (v + u - y - z) *
            (v - u - y + z);
    guard_denominator(den);
    T x2 = x * x;
    return {y + z,
            -x2 * (T(2) * v * y * z - u * (v * v - u * u + y * y + z * z)) /
                den,
            -x2 * (T(2) * v * u * z - y * (v * v + u * u - y * y + z * z)) /
                den,
            -x2 * (T(2) * v * u * y - z * (v * v + u * u + y * y - z * z)) /
                den,
            v + u -
                x2 * (T(2) * u * y * z - v * (-v * v + u * u + y * y + z * z)) /
                    den};
  }
  if (id == "F5r") {
    const T &x = p[0], &v = p[1];
    T den = (v + T(3)) * (v - T(1));
    guard_denominator(den);
    return {T(2) * x * x / den, v - x * x * (v + T(1)) / den};
  }
  if (id == "G5r") {
    const T &x = p[0], &v = p[1];
    T den = x * x;
    guard_denominator(den);
    T q = (v + T(3)) * (v - T(1));
    return {T(2) * q / den, -T(2) - v + (v + T(1)) * q / den};
  }
  if (id == "F0") {
    const T &y = params[0], &z = params[1], &u = params[2];
    return four_param<T>(T(y + z), u, T(u + y + z), T(u - y - z), p[0], p[1]);
  }
  if (id == "F1") {
    const T &y = params[0], &z = params[1], &u = params[2];
    return four_param<T>(T(y + u), z, T(z + u + y), T(z - u - y), p[0], p[1]);
  }
  if (id == "F2") {
    const T &y = params[0], &z = params[1], &u = params[2];
    return four_param<T>(T(z + u), y, T(y + z + u), T(y - z - u), p[0], p[1]);
  }
  if (id == "F4")
    return four_param<T>(params[0], params[1], params[2], params[3], p[0], p[1]);
  if (id == "Fab")
    return four_param<T>(params[0], params[1], T(params[1] + params[0]),
                         T(params[1] - params[0]), p[0], p[1]);
  if (id == "F3") {
    const T &a = params[0], &b = params[1], &g = params[2];
    const T &x = p[0], &v = p[1];
    T den = g * g - v * v;
    detail::guard_denominator(den);
    return {a * x * x / den, v + (v + b) * x * x / den};
  }
  if (id == "R") {
    const T &a = params[0], &b = params[1];
    guard_denominator(a);
    return {-T(2) / a * p[0], -T(2) / a * p[1] - T(2) / a * b};
  }
  if (id == "S") {
    const T &g = params[0], &d = params[1];
    return {-p[0], -p[1] - (g + d) / T(2)};
  }
  throw UnknownName("unknown map: " + id);
}

template std::vector<Rat> map_eval<Rat>(const std::string&,
                                        const std::vector<Rat>&,
                                        const std::vector<Rat>&);
template std::vector<double> map_eval<double>(const std::string&,
                                              const std::vector<double>&,
                                              const std::vector<double>&);

std::pair<double, double> hyperbola_point(char family, double parameter,
                                          double t) {
  const double q = parameter;
  double a, b;  // center offset 2q along the main axis
  if (std::fabs(q) > 1) {
    double r = 2 * std::sqrt(q * q - 1);
    a = 2 * q + r * std::cosh(t);
    b = r * std::sinh(t);
  } else if (std::fabs(q) < 1) {
    double r = 2 * std::sqrt(1 - q * q);
    a = 2 * q + r * std::sinh(t);
    b = r * std::cosh(t);
  } else {  // degenerate: a pair of lines through (2q, 0)
    a = 2 * q + t;
    b = t;
  }
  if (family == 'F') return {a, b};  // (x - 2theta)^2 - y^2 = 4(theta^2-1)
  if (family == 'H') return {b, a};  // (y - 2eta)^2 - x^2 = 4(eta^2-1)
  throw UnknownName("unknown hyperbola family (expected 'F' or 'H')");
}

std::vector<Rat> semiconjugacy_residual(const std::string& id,
                                        const std::vector<Rat>& p) {
  if (id == "F") {
    auto q = map_eval<Rat>("F", {}, p);
    Rat r1 = cross_theta(q[0], q[1]) - chebyshev(cross_theta(p[0], p[1]));
    Rat r2 = cross_eta(q[0], q[1]) - cross_eta(p[0], p[1]);
    return {r1, r2};
  }
  if (id == "hanoi") {
    auto q = map_eval<Rat>("hanoi", {}, p);
    return {hanoi_psi(q[0], q[1]) - hanoi_beta(hanoi_psi(p[0], p[1]))};
  }
  throw UnknownName("no semiconjugacy registered for map: " + id);
}

LineImage line_family_check_lamplighter(const Rat& c,
                                        const std::vector<Rat>& ts) {
  if (ts.empty()) throw MalformedTable("need at least one sample parameter");
  LineImage out;
  // printed matrix ((c, -c^2/2 - 1), (1, -c/2))
  out.mobius_det = c * (-c / 2) - (-c * c / 2 - 1);
  out.mobius_match = true;
  bool first = true;
  for (const Rat& t : ts) {
    std::vector<Rat> q = map_eval<Rat>("lamplighter", {}, {t, c - t});
    Rat cp = q[0] + q[1];
    if (first) {
      out.c_prime = cp;
      first = false;
    } else if (cp != out.c_prime) {
      throw PatternMismatch("images of the line x+y=c are not collinear");
    }
    // Identify the image line with the source family via (x,y) -> (-x,-y);
    // in that chart the restriction is the printed Moebius action.
    Rat den = t - c / 2;
    detail::guard_denominator(den);
    if (-q[0] != (c * t - c * c / 2 - 1) / den) out.mobius_match = false;
  }
  return out;
}

namespace {
Rat max_abs_diff(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat d = abs(a[i] - b[i]);
    if (d > m) m = d;
  }
  return m;
}
}  // namespace

Rat conjugacy_residual(const std::string& which, const std::vector<Rat>& params,
                       const std::vector<Rat>& p) {
  auto ev = [&](const std::string& id, const std::vector<Rat>& pars,
                const std::vector<Rat>& q) { return map_eval<Rat>(id, pars, q); };
  if (which == "HH") return max_abs_diff(ev("H", {}, ev("H", {}, p)), p);
  if (which == "HF_G")
    return max_abs_diff(ev("H", {}, ev("F", {}, p)), ev("G", {}, p));
  if (which == "HG_F")
    return max_abs_diff(ev("H", {}, ev("G", {}, p)), ev("F", {}, p));
  if (which == "R")  // params (alpha, beta)
    return max_abs_diff(ev("R", params, ev("Fab", params, p)),
                        ev("F", {}, ev("R", params, p)));
  if (which == "S") {  // params (alpha, beta, gamma, delta)
    const Rat &a = params[0], &b = params[1], &g = params[2], &d = params[3];
    std::vector<Rat> s = {g, d};
    std::vector<Rat> three = {a, (g + d) / 2 - b, (g - d) / 2};
    return max_abs_diff(ev("S", s, ev("F4", params, p)),
                        ev("F3", three, ev("S", s, p)));
  }
  auto change = [](const std::vector<Rat>& q) {
    return std::vector<Rat>{-q[0], -q[1] - 1};
  };
  if (which == "F5_slice")
    return max_abs_diff(change(ev("F5r", {}, p)), ev("F", {}, change(p)));
  if (which == "G5_slice")
    return max_abs_diff(change(ev("G5r", {}, p)), ev("G", {}, change(p)));
  if (which == "F0_ab" || which == "F1_ab" || which == "F2_ab") {
    const Rat &y = params[0], &z = params[1], &u = params[2];
    std::vector<Rat> ab;
    if (which == "F0_ab") ab = {y + z, u};
    if (which == "F1_ab") ab = {y + u, z};
    if (which == "F2_ab") ab = {z + u, y};
    std::string fid = std::string("F") + which[1];
    return max_abs_diff(ev(fid, params, p), ev("Fab", ab, p));
  }
  throw UnknownName("unknown conjugacy check: " + which);
}

OrbitRecord iterate_maps(const std::vector<std::string>& ids,
                         const std::vector<double>& params,
                         std::vector<double> point, int n,
                         double escape_radius) {
  if (ids.empty()) throw MalformedTable("need at least one map id");
  OrbitRecord rec;
  rec.points.push_back(point);
  auto sup = [](const std::vector<double>& q) {
    double m = 0;
    for (double c : q) m = std::max(m, std::fabs(c));
    return m;
  };
  if (sup(point) > escape_radius) {
    rec.escaped = true;
    rec.escape_step = 0;
    return rec;
  }
  for (int k = 0; k < n; ++k) {
    try {
      point = map_eval<double>(ids[k % ids.size()], params, point);
    } catch (const Indeterminate&) {
      rec.indeterminate = true;
      rec.escaped = true;
      rec.escape_step = k;
      return rec;
    }
    rec.points.push_back(point);
    if (sup(point) > escape_radius || !std::isfinite(sup(point))) {
      rec.escaped = true;
      rec.escape_step = k + 1;
      return rec;
    }
  }
  return rec;
}

std::vector<std::vector<Rat>> iterate_exact(const std::string& id,
                                            const std::vector<Rat>& params,
                                            std::vector<Rat> point, int n) {
  std::vector<std::vector<Rat>> orbit{point};
  for (int k = 0; k < n; ++k) {
    point = map_eval<Rat>(id, params, point);
    orbit.push_back(point);
  }
  return orbit;
}

RasterImage render_map(const std::vector<std::string>& ids,
                       const std::vector<double>& params, const Window& win,
                       int width, int height, int iters,
                       double escape_radius) {
  if (width <= 0 || height <= 0 || (std::int64_t)width * height > 4096 * 4096)
    throw MalformedTable("resolution out of range");
  for (const auto& id : ids)
    if (map_get(id).dimension != 2)
      throw MalformedTable("rendering needs two-dimensional maps");
  RasterImage img;
  img.width = width;
  img.height = height;
  img.pixels.assign((std::size_t)width * height, 0);

  auto run_rows = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      double y = win.ymax - (win.ymax - win.ymin) * (i + 0.5) / height;
      for (int j = 0; j < width; ++j) {
        double x = win.xmin + (win.xmax - win.xmin) * (j + 0.5) / width;
        std::vector<double> point = {x, y};
        bool escaped = false;
        int step = 0;
        for (int k = 0; k < iters && !escaped; ++k) {
          try {
            point = map_eval<double>(ids[k % ids.size()], params, point);
          } catch (const Indeterminate&) {
            escaped = true;
            step = 0;  // exceptional set: treated as escaped immediately
            break;
          }
          double m = std::max(std::fabs(point[0]), std::fabs(point[1]));
          if (m > escape_radius || !std::isfinite(m)) {
            escaped = true;
            step = k + 1;
          }
        }
        img.pixels[(std::size_t)i * width + j] =
            escaped ? (std::uint8_t)std::min(step, 254) : 255;
      }
    }
  };

  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  int chunk = (height + (int)hw - 1) / (int)hw;
  std::vector<std::thread> pool;
  for (int lo = 0; lo < height; lo += chunk)
    pool.emplace_back(run_rows, lo, std::min(height, lo + chunk));
  for (auto& th : pool) th.join();
  return img;
}

std::string ppm_encode(const RasterImage& img) {
  std::string out = "P6\n" + std::to_string(img.width) + " " +
                    std::to_string(img.height) + "\n255\n";
  out.reserve(out.size() + img.pixels.size() * 3);
  for (std::uint8_t v : img.pixels) {
    out.push_back((char)v);
    out.push_back((char)v);
    out.push_back((char)v);
  }
  return out;
}

void write_ppm(const RasterImage& img, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path);
  std::string bytes = ppm_encode(img);
  f.write(bytes.data(), (std::streamsize)bytes.size());
}

std::uint64_t image_hash(const RasterImage& img) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix((std::uint64_t)img.width);
  mix((std::uint64_t)img.height);
  for (std::uint8_t v : img.pixels) mix(v);
  return h;
}

}  // namespace fractal
