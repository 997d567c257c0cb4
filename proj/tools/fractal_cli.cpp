// Command-line front end for the self-similar-group toolkit.
//
// Subcommands: catalog, act, wp, schreier, growth, spectrum, dos, schur,
// map, walk, subshift.  Exit codes: 0 success, 1 usage error, 2 domain
// error (indeterminate point, singular block, vanishing character, ...).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fractal/catalog.hpp"
#include "fractal/maps.hpp"
#include "fractal/schreier.hpp"
#include "fractal/schur.hpp"
#include "fractal/spectra.hpp"
#include "fractal/subshift.hpp"
#include "fractal/walks.hpp"

namespace {

using namespace fractal;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Rat> parse_rats(const std::string& s) {
  std::vector<Rat> out;
  if (s.empty()) return out;
  for (const auto& tok : split(s, ',')) out.push_back(rat_parse(tok));
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  if (s.empty()) return out;
  for (const auto& tok : split(s, ',')) out.push_back(std::stod(tok));
  return out;
}

std::string float17(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// "a=1,b=1/2,e=-1": generator weights by name, 'e' is the identity weight.
PencilSpec parse_pencil(const GroupSpec& spec, const std::string& s) {
  PencilSpec p;
  for (const auto& tok : split(s, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--pencil", "expected name=value entries");
    std::string name = tok.substr(0, eq);
    Rat w = rat_parse(tok.substr(eq + 1));
    if (name == "e" || name == "1")
      p.identity = w;
    else
      p.weights.emplace_back(name, w);
  }
  // reject weights on unknown generators
  for (const auto& [g, w] : p.weights) {
    bool known = false;
    for (const auto& gen : spec.generators) known = known || gen == g;
    if (!known) throw UnknownName("no generator named '" + g + "'");
  }
  return p;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    f << text;
  }
}

// Best rational p/q with q <= qmax approximating v (continued fractions).
Rat snap_rational(double v, long qmax) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = v;
  for (int it = 0; it < 64; ++it) {
    long a = (long)std::floor(x);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > qmax) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = x - (double)a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  return Rat(p1, q1 == 0 ? 1 : q1);
}

int run(int argc, char** argv) {
  CLI::App app{"self-similar group toolkit"};
  app.require_subcommand(1);

  // ---- catalog ------------------------------------------------------------
  auto* cat = app.add_subcommand("catalog", "list or inspect the group catalog");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "print all catalog names")->callback([] {
    for (const auto& n : catalog_names()) std::cout << n << "\n";
  });
  auto* cat_show = cat->add_subcommand("show", "print one machine");
  std::string cat_name;
  bool cat_json = false;
  cat_show->add_option("name", cat_name, "catalog entry")->required();
  cat_show->add_flag("--json", cat_json, "emit the JSON machine format");
  cat_show->callback([&] {
    GroupSpec g = catalog_get(cat_name);
    if (cat_json) {
      std::cout << g.machine->to_json().dump(2) << "\n";
      return;
    }
    std::cout << "name: " << g.name << "\nalphabet: " << g.machine->d
              << "\nstates:";
    for (const auto& s : g.machine->state_names) std::cout << " " << s;
    std::cout << "\ngenerators:";
    for (const auto& s : g.generators) std::cout << " " << s;
    std::cout << "\n";
  });

  // ---- act ----------------------------------------------------------------
  auto* act = app.add_subcommand("act", "apply a word to a tree vertex");
  std::string act_group, act_word, act_vertex;
  bool act_section = false;
  act->add_option("--group", act_group)->required();
  act->add_option("--word", act_word)->required();
  act->add_option("--vertex", act_vertex, "digit string, most significant first")
      ->required();
  act->add_flag("--section", act_section, "also print the section at the vertex");
  act->callback([&] {
    GroupSpec g = catalog_get(act_group);
    ElementWord w = g.word(act_word);
    std::cout << w.apply(act_vertex) << "\n";
    if (act_section) std::cout << w.section_at(act_vertex).display() << "\n";
  });

  // ---- wp -----------------------------------------------------------------
  auto* wp = app.add_subcommand("wp", "word problem");
  std::string wp_group, wp_word;
  wp->add_option("--group", wp_group)->required();
  wp->add_option("--word", wp_word)->required();
  wp->callback([&] {
    GroupSpec g = catalog_get(wp_group);
    std::cout << (g.word(wp_word).is_identity() ? "identity" : "nontrivial")
              << "\n";
  });

  // ---- schreier -----------------------------------------------------------
  auto* sch = app.add_subcommand("schreier", "level-n action graph");
  std::string sch_group, sch_format = "dot", sch_out;
  int sch_level = 1;
  sch->add_option("--group", sch_group)->required();
  sch->add_option("--level", sch_level)->required()->check(CLI::PositiveNumber);
  sch->add_option("--format", sch_format)
      ->check(CLI::IsMember({"dot", "csv"}));
  sch->add_option("--out", sch_out, "output path (default stdout)");
  sch->callback([&] {
    GroupSpec g = catalog_get(sch_group);
    LabeledGraph gr = level_graph(g, sch_level);
    emit(sch_format == "dot" ? export_dot(gr) : export_csv(gr), sch_out);
  });

  // ---- growth -------------------------------------------------------------
  auto* gro = app.add_subcommand("growth", "word-metric ball sizes");
  std::string gro_group, gro_out;
  int gro_radius = 4;
  gro->add_option("--group", gro_group)->required();
  gro->add_option("--radius", gro_radius)->check(CLI::NonNegativeNumber);
  gro->add_option("--out", gro_out);
  gro->callback([&] {
    GroupSpec g = catalog_get(gro_group);
    emit(growth_csv(cayley_ball_graph(g, gro_radius).growth), gro_out);
  });

  // ---- spectrum -----------------------------------------------------------
  auto* spe = app.add_subcommand("spectrum", "level-n pencil spectrum");
  std::string spe_group, spe_pencil, spe_out;
  int spe_level = 1;
  bool spe_adj = false;
  spe->add_option("group", spe_group)->required();
  spe->add_option("--level", spe_level)->required()->check(CLI::PositiveNumber);
  spe->add_flag("--adjacency", spe_adj, "all generator weights 1 (default)");
  spe->add_option("--pencil", spe_pencil, "weights, e.g. a=1,b=1/2,e=-1");
  spe->add_option("--out", spe_out);
  spe->callback([&] {
    GroupSpec g = catalog_get(spe_group);
    PencilSpec p =
        spe_pencil.empty() ? adjacency_pencil(g) : parse_pencil(g, spe_pencil);
    auto eigs = eigen_sym(to_double(pencil_matrix(g, p, spe_level)));
    emit(spectrum_csv(cluster(eigs)), spe_out);
  });

  // ---- dos ----------------------------------------------------------------
  auto* dsc = app.add_subcommand("dos", "density-of-states CDF per level");
  std::string dos_group, dos_pencil, dos_levels = "1,2,3", dos_out;
  dsc->add_option("group", dos_group)->required();
  dsc->add_option("--levels", dos_levels, "comma list, e.g. 1,2,3");
  dsc->add_option("--pencil", dos_pencil);
  dsc->add_option("--out", dos_out);
  dsc->callback([&] {
    GroupSpec g = catalog_get(dos_group);
    PencilSpec p =
        dos_pencil.empty() ? adjacency_pencil(g) : parse_pencil(g, dos_pencil);
    std::vector<int> levels;
    for (const auto& tok : split(dos_levels, ','))
      levels.push_back(std::stoi(tok));
    DosResult r = dos(g, p, levels);
    std::ostringstream os;
    os << "level,value,cdf\n";
    os.precision(17);
    for (const auto& lvl : r.levels) {
      double cdf = 0;
      for (const auto& [v, m] : lvl.atoms) {
        cdf += m;
        os << lvl.level << "," << v << "," << cdf << "\n";
      }
    }
    for (std::size_t i = 0; i + 1 < r.levels.size(); ++i)
      os << "# kolmogorov(" << r.levels[i].level << ","
         << r.levels[i + 1].level << ") = " << r.kolmogorov[i] << "\n";
    emit(os.str(), dos_out);
  });

  // ---- schur --------------------------------------------------------------
  auto* shu = app.add_subcommand("schur", "group-algebra Schur complements");
  auto* shu_derive = shu->add_subcommand("derive", "derived map coefficients");
  std::string shu_group, shu_at;
  int shu_omega0 = 0, shu_which = 1;
  shu_derive->add_option("--group", shu_group)
      ->required()
      ->check(CLI::IsMember({"grigorchuk", "overgroup", "gomega"}));
  shu_derive->add_option("--at", shu_at, "comma list of exact coefficients")
      ->required();
  shu_derive->add_option("--omega0", shu_omega0, "first symbol (gomega only)")
      ->check(CLI::Range(0, 2));
  shu_derive->add_option("--which", shu_which, "1 or 2")
      ->check(CLI::Range(1, 2));
  shu_derive->callback([&] {
    std::vector<Rat> at = parse_rats(shu_at);
    auto print = [](auto arr) {
      for (std::size_t i = 0; i < arr.size(); ++i)
        std::cout << (i ? " " : "") << rat_str(arr[i]);
      std::cout << "\n";
    };
    if (shu_group == "grigorchuk") {
      if (at.size() != 5)
        throw CLI::ValidationError("--at", "expected 5 coefficients x,y,z,u,v");
      std::array<Rat, 5> p{at[0], at[1], at[2], at[3], at[4]};
      print(shu_which == 1 ? derive_grigorchuk_s1(p) : derive_grigorchuk_s2(p));
    } else if (shu_group == "overgroup") {
      if (at.size() != 9)
        throw CLI::ValidationError("--at", "expected 9 coefficients");
      std::array<Rat, 9> p;
      std::copy(at.begin(), at.end(), p.begin());
      print(shu_which == 1 ? derive_overgroup_s1(p) : derive_overgroup_s2(p));
    } else {
      if (at.size() != 5)
        throw CLI::ValidationError("--at", "expected 5 coefficients x,v,y,z,u");
      auto [xp, vp] =
          derive_gomega_schur2(at[0], at[1], at[2], at[3], at[4], shu_omega0);
      std::cout << rat_str(xp) << " " << rat_str(vp) << "\n";
    }
  });

  // ---- map ----------------------------------------------------------------
  auto* mp = app.add_subcommand("map", "rational-map dynamics");
  mp->require_subcommand(1);
  mp->add_subcommand("list", "print the map registry")->callback([] {
    for (const auto& spec : map_registry()) {
      std::cout << spec.id << " dim=" << spec.dimension;
      if (!spec.params.empty()) {
        std::cout << " params=";
        for (std::size_t i = 0; i < spec.params.size(); ++i)
          std::cout << (i ? "," : "") << spec.params[i];
      }
      std::cout << "\n";
    }
  });

  auto* mp_eval = mp->add_subcommand("eval", "apply a map once");
  std::string me_id, me_point, me_params;
  bool me_exact = false;
  mp_eval->add_option("--id", me_id)->required();
  mp_eval->add_option("--point", me_point)->required();
  mp_eval->add_option("--params", me_params);
  mp_eval->add_flag("--exact", me_exact);
  mp_eval->callback([&] {
    if (me_exact) {
      auto q = map_eval<Rat>(me_id, parse_rats(me_params), parse_rats(me_point));
      for (std::size_t i = 0; i < q.size(); ++i)
        std::cout << (i ? " " : "") << rat_str(q[i]);
    } else {
      auto q = map_eval<double>(me_id, parse_doubles(me_params),
                                parse_doubles(me_point));
      for (std::size_t i = 0; i < q.size(); ++i)
        std::cout << (i ? " " : "") << float17(q[i]);
    }
    std::cout << "\n";
  });

  auto* mp_orbit = mp->add_subcommand("orbit", "iterate and print the orbit");
  std::string mo_id, mo_point, mo_params, mo_out;
  int mo_n = 20;
  bool mo_exact = false;
  mp_orbit->add_option("--id", mo_id, "map id or cyclic list F0,F1,F2")
      ->required();
  mp_orbit->add_option("--point", mo_point)->required();
  mp_orbit->add_option("--params", mo_params);
  mp_orbit->add_option("--n", mo_n)->check(CLI::PositiveNumber);
  mp_orbit->add_flag("--exact", mo_exact, "exact orbit (single map only)");
  mp_orbit->add_option("--out", mo_out);
  mp_orbit->callback([&] {
    std::ostringstream os;
    if (mo_exact) {
      auto orbit =
          iterate_exact(mo_id, parse_rats(mo_params), parse_rats(mo_point), mo_n);
      for (const auto& q : orbit) {
        for (std::size_t i = 0; i < q.size(); ++i)
          os << (i ? "," : "") << rat_str(q[i]);
        os << "\n";
      }
    } else {
      OrbitRecord rec = iterate_maps(split(mo_id, ','), parse_doubles(mo_params),
                                     parse_doubles(mo_point), mo_n);
      os.precision(17);
      for (const auto& q : rec.points) {
        for (std::size_t i = 0; i < q.size(); ++i) os << (i ? "," : "") << q[i];
        os << "\n";
      }
      if (rec.escaped) os << "# escaped at step " << rec.escape_step << "\n";
      if (rec.indeterminate)
        os << "# indeterminate at step " << rec.escape_step << "\n";
    }
    emit(os.str(), mo_out);
  });

  auto* mp_render = mp->add_subcommand("render", "escape-time PPM image");
  std::string mr_id, mr_params, mr_window = "-4:4:-4:4", mr_out;
  int mr_res = 512, mr_iters = 100;
  mp_render->add_option("--id", mr_id)->required();
  mp_render->add_option("--params", mr_params);
  mp_render->add_option("--window", mr_window, "xmin:xmax:ymin:ymax");
  mp_render->add_option("--res", mr_res)->check(CLI::PositiveNumber);
  mp_render->add_option("--iters", mr_iters)->check(CLI::PositiveNumber);
  mp_render->add_option("--out", mr_out, "PPM path (default: print hash only)");
  mp_render->callback([&] {
    auto parts = split(mr_window, ':');
    if (parts.size() != 4)
      throw CLI::ValidationError("--window", "expected xmin:xmax:ymin:ymax");
    Window w{std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2]),
             std::stod(parts[3])};
    RasterImage img = render_map(split(mr_id, ','), parse_doubles(mr_params), w,
                                 mr_res, mr_res, mr_iters);
    if (!mr_out.empty()) write_ppm(img, mr_out);
    std::printf("%dx%d hash=%016llx\n", img.width, img.height,
                (unsigned long long)image_hash(img));
  });

  // ---- walk ---------------------------------------------------------------
  auto* wa = app.add_subcommand("walk", "probabilistic Schur maps");
  wa->require_subcommand(1);
  auto* wa_fp = wa->add_subcommand("fixedpoint", "search the normalized map");
  int wf_grid = 10, wf_iters = 4000;
  double wf_tol = 1e-12;
  wa_fp->add_option("--grid", wf_grid)->check(CLI::PositiveNumber);
  wa_fp->add_option("--iters", wf_iters)->check(CLI::PositiveNumber);
  wa_fp->add_option("--tol", wf_tol);
  wa_fp->callback([&] {
    FixedPointSearch res = find_fixed_points(1, wf_grid, wf_iters, wf_tol);
    for (const auto& p : res.points) {
      // snap to small rationals and keep the exact form when it verifies
      SimplexPoint<Rat> cand;
      for (int i = 0; i < 4; ++i) cand[i] = snap_rational(p[i], 64);
      bool exact = false;
      try {
        exact = walk_k1_hat<Rat>(cand) == cand;
      } catch (const Indeterminate&) {
      }
      for (int i = 0; i < 4; ++i)
        std::cout << (i ? " " : "")
                  << (exact ? rat_str(cand[i]) : float17(p[i]));
      std::cout << "\n";
    }
  });

  auto* wa_k1 = wa->add_subcommand("k1", "iterate the normalized first map");
  std::string wk_point = "1/4,1/4,1/4,1/4";
  int wk_n = 10;
  wa_k1->add_option("--point", wk_point, "exact simplex point x,y,z,u");
  wa_k1->add_option("--n", wk_n)->check(CLI::NonNegativeNumber);
  wa_k1->callback([&] {
    std::vector<Rat> v = parse_rats(wk_point);
    if (v.size() != 4)
      throw CLI::ValidationError("--point", "expected 4 coordinates");
    SimplexPoint<Rat> p{v[0], v[1], v[2], v[3]};
    std::cout << "step,x,y,z,u\n";
    for (int s = 0; s <= wk_n; ++s) {
      std::cout << s;
      for (const Rat& c : p) std::cout << "," << rat_str(c);
      std::cout << "\n";
      if (s < wk_n) p = walk_k1_hat<Rat>(p);
    }
  });

  // ---- subshift -----------------------------------------------------------
  auto* su = app.add_subcommand("subshift", "substitution subshifts");
  su->require_subcommand(1);
  auto* su_eta = su->add_subcommand("eta", "fixed-point prefix");
  std::size_t se_len = 1024;
  std::string se_sub = "sigma";
  su_eta->add_option("--length", se_len)->check(CLI::PositiveNumber);
  su_eta->add_option("--sub", se_sub)
      ->check(CLI::IsMember({"sigma", "sigmaprime", "thuemorse"}));
  su_eta->callback([&] {
    Substitution s = se_sub == "sigma"        ? sigma_substitution()
                     : se_sub == "sigmaprime" ? sigma_prime_substitution()
                                              : thue_morse_substitution();
    std::cout << fixed_point_prefix(s, s.alphabet[0], se_len) << "\n";
  });

  auto* su_rel = su->add_subcommand("relators", "substitution-closed relators");
  int sr_k = 4;
  bool sr_verify = false;
  su_rel->add_option("--k", sr_k)->check(CLI::NonNegativeNumber);
  su_rel->add_flag("--verify", sr_verify, "check each word is the identity");
  su_rel->callback([&] {
    GroupSpec g = catalog_get("grigorchuk");
    for (const auto& r : presentation_relators(sr_k)) {
      std::cout << r;
      if (sr_verify)
        std::cout << " " << (g.word(r).is_identity() ? "identity" : "BROKEN");
      std::cout << "\n";
    }
  });

  auto* su_pr = su->add_subcommand("primitive", "substitution primitivity");
  std::string sp_sub = "sigma";
  su_pr->add_option("--sub", sp_sub)
      ->check(CLI::IsMember({"sigma", "sigmaprime", "thuemorse"}));
  su_pr->callback([&] {
    Substitution s = sp_sub == "sigma"        ? sigma_substitution()
                     : sp_sub == "sigmaprime" ? sigma_prime_substitution()
                                              : thue_morse_substitution();
    auto r = is_primitive(s);
    if (r.primitive)
      std::cout << "primitive witness=" << r.witness_k << "\n";
    else
      std::cout << "not primitive\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, success
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // all usage errors map to 1
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fractal::UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const fractal::MalformedTable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const fractal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
