#include "fractal/schur.hpp"

#include <bit>
#include <map>

namespace fractal {

std::vector<Rat> ea2_characters(const EA2Element& e) {
  const int size = 1 << e.rank;
  if ((int)e.coeff.size() != size)
    throw MalformedTable("coefficient vector length must be 2^rank");
  std::vector<Rat> hat(size);
  for (int ch = 0; ch < size; ++ch) {
    Rat s = 0;
    for (int mask = 0; mask < size; ++mask) {
      if (std::popcount(static_cast<unsigned>(ch & mask)) % 2 == 0)
        s += e.coeff[mask];
      else
        s -= e.coeff[mask];
    }
    hat[ch] = s;
  }
  return hat;
}

EA2Element ea2_invert(const EA2Element& e) {
  const int size = 1 << e.rank;
  std::vector<Rat> hat = ea2_characters(e);
  for (int ch = 0; ch < size; ++ch)
    if (hat[ch] == 0) throw ZeroCharacter(ch);
  EA2Element rec{e.rank, std::vector<Rat>(size)};
  for (int ch = 0; ch < size; ++ch) rec.coeff[ch] = 1 / hat[ch];
  // inverse transform = forward transform scaled by 2^{-rank}
  EA2Element out{e.rank, ea2_characters(rec)};
  for (auto& c : out.coeff) c /= size;
  return out;
}

EA2Element ea2_mul(const EA2Element& a, const EA2Element& b) {
  if (a.rank != b.rank) throw MalformedTable("rank mismatch");
  const int size = 1 << a.rank;
  EA2Element out{a.rank, std::vector<Rat>(size)};
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) out.coeff[i ^ j] += a.coeff[i] * b.coeff[j];
  return out;
}

// Subset masks: rank 2 uses b=1, c=2 (d=3); rank 3 adds d~=4, with the
// identification b=001, c=010, d=011, a~=111, b~=110, c~=101, d~=100
// read as bits (b-bit, c-bit, d~-bit).
std::array<Rat, 5> derive_grigorchuk_s1(const std::array<Rat, 5>& p) {
  const auto& [x, y, z, u, v] = p;
  EA2Element D{2, {v, u, y, z}};  // 1, b, c, d
  EA2Element Dinv = ea2_invert(D);
  Rat x2 = x * x;
  return {y + z, -x2 * Dinv.coeff[1], -x2 * Dinv.coeff[2],
          -x2 * Dinv.coeff[3], u + v - x2 * Dinv.coeff[0]};
}

std::array<Rat, 5> derive_grigorchuk_s2(const std::array<Rat, 5>& p) {
  const auto& [x, y, z, u, v] = p;
  EA2Element A{1, {u + v, y + z}};  // 1, a
  EA2Element Ainv = ea2_invert(A);
  Rat x2 = x * x;
  return {-x2 * Ainv.coeff[1], u, y, z, v - x2 * Ainv.coeff[0]};
}

std::array<Rat, 9> derive_overgroup_s1(const std::array<Rat, 9>& p) {
  const auto& [x, y, z, u, q, r, s, t, v] = p;
  // D block carries u b + y c + z d + q a~ + t b~ + r c~ + s d~ + v 1.
  EA2Element D{3, std::vector<Rat>(8)};
  D.coeff[0] = v;  // 1
  D.coeff[1] = u;  // b
  D.coeff[2] = y;  // c
  D.coeff[3] = z;  // d
  D.coeff[7] = q;  // a~
  D.coeff[6] = t;  // b~
  D.coeff[5] = r;  // c~
  D.coeff[4] = s;  // d~
  EA2Element Dinv = ea2_invert(D);
  Rat x2 = x * x;
  return {y + z + q + t,
          -x2 * Dinv.coeff[1],
          -x2 * Dinv.coeff[2],
          -x2 * Dinv.coeff[3],
          -x2 * Dinv.coeff[7],
          -x2 * Dinv.coeff[6],
          -x2 * Dinv.coeff[5],
          -x2 * Dinv.coeff[4],
          u + r + s + v - x2 * Dinv.coeff[0]};
}

std::array<Rat, 9> derive_overgroup_s2(const std::array<Rat, 9>& p) {
  const auto& [x, y, z, u, q, r, s, t, v] = p;
  EA2Element A{1, {u + r + s + v, y + z + q + t}};
  EA2Element Ainv = ea2_invert(A);
  Rat x2 = x * x;
  return {-x2 * Ainv.coeff[1], u, y, z, q, t, r, s, v - x2 * Ainv.coeff[0]};
}

std::pair<Rat, Rat> derive_gomega_schur2(const Rat& x, const Rat& v,
                                         const Rat& y, const Rat& z,
                                         const Rat& u, int omega0) {
  Rat sum_a, sum_1;
  switch (omega0) {
    case 0: sum_a = y + z; sum_1 = u + v; break;
    case 1: sum_a = y + u; sum_1 = z + v; break;
    case 2: sum_a = z + u; sum_1 = y + v; break;
    default: throw UnknownName("omega symbol must be 0, 1 or 2");
  }
  EA2Element A{1, {sum_1, sum_a}};
  EA2Element Ainv;
  try {
    Ainv = ea2_invert(A);
  } catch (const ZeroCharacter&) {
    throw SingularBlock("top branch block is not invertible");
  }
  Rat x2 = x * x;
  return {-x2 * Ainv.coeff[1], v - x2 * Ainv.coeff[0]};
}

namespace {

Rat pencil_weight(const PencilSpec& pencil, const std::string& name) {
  for (const auto& [g, w] : pencil.weights)
    if (g == name) return w;
  return Rat(0);
}

}  // namespace

double level_renormalization_check(const GroupSpec& spec,
                                   const PencilSpec& pencil, int n) {
  if (n < 2) throw SingularBlock("renormalization check needs level >= 2");
  MatQ m = pencil_matrix(spec, pencil, n);
  MatQ s2;
  try {
    s2 = schur2(split_blocks(m));
  } catch (const SingularBlock&) {
    throw;
  }
  PencilSpec mapped;
  GroupSpec target = spec;
  if (spec.name == "grigorchuk") {
    std::array<Rat, 5> p{pencil_weight(pencil, "a"), pencil_weight(pencil, "b"),
                         pencil_weight(pencil, "c"), pencil_weight(pencil, "d"),
                         pencil.identity};
    std::array<Rat, 5> q;
    try {
      q = derive_grigorchuk_s2(p);
    } catch (const ZeroCharacter&) {
      throw SingularBlock("top branch block is not invertible");
    }
    mapped.weights = {{"a", q[0]}, {"b", q[1]}, {"c", q[2]}, {"d", q[3]}};
    mapped.identity = q[4];
  } else if (spec.name == "overgroup") {
    std::array<Rat, 9> p{
        pencil_weight(pencil, "a"),  pencil_weight(pencil, "b"),
        pencil_weight(pencil, "c"),  pencil_weight(pencil, "d"),
        pencil_weight(pencil, "ta"), pencil_weight(pencil, "tb"),
        pencil_weight(pencil, "tc"), pencil_weight(pencil, "td"),
        pencil.identity};
    std::array<Rat, 9> q;
    try {
      q = derive_overgroup_s2(p);
    } catch (const ZeroCharacter&) {
      throw SingularBlock("top branch block is not invertible");
    }
    mapped.weights = {{"a", q[0]},  {"b", q[1]},  {"c", q[2]},
                      {"d", q[3]},  {"ta", q[4]}, {"tb", q[5]},
                      {"tc", q[6]}, {"td", q[7]}};
    mapped.identity = q[8];
  } else if (spec.name.rfind("gomega[", 0) == 0) {
    // parse gomega[prefix|period]; level n-1 lives over the shifted sequence
    auto bar = spec.name.find('|');
    std::string prefix = spec.name.substr(7, bar - 7);
    std::string period =
        spec.name.substr(bar + 1, spec.name.size() - bar - 2);
    int omega0 = (prefix.empty() ? period[0] : prefix[0]) - '0';
    auto [xp, vp] = derive_gomega_schur2(
        pencil_weight(pencil, "a"), pencil.identity,
        pencil_weight(pencil, "b0"), pencil_weight(pencil, "c0"),
        pencil_weight(pencil, "d0"), omega0);
    std::string sprefix =
        prefix.empty() ? period.substr(1) + period.substr(0, 1)
                       : prefix.substr(1);
    if (prefix.empty())
      target = omega_group("", sprefix);
    else
      target = omega_group(sprefix, period);
    mapped.weights = {{"a", xp},
                      {"b0", pencil_weight(pencil, "b0")},
                      {"c0", pencil_weight(pencil, "c0")},
                      {"d0", pencil_weight(pencil, "d0")}};
    mapped.identity = vp;
  } else {
    throw UnknownName("no renormalization map for group '" + spec.name + "'");
  }
  mapped.require_symmetric = false;
  MatQ expect = pencil_matrix(target, mapped, n - 1);
  return max_abs(s2 - expect).get_d();
}

}  // namespace fractal
