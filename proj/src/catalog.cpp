#include "fractal/catalog.hpp"

#include <map>

namespace fractal {

namespace {

MealyMachine build(int d, std::vector<std::string> names,
                   std::vector<std::vector<int>> out,
                   std::vector<std::vector<std::string>> to) {
  MealyMachine m;
  m.d = d;
  m.state_names = std::move(names);
  m.out = std::move(out);
  for (auto& row : to) {
    std::vector<int> r;
    for (auto& s : row) r.push_back(m.state(s));
    m.to.push_back(std::move(r));
  }
  m.validate();
  return m;
}

const std::vector<int> ID2{0, 1};
const std::vector<int> SW{1, 0};

GroupSpec grigorchuk() {
  // a swaps; b=(a,c), c=(a,d), d=(1,b)
  MealyMachine m = build(2, {"1", "a", "b", "c", "d"},
                         {ID2, SW, ID2, ID2, ID2},
                         {{"1", "1"},
                          {"1", "1"},
                          {"a", "c"},
                          {"a", "d"},
                          {"1", "b"}});
  return {"grigorchuk", make_machine(std::move(m)), {"a", "b", "c", "d"}};
}

GroupSpec overgroup() {
  // Adds ta=(a,ta), tb=(1,tc), tc=(1,td), td=(a,tb) to the classic states.
  MealyMachine m = build(
      2, {"1", "a", "b", "c", "d", "ta", "tb", "tc", "td"},
      {ID2, SW, ID2, ID2, ID2, ID2, ID2, ID2, ID2},
      {{"1", "1"},
       {"1", "1"},
       {"a", "c"},
       {"a", "d"},
       {"1", "b"},
       {"a", "ta"},
       {"1", "tc"},
       {"1", "td"},
       {"a", "tb"}});
  return {"overgroup", make_machine(std::move(m)),
          {"a", "b", "c", "d", "ta", "tb", "tc", "td"}};
}

GroupSpec lamplighter() {
  // a = sigma(a,b), b = (a,b): the residually finite lamplighter machine.
  MealyMachine m = build(2, {"a", "b"}, {SW, ID2},
                         {{"a", "b"}, {"a", "b"}});
  return {"lamplighter", make_machine(std::move(m)), {"a", "b"}};
}

GroupSpec basilica() {
  // a = (1,b); b = sigma(a,1) i.e. b|_0 = a.
  MealyMachine m = build(2, {"1", "a", "b"}, {ID2, ID2, SW},
                         {{"1", "1"}, {"1", "b"}, {"a", "1"}});
  return {"basilica", make_machine(std::move(m)), {"a", "b"}};
}

GroupSpec hanoi3() {
  // Three pegs: a = (01)(1,1,a), b = (02)(1,b,1), c = (12)(c,1,1).
  MealyMachine m = build(3, {"1", "a", "b", "c"},
                         {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}},
                         {{"1", "1", "1"},
                          {"1", "1", "a"},
                          {"1", "b", "1"},
                          {"c", "1", "1"}});
  return {"hanoi3", make_machine(std::move(m)), {"a", "b", "c"}};
}

GroupSpec img_z2_plus_i() {
  // Iterated monodromy group of z^2 + i: a = sigma(1,1), b=(a,c), c=(b,1).
  MealyMachine m = build(2, {"1", "a", "b", "c"}, {ID2, SW, ID2, ID2},
                         {{"1", "1"}, {"1", "1"}, {"a", "c"}, {"b", "1"}});
  return {"img_z2_plus_i", make_machine(std::move(m)), {"a", "b", "c"}};
}

GroupSpec adding_machine() {
  // Binary odometer: s = (1,s) sigma.
  MealyMachine m = build(2, {"1", "s"}, {ID2, SW}, {{"1", "1"}, {"1", "s"}});
  return {"adding_machine", make_machine(std::move(m)), {"s"}};
}

GroupSpec bellaterra() {
  // Three involutions a=(b,c), b=(c,b), c=sigma(a,a); free product C2*C2*C2.
  MealyMachine m = build(2, {"a", "b", "c"}, {ID2, ID2, SW},
                         {{"b", "c"}, {"c", "b"}, {"a", "a"}});
  return {"bellaterra", make_machine(std::move(m)), {"a", "b", "c"}};
}

GroupSpec aleshin() {
  // Free group of rank 3: a=sigma(b,c), b=sigma(c,b), c=(a,a).
  MealyMachine m = build(2, {"a", "b", "c"}, {SW, SW, ID2},
                         {{"b", "c"}, {"c", "b"}, {"a", "a"}});
  return {"aleshin", make_machine(std::move(m)), {"a", "b", "c"}};
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"grigorchuk",   "overgroup",      "lamplighter",
          "basilica",     "hanoi3",         "img_z2_plus_i",
          "adding_machine", "bellaterra",   "aleshin"};
}

GroupSpec catalog_get(const std::string& name) {
  if (name == "grigorchuk") return grigorchuk();
  if (name == "overgroup") return overgroup();
  if (name == "lamplighter") return lamplighter();
  if (name == "basilica") return basilica();
  if (name == "hanoi3") return hanoi3();
  if (name == "img_z2_plus_i") return img_z2_plus_i();
  if (name == "adding_machine") return adding_machine();
  if (name == "bellaterra") return bellaterra();
  if (name == "aleshin") return aleshin();
  throw UnknownName("no catalog group named '" + name + "'");
}

GroupSpec omega_group(const std::string& prefix, const std::string& period) {
  if (period.empty()) throw UnknownName("omega period must be nonempty");
  std::string omega = prefix + period;
  const int m = static_cast<int>(omega.size());
  const int wrap = static_cast<int>(prefix.size());  // period restart index
  for (char c : omega)
    if (c < '0' || c > '2')
      throw UnknownName("omega symbols must be in {0,1,2}");
  // Generator g in {b,c,d} contributes 'a' in the left coordinate unless the
  // current symbol kills it: b_2 = c_1 = d_0 = 1, all others a.
  auto left = [](char g, char sym) -> std::string {
    int s = sym - '0';
    if (g == 'b') return s == 2 ? "1" : "a";
    if (g == 'c') return s == 1 ? "1" : "a";
    return s == 0 ? "1" : "a";  // d
  };
  MealyMachine mm;
  mm.d = 2;
  mm.state_names = {"1", "a"};
  for (char g : std::string("bcd"))
    for (int k = 0; k < m; ++k)
      mm.state_names.push_back(std::string(1, g) + std::to_string(k));
  auto idx = [&](const std::string& s) {
    for (std::size_t i = 0; i < mm.state_names.size(); ++i)
      if (mm.state_names[i] == s) return (int)i;
    return -1;
  };
  mm.out.assign(mm.state_names.size(), ID2);
  mm.out[1] = SW;
  mm.to.assign(mm.state_names.size(), {0, 0});
  for (char g : std::string("bcd")) {
    for (int k = 0; k < m; ++k) {
      int self = idx(std::string(1, g) + std::to_string(k));
      int nk = (k + 1 < m) ? k + 1 : wrap;
      mm.to[self][0] = idx(left(g, omega[k]));
      mm.to[self][1] = idx(std::string(1, g) + std::to_string(nk));
    }
  }
  mm.validate();
  GroupSpec spec;
  spec.name = "gomega[" + prefix + "|" + period + "]";
  spec.machine = make_machine(std::move(mm));
  spec.generators = {"a", "b0", "c0", "d0"};
  return spec;
}

}  // namespace fractal
