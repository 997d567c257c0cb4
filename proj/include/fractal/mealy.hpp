#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "fractal/errors.hpp"

namespace fractal {

// Finite invertible transducer over the alphabet {0,...,d-1}.
// State q acts on the rooted d-ary tree by q(x w) = out[q][x] . (to[q][x])(w).
struct MealyMachine {
  int d = 0;
  std::vector<std::string> state_names;
  std::vector<std::vector<int>> to;   // transition: state index per (state, letter)
  std::vector<std::vector<int>> out;  // output letter per (state, letter)
  bool invertible = false;
  std::vector<std::vector<int>> out_inv;  // out_inv[q][y] = x with out[q][x] == y

  int n_states() const { return static_cast<int>(state_names.size()); }
  int state(const std::string& name) const;        // throws UnknownName
  int find_state(const std::string& name) const;   // -1 if absent

  // Checks table shape, ranges, duplicate names; fills invertible/out_inv.
  void validate();

  nlohmann::json to_json() const;
  static MealyMachine from_json(const nlohmann::json& j);
};

using MachinePtr = std::shared_ptr<const MealyMachine>;

MachinePtr make_machine(MealyMachine m);  // validates, then freezes

// Behavioural minimization (partition refinement on output rows, then
// transition classes). State names of merged classes keep the first name.
MealyMachine minimize(const MealyMachine& m);

// Canonical serialization of the sub-machine reachable from `start`,
// numbering states by BFS discovery order with letter-ordered edges.
std::string canonical_from(const MealyMachine& m, int start);

// Machine isomorphism up to state renaming (alphabet fixed pointwise).
bool machines_isomorphic(const MealyMachine& a, const MealyMachine& b);

}  // namespace fractal
