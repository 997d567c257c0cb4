#pragma once

#include <string>
#include <vector>

#include "fractal/element.hpp"
#include "fractal/mealy.hpp"

namespace fractal {

// A named self-similar group: machine plus its generating states.
struct GroupSpec {
  std::string name;
  MachinePtr machine;
  std::vector<std::string> generators;  // state names, identity excluded

  ElementWord word(const std::string& w) const {
    return ElementWord::parse(machine, w);
  }
  ElementWord gen(const std::string& g) const {
    return ElementWord::generator(machine, g);
  }
  ElementWord id() const { return ElementWord::identity(machine); }
};

std::vector<std::string> catalog_names();
GroupSpec catalog_get(const std::string& name);  // throws UnknownName

// Spectral-type generalization of the first catalog entry: generators
// b,c,d follow the symbol sequence omega = prefix . (period)^infinity
// over {0,1,2}; the classic group is omega = (012)^infinity.
GroupSpec omega_group(const std::string& prefix, const std::string& period);

}  // namespace fractal
