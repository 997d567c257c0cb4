#include "fractal/mealy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace fractal {

int MealyMachine::find_state(const std::string& name) const {
  for (int i = 0; i < n_states(); ++i)
    if (state_names[i] == name) return i;
  return -1;
}

int MealyMachine::state(const std::string& name) const {
  int i = find_state(name);
  if (i < 0) throw UnknownName("no state named '" + name + "'");
  return i;
}

void MealyMachine::validate() {
  if (d < 1) throw MalformedTable("alphabet size must be positive");
  const int n = n_states();
  if (n < 1) throw MalformedTable("machine needs at least one state");
  std::set<std::string> seen;
  for (const auto& s : state_names) {
    if (s.empty()) throw MalformedTable("empty state name");
    if (!seen.insert(s).second)
      throw MalformedTable("duplicate state name '" + s + "'");
  }
  if (static_cast<int>(to.size()) != n || static_cast<int>(out.size()) != n)
    throw MalformedTable("table row count does not match state count");
  for (int q = 0; q < n; ++q) {
    if (static_cast<int>(to[q].size()) != d ||
        static_cast<int>(out[q].size()) != d)
      throw MalformedTable("row length does not match alphabet size");
    for (int x = 0; x < d; ++x) {
      if (to[q][x] < 0 || to[q][x] >= n)
        throw MalformedTable("transition target out of range");
      if (out[q][x] < 0 || out[q][x] >= d)
        throw MalformedTable("output letter out of range");
    }
  }
  invertible = true;
  out_inv.assign(n, std::vector<int>(d, -1));
  for (int q = 0; q < n && invertible; ++q) {
    for (int x = 0; x < d; ++x) {
      int y = out[q][x];
      if (out_inv[q][y] != -1) {
        invertible = false;
        break;
      }
      out_inv[q][y] = x;
    }
  }
  if (!invertible) out_inv.clear();
}

MachinePtr make_machine(MealyMachine m) {
  m.validate();
  return std::make_shared<const MealyMachine>(std::move(m));
}

nlohmann::json MealyMachine::to_json() const {
  nlohmann::json states = nlohmann::json::array();
  for (int q = 0; q < n_states(); ++q) {
    nlohmann::json row;
    row["name"] = state_names[q];
    row["out"] = out[q];
    row["to"] = nlohmann::json::array();
    for (int x = 0; x < d; ++x) row["to"].push_back(state_names[to[q][x]]);
    states.push_back(row);
  }
  return nlohmann::json{{"alphabet", d}, {"states", states}};
}

MealyMachine MealyMachine::from_json(const nlohmann::json& j) {
  MealyMachine m;
  try {
    m.d = j.at("alphabet").get<int>();
    for (const auto& row : j.at("states")) {
      m.state_names.push_back(row.at("name").get<std::string>());
      m.out.push_back(row.at("out").get<std::vector<int>>());
      m.to.emplace_back();
    }
    int qi = 0;
    for (const auto& row : j.at("states")) {
      for (const auto& t : row.at("to")) {
        int idx = m.find_state(t.get<std::string>());
        if (idx < 0)
          throw MalformedTable("transition to unknown state '" +
                               t.get<std::string>() + "'");
        m.to[qi].push_back(idx);
      }
      ++qi;
    }
  } catch (const nlohmann::json::exception& e) {
    throw MalformedTable(std::string("bad machine JSON: ") + e.what());
  }
  m.validate();
  return m;
}

MealyMachine minimize(const MealyMachine& m) {
  const int n = m.n_states();
  // Initial partition: states with identical output rows.
  std::vector<int> cls(n);
  {
    std::map<std::vector<int>, int> by_out;
    for (int q = 0; q < n; ++q) {
      auto [it, fresh] = by_out.try_emplace(m.out[q], (int)by_out.size());
      cls[q] = it->second;
    }
  }
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> refine;
    std::vector<int> next(n);
    for (int q = 0; q < n; ++q) {
      std::vector<int> sig(m.d);
      for (int x = 0; x < m.d; ++x) sig[x] = cls[m.to[q][x]];
      auto [it, fresh] =
          refine.try_emplace({cls[q], std::move(sig)}, (int)refine.size());
      next[q] = it->second;
    }
    if (next == cls) break;
    cls = next;
  }
  int k = 1 + *std::max_element(cls.begin(), cls.end());
  MealyMachine r;
  r.d = m.d;
  r.state_names.assign(k, "");
  r.to.assign(k, std::vector<int>(m.d));
  r.out.assign(k, std::vector<int>(m.d));
  for (int q = 0; q < n; ++q) {
    int c = cls[q];
    if (r.state_names[c].empty()) {
      r.state_names[c] = m.state_names[q];
      r.out[c] = m.out[q];
      for (int x = 0; x < m.d; ++x) r.to[c][x] = cls[m.to[q][x]];
    }
  }
  r.validate();
  return r;
}

std::string canonical_from(const MealyMachine& m, int start) {
  std::vector<int> order(m.n_states(), -1);
  std::vector<int> bfs;
  order[start] = 0;
  bfs.push_back(start);
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int q = bfs[i];
    for (int x = 0; x < m.d; ++x) {
      int t = m.to[q][x];
      if (order[t] < 0) {
        order[t] = static_cast<int>(bfs.size());
        bfs.push_back(t);
      }
    }
  }
  std::ostringstream os;
  os << m.d << ";";
  for (int q : bfs) {
    for (int x = 0; x < m.d; ++x)
      os << m.out[q][x] << "," << order[m.to[q][x]] << ";";
  }
  return os.str();
}

bool machines_isomorphic(const MealyMachine& a0, const MealyMachine& b0) {
  MealyMachine a = minimize(a0), b = minimize(b0);
  if (a.d != b.d || a.n_states() != b.n_states()) return false;
  // A minimal machine has no two equivalent states, so an isomorphism is
  // pinned by matching any one state; try every anchor pair.
  std::multiset<std::string> ca, cb;
  for (int q = 0; q < a.n_states(); ++q) {
    // Machines may not be strongly connected; compare the multiset of
    // per-state reachable canonical forms. For minimal machines this
    // multiset determines behaviour of every state.
    ca.insert(canonical_from(a, q));
    cb.insert(canonical_from(b, q));
  }
  return ca == cb;
}

}  // namespace fractal
