#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fractal/mealy.hpp"
#include "fractal/rational.hpp"

namespace fractal {

// Group element given as a reduced word in machine states and their
// inverses. The word q1 q2 ... qk acts left-to-right as composition:
// (g h)(v) = g(h(v)), so the rightmost letter acts first.
class ElementWord {
 public:
  ElementWord() = default;
  static ElementWord identity(MachinePtr m);
  static ElementWord generator(MachinePtr m, const std::string& name,
                               int exp = 1);
  // "adac" (single-char state names) or space/'*'-separated tokens with
  // optional ^-1 / trailing ' suffix for inverses.
  static ElementWord parse(MachinePtr m, const std::string& word);

  const MachinePtr& machine() const { return m_; }
  const std::vector<std::pair<int, int>>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool trivial_word() const { return letters_.empty(); }

  ElementWord operator*(const ElementWord& rhs) const;
  ElementWord inverse() const;

  int image(int x) const;                 // action on a first letter
  ElementWord section(int x) const;       // restriction to subtree x
  std::string apply(const std::string& vertex) const;  // digits string
  ElementWord section_at(const std::string& vertex) const;

  // Exact word key (reduced letters); distinguishes words, not elements.
  std::string key() const;
  std::string display() const;

  // Word problem: depth-first closure over sections with memoization.
  // Throws BudgetExceeded when more than `budget` distinct words appear.
  bool is_identity(std::size_t budget = 1u << 20) const;

  // Canonical form of the acted automorphism: serialized minimized initial
  // automaton of the section closure. Equal keys <=> equal group elements.
  std::string canonical_key(std::size_t budget = 1u << 20) const;

  bool same_element(const ElementWord& other,
                    std::size_t budget = 1u << 20) const;

  // Number of level-n vertices fixed by the element.
  std::int64_t count_fixed(int n) const;
  Rat trace_estimate(int n) const;  // count_fixed(n) / d^n

 private:
  MachinePtr m_;
  std::vector<std::pair<int, int>> letters_;  // (state, +1|-1)
  void push_reduced(int q, int e);
  friend class WordBuilder;
};

// Nucleus computation for a contracting group generated by all machine
// states. Returns shortest word representatives, identity first.
std::vector<ElementWord> nucleus(MachinePtr m, std::size_t cap = 10000);

struct GrowthResult {
  std::vector<std::int64_t> sphere;      // sphere[r] = #elements at distance r
  std::vector<std::int64_t> ball;        // cumulative
  std::vector<ElementWord> elements;     // one shortest rep each, BFS order
};

// Ball of the word metric w.r.t. the given generator names (plus inverses
// for non-involutive generators); dedup by canonical_key.
GrowthResult cayley_ball(MachinePtr m, const std::vector<std::string>& gens,
                         int radius, std::size_t budget = 1u << 20);

// Brute-force triviality check on levels 1..n (oracle for tests).
bool acts_trivially_up_to(const ElementWord& g, int n);

}  // namespace fractal
