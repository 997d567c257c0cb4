#include "fractal/element.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace fractal {

void ElementWord::push_reduced(int q, int e) {
  if (!letters_.empty() && letters_.back().first == q &&
      letters_.back().second == -e) {
    letters_.pop_back();
  } else {
    letters_.emplace_back(q, e);
  }
}

ElementWord ElementWord::identity(MachinePtr m) {
  ElementWord w;
  w.m_ = std::move(m);
  return w;
}

ElementWord ElementWord::generator(MachinePtr m, const std::string& name,
                                   int exp) {
  ElementWord w;
  w.m_ = std::move(m);
  int q = w.m_->state(name);
  if (exp == -1 && !w.m_->invertible)
    throw MalformedTable("machine is not invertible");
  if (exp != 1 && exp != -1) throw UnknownName("exponent must be +1 or -1");
  w.letters_.emplace_back(q, exp);
  return w;
}

ElementWord ElementWord::parse(MachinePtr m, const std::string& word) {
  ElementWord w;
  w.m_ = std::move(m);
  const MealyMachine& mm = *w.m_;
  // Tokenize on spaces/'*'; expand a token per-character only when every
  // state name is a single character (so "adac" works for the classics).
  bool single_chars = true;
  for (const auto& n : mm.state_names) single_chars &= n.size() == 1;
  std::vector<std::pair<std::string, int>> toks;
  std::string tmp = word;
  std::replace(tmp.begin(), tmp.end(), '*', ' ');
  std::istringstream is(tmp);
  std::string t;
  while (is >> t) {
    int e = 1;
    if (t.size() > 2 && t.substr(t.size() - 3) == "^-1") {
      e = -1;
      t = t.substr(0, t.size() - 3);
    } else if (t.size() > 1 && t.back() == '\'' &&
               mm.find_state(t.substr(0, t.size() - 1)) >= 0) {
      e = -1;
      t.pop_back();
    }
    if (single_chars && t.size() > 1) {
      std::size_t start = toks.size();
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '1') continue;  // identity letter
        int ce = 1;
        std::string c(1, t[i]);
        if (i + 1 < t.size() && t[i + 1] == '\'') {
          ce = -1;
          ++i;
        }
        toks.emplace_back(c, ce);
      }
      if (e == -1) {  // exponent applied to the whole token
        std::reverse(toks.begin() + (long)start, toks.end());
        for (std::size_t i = start; i < toks.size(); ++i)
          toks[i].second = -toks[i].second;
      }
    } else {
      toks.emplace_back(t, e);
    }
  }
  for (auto& [name, e] : toks) {
    if (name == "1") continue;
    if (e == -1 && !mm.invertible)
      throw MalformedTable("machine is not invertible");
    w.push_reduced(mm.state(name), e);
  }
  return w;
}

ElementWord ElementWord::operator*(const ElementWord& rhs) const {
  ElementWord w;
  w.m_ = m_ ? m_ : rhs.m_;
  w.letters_ = letters_;
  for (auto& [q, e] : rhs.letters_) w.push_reduced(q, e);
  return w;
}

ElementWord ElementWord::inverse() const {
  if (m_ && !m_->invertible)
    throw MalformedTable("machine is not invertible");
  ElementWord w;
  w.m_ = m_;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.emplace_back(it->first, -it->second);
  return w;
}

int ElementWord::image(int x) const {
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    auto [q, e] = *it;
    x = (e == 1) ? m_->out[q][x] : m_->out_inv[q][x];
  }
  return x;
}

ElementWord ElementWord::section(int x) const {
  ElementWord child;
  child.m_ = m_;
  // Rightmost letter acts first; (g h)|_x = g|_{h(x)} h|_x, so walk the
  // word right-to-left tracking the current letter, and prepend sections.
  std::vector<std::pair<int, int>> rev;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    auto [q, e] = *it;
    if (e == 1) {
      rev.emplace_back(m_->to[q][x], 1);
      x = m_->out[q][x];
    } else {
      int y = m_->out_inv[q][x];  // q^{-1}(x)
      rev.emplace_back(m_->to[q][y], -1);
      x = y;
    }
  }
  for (auto it = rev.rbegin(); it != rev.rend(); ++it)
    child.push_reduced(it->first, it->second);
  return child;
}

std::string ElementWord::apply(const std::string& vertex) const {
  ElementWord g = *this;
  std::string outw;
  outw.reserve(vertex.size());
  for (char c : vertex) {
    int x = c - '0';
    if (x < 0 || x >= m_->d) throw UnknownName("vertex letter out of range");
    outw.push_back(static_cast<char>('0' + g.image(x)));
    g = g.section(x);
  }
  return outw;
}

ElementWord ElementWord::section_at(const std::string& vertex) const {
  ElementWord g = *this;
  for (char c : vertex) g = g.section(c - '0');
  return g;
}

std::string ElementWord::key() const {
  std::ostringstream os;
  for (auto& [q, e] : letters_) os << (e == 1 ? '+' : '-') << q << '.';
  return os.str();
}

std::string ElementWord::display() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [q, e] : letters_) {
    if (!first) os << ' ';
    first = false;
    os << m_->state_names[q];
    if (e == -1) os << "^-1";
  }
  return os.str();
}

bool ElementWord::is_identity(std::size_t budget) const {
  std::unordered_set<std::string> seen;
  std::vector<ElementWord> stack{*this};
  seen.insert(key());
  while (!stack.empty()) {
    ElementWord g = std::move(stack.back());
    stack.pop_back();
    for (int x = 0; x < m_->d; ++x)
      if (g.image(x) != x) return false;
    for (int x = 0; x < m_->d; ++x) {
      ElementWord s = g.section(x);
      if (seen.insert(s.key()).second) {
        if (seen.size() > budget)
          throw BudgetExceeded("word problem memo exceeded budget");
        stack.push_back(std::move(s));
      }
    }
  }
  return true;
}

std::string ElementWord::canonical_key(std::size_t budget) const {
  // Build the initial automaton of the section closure, minimize it, and
  // serialize with canonical BFS numbering from the initial state.
  std::unordered_map<std::string, int> index;
  std::vector<ElementWord> words{*this};
  index[key()] = 0;
  std::vector<std::vector<int>> tr, perm;
  for (std::size_t i = 0; i < words.size(); ++i) {
    ElementWord g = words[i];  // copy: words may reallocate below
    std::vector<int> row(m_->d), p(m_->d);
    for (int x = 0; x < m_->d; ++x) {
      p[x] = g.image(x);
      ElementWord s = g.section(x);
      auto [it, fresh] = index.try_emplace(s.key(), (int)words.size());
      if (fresh) {
        if (words.size() >= budget)
          throw BudgetExceeded("section closure exceeded budget");
        words.push_back(std::move(s));
      }
      row[x] = it->second;
    }
    tr.push_back(std::move(row));
    perm.push_back(std::move(p));
  }
  const int n = static_cast<int>(words.size());
  // Minimize: initial partition by permutation row.
  std::vector<int> cls(n);
  {
    std::map<std::vector<int>, int> by_perm;
    for (int q = 0; q < n; ++q) {
      auto [it, fresh] = by_perm.try_emplace(perm[q], (int)by_perm.size());
      cls[q] = it->second;
    }
  }
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> refine;
    std::vector<int> next(n);
    for (int q = 0; q < n; ++q) {
      std::vector<int> sig(m_->d);
      for (int x = 0; x < m_->d; ++x) sig[x] = cls[tr[q][x]];
      auto [it, fresh] =
          refine.try_emplace({cls[q], std::move(sig)}, (int)refine.size());
      next[q] = it->second;
    }
    if (next == cls) break;
    cls = next;
  }
  int k = 1 + *std::max_element(cls.begin(), cls.end());
  std::vector<std::vector<int>> qtr(k), qperm(k);
  std::vector<char> done(k, 0);
  for (int q = 0; q < n; ++q) {
    int c = cls[q];
    if (done[c]) continue;
    done[c] = 1;
    qperm[c] = perm[q];
    qtr[c].resize(m_->d);
    for (int x = 0; x < m_->d; ++x) qtr[c][x] = cls[tr[q][x]];
  }
  // BFS canonical numbering from the class of the initial word.
  std::vector<int> order(k, -1), bfs;
  order[cls[0]] = 0;
  bfs.push_back(cls[0]);
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (int x = 0; x < m_->d; ++x) {
      int t = qtr[bfs[i]][x];
      if (order[t] < 0) {
        order[t] = static_cast<int>(bfs.size());
        bfs.push_back(t);
      }
    }
  }
  std::ostringstream os;
  for (int c : bfs) {
    for (int x = 0; x < m_->d; ++x)
      os << qperm[c][x] << ',' << order[qtr[c][x]] << ';';
  }
  return os.str();
}

bool ElementWord::same_element(const ElementWord& other,
                               std::size_t budget) const {
  if (m_->invertible) return (*this * other.inverse()).is_identity(budget);
  return canonical_key(budget) == other.canonical_key(budget);
}

std::int64_t ElementWord::count_fixed(int n) const {
  std::map<std::pair<std::string, int>, std::int64_t> memo;
  struct Rec {
    std::map<std::pair<std::string, int>, std::int64_t>& memo;
    std::int64_t run(const ElementWord& g, int lvl) {
      if (lvl == 0) return 1;
      auto mkey = std::make_pair(g.key(), lvl);
      auto it = memo.find(mkey);
      if (it != memo.end()) return it->second;
      std::int64_t total = 0;
      for (int x = 0; x < g.machine()->d; ++x)
        if (g.image(x) == x) total += run(g.section(x), lvl - 1);
      memo[mkey] = total;
      return total;
    }
  } rec{memo};
  return rec.run(*this, n);
}

Rat ElementWord::trace_estimate(int n) const {
  Rat den = 1;
  for (int i = 0; i < n; ++i) den *= m_->d;
  Rat q(count_fixed(n));
  q /= den;
  q.canonicalize();
  return q;
}

bool acts_trivially_up_to(const ElementWord& g, int n) {
  // Acting trivially on level n implies the same for shallower levels.
  std::vector<ElementWord> layer{g};
  for (int lvl = 0; lvl < n; ++lvl) {
    std::unordered_set<std::string> dedup;
    std::vector<ElementWord> next;
    for (const auto& h : layer) {
      for (int x = 0; x < h.machine()->d; ++x) {
        if (h.image(x) != x) return false;
        ElementWord s = h.section(x);
        if (dedup.insert(s.key()).second) next.push_back(std::move(s));
      }
    }
    layer = std::move(next);
  }
  return true;
}

namespace {

// Nodes reachable from some directed cycle of the section graph.
// Kahn-style peeling: repeatedly drop nodes with no incoming edge.
std::vector<int> eventual_core(const std::vector<std::vector<int>>& succ) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> indeg(n, 0);
  for (const auto& row : succ)
    for (int t : row) ++indeg[t];
  std::queue<int> q;
  std::vector<char> dead(n, 0);
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) q.push(i);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    dead[v] = 1;
    for (int t : succ[v])
      if (--indeg[t] == 0) q.push(t);
  }
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (!dead[i]) keep.push_back(i);
  return keep;
}

struct ElementSet {
  // canonical_key -> shortest word
  std::map<std::string, ElementWord> reps;
  std::size_t budget;
  bool add(const ElementWord& w) {
    std::string ck = w.canonical_key(budget);
    auto it = reps.find(ck);
    if (it == reps.end()) {
      reps.emplace(ck, w);
      return true;
    }
    if (w.length() < it->second.length()) it->second = w;
    return false;
  }
};

// Section closure of `seed` (as group elements), then its eventual core.
std::map<std::string, ElementWord> core_of_closure(
    const std::vector<ElementWord>& seed, std::size_t cap,
    std::size_t budget) {
  std::map<std::string, int> index;
  std::vector<ElementWord> nodes;
  std::vector<std::string> keys;
  auto intern = [&](const ElementWord& w) {
    std::string ck = w.canonical_key(budget);
    auto [it, fresh] = index.try_emplace(ck, (int)nodes.size());
    if (fresh) {
      if (nodes.size() >= cap)
        throw NotContractingWithinCap(
            "section closure exceeded element cap");
      nodes.push_back(w);
      keys.push_back(ck);
    } else if (w.length() < nodes[it->second].length()) {
      nodes[it->second] = w;
    }
    return it->second;
  };
  for (const auto& w : seed) intern(w);
  std::vector<std::vector<int>> succ;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ElementWord g = nodes[i];
    std::vector<int> row;
    for (int x = 0; x < g.machine()->d; ++x) row.push_back(intern(g.section(x)));
    succ.push_back(std::move(row));
  }
  // intern() may have appended nodes after succ rows were built; finish them.
  while (succ.size() < nodes.size()) {
    ElementWord g = nodes[succ.size()];
    std::vector<int> row;
    for (int x = 0; x < g.machine()->d; ++x) row.push_back(intern(g.section(x)));
    succ.push_back(std::move(row));
  }
  std::map<std::string, ElementWord> out;
  for (int i : eventual_core(succ)) out.emplace(keys[i], nodes[i]);
  return out;
}

}  // namespace

std::vector<ElementWord> nucleus(MachinePtr m, std::size_t cap) {
  const std::size_t budget = 1u << 18;
  if (!m->invertible)
    throw MalformedTable("nucleus requires an invertible machine");
  std::vector<ElementWord> base{ElementWord::identity(m)};
  for (const auto& name : m->state_names) {
    base.push_back(ElementWord::generator(m, name, 1));
    base.push_back(ElementWord::generator(m, name, -1));
  }
  std::map<std::string, ElementWord> cur = core_of_closure(base, cap, budget);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<ElementWord> seed;
    for (auto& [k1, g] : cur)
      for (auto& [k2, h] : cur) seed.push_back(g * h);
    auto next = core_of_closure(seed, cap, budget);
    bool same = next.size() == cur.size();
    if (same)
      for (auto& [k, w] : next)
        if (!cur.count(k)) {
          same = false;
          break;
        }
    if (same) {
      std::vector<ElementWord> out;
      // identity first, then by word length / display
      std::vector<std::pair<std::pair<int, std::string>, ElementWord>> tmp;
      for (auto& [k, w] : next)
        tmp.push_back({{w.length(), w.display()}, w});
      std::sort(tmp.begin(), tmp.end(),
                [](auto& a, auto& b) { return a.first < b.first; });
      for (auto& [k, w] : tmp) out.push_back(w);
      return out;
    }
    cur = std::move(next);
  }
  throw NotContractingWithinCap("nucleus iteration did not stabilize");
}

GrowthResult cayley_ball(MachinePtr m, const std::vector<std::string>& gens,
                         int radius, std::size_t budget) {
  std::vector<ElementWord> moves;
  for (const auto& name : gens) {
    ElementWord g = ElementWord::generator(m, name, 1);
    moves.push_back(g);
    if (!(g * g).is_identity(budget))  // add inverse unless involution
      moves.push_back(g.inverse());
  }
  GrowthResult res;
  std::unordered_set<std::string> seen;
  ElementWord id = ElementWord::identity(m);
  seen.insert(id.canonical_key(budget));
  res.elements.push_back(id);
  res.sphere.push_back(1);
  std::vector<ElementWord> frontier{id};
  for (int r = 1; r <= radius; ++r) {
    std::vector<ElementWord> next;
    for (const auto& w : frontier) {
      for (const auto& g : moves) {
        ElementWord nw = w * g;
        if (seen.insert(nw.canonical_key(budget)).second) {
          next.push_back(nw);
          res.elements.push_back(nw);
        }
      }
    }
    res.sphere.push_back(static_cast<std::int64_t>(next.size()));
    frontier = std::move(next);
  }
  std::int64_t acc = 0;
  for (auto s : res.sphere) res.ball.push_back(acc += s);
  return res;
}

}  // namespace fractal
