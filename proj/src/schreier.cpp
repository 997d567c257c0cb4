#include "fractal/schreier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace fractal {

int LabeledGraph::find_vertex(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<std::string> level_words(int d, int n) {
  std::vector<std::string> words;
  std::int64_t count = 1;
  for (int i = 0; i < n; ++i) count *= d;
  words.reserve(count);
  for (std::int64_t v = 0; v < count; ++v) {
    std::string w(n, '0');
    std::int64_t rest = v;
    for (int i = n - 1; i >= 0; --i) {  // first letter most significant
      w[i] = static_cast<char>('0' + rest % d);
      rest /= d;
    }
    words.push_back(w);
  }
  return words;
}

int word_index(const std::string& w, int d) {
  int idx = 0;
  for (char c : w) idx = idx * d + (c - '0');
  return idx;
}

}  // namespace

LabeledGraph level_graph(const GroupSpec& spec, int n) {
  const int d = spec.machine->d;
  LabeledGraph g;
  g.vertices = level_words(d, n);
  for (const auto& name : spec.generators) {
    ElementWord gen = spec.gen(name);
    bool involution = (gen * gen).is_identity();
    for (int v = 0; v < (int)g.vertices.size(); ++v) {
      int w = word_index(gen.apply(g.vertices[v]), d);
      g.edges.push_back({v, w, name});
      if (!involution) {
        int u = word_index(gen.inverse().apply(g.vertices[v]), d);
        g.edges.push_back({v, u, name + "'"});
      }
    }
  }
  return g;
}

bool is_connected(const LabeledGraph& g) {
  if (g.vertices.empty()) return true;
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (const auto& e : g.edges) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  std::vector<char> seen(g.vertices.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  std::size_t cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int t : adj[v])
      if (!seen[t]) {
        seen[t] = 1;
        ++cnt;
        q.push(t);
      }
  }
  return cnt == g.vertices.size();
}

std::vector<int> degrees(const LabeledGraph& g) {
  // One out-edge per (vertex, label); loops counted once.
  std::vector<int> deg(g.vertices.size(), 0);
  for (const auto& e : g.edges) ++deg[e.src];
  return deg;
}

std::string export_dot(const LabeledGraph& g) {
  std::ostringstream os;
  os << "digraph schreier {\n";
  for (int v = 0; v < (int)g.vertices.size(); ++v) {
    os << "  v" << v << " [label=\"" << g.vertices[v] << "\"";
    if (v == g.marked) os << " shape=doublecircle";
    os << "];\n";
  }
  for (const auto& e : g.edges)
    os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.label
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string export_csv(const LabeledGraph& g) {
  std::ostringstream os;
  os << "src,dst,label\n";
  for (const auto& e : g.edges)
    os << g.vertices[e.src] << "," << g.vertices[e.dst] << "," << e.label
       << "\n";
  return os.str();
}

namespace {

// out[v][label] -> target; unique per label by Schreier determinism.
std::map<int, std::map<std::string, int>> out_map(const LabeledGraph& g) {
  std::map<int, std::map<std::string, int>> out;
  for (const auto& e : g.edges) {
    auto [it, fresh] = out[e.src].try_emplace(e.label, e.dst);
    if (!fresh && it->second != e.dst)
      throw PatternMismatch("vertex has two distinct edges with one label");
  }
  return out;
}

std::vector<std::string> label_set(const LabeledGraph& g) {
  std::set<std::string> labels;
  for (const auto& e : g.edges) labels.insert(e.label);
  return {labels.begin(), labels.end()};
}

}  // namespace

std::string canonical_rooted(const LabeledGraph& g, int root) {
  auto out = out_map(g);
  auto labels = label_set(g);
  std::vector<int> order(g.vertices.size(), -1), bfs;
  order[root] = 0;
  bfs.push_back(root);
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int v = bfs[i];
    for (const auto& l : labels) {
      auto it = out[v].find(l);
      if (it == out[v].end()) continue;
      if (order[it->second] < 0) {
        order[it->second] = static_cast<int>(bfs.size());
        bfs.push_back(it->second);
      }
    }
  }
  std::ostringstream os;
  for (const auto& l : labels) os << l << "|";
  os << ";";
  for (int v : bfs) {
    for (const auto& l : labels) {
      auto it = out[v].find(l);
      if (it == out[v].end())
        os << "-";
      else
        os << order[it->second];
      os << ",";
    }
    os << ";";
  }
  os << "#" << (g.vertices.size() - bfs.size());  // unreachable remainder
  return os.str();
}

bool isomorphic_rooted(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.marked < 0 || b.marked < 0)
    throw PatternMismatch("rooted isomorphism needs marked vertices");
  if (a.vertices.size() != b.vertices.size()) return false;
  return canonical_rooted(a, a.marked) == canonical_rooted(b, b.marked);
}

bool isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.vertices.size() != b.vertices.size() ||
      a.edges.size() != b.edges.size())
    return false;
  if (a.vertices.empty()) return true;
  std::string ca = canonical_rooted(a, 0);
  for (int r = 0; r < (int)b.vertices.size(); ++r)
    if (canonical_rooted(b, r) == ca) return true;
  return false;
}

LabeledGraph substitution_expand(const LabeledGraph& gamma_n) {
  // Collect the undirected simple view and check the level-graph pattern.
  auto labels = label_set(gamma_n);
  for (const auto& l : labels)
    if (l != "a" && l != "b" && l != "c" && l != "d")
      throw PatternMismatch("unexpected edge label '" + l + "'");
  const int n = static_cast<int>(gamma_n.vertices.size());
  std::set<std::tuple<int, int, std::string>> und;
  for (const auto& e : gamma_n.edges)
    und.insert({std::min(e.src, e.dst), std::max(e.src, e.dst), e.label});
  std::vector<int> a_partner(n, -1);
  std::vector<std::map<std::string, int>> incident(n);
  for (const auto& [u, v, l] : und) {
    if (l == "a") {
      if (u == v) throw PatternMismatch("a-loop in level graph");
      if (a_partner[u] != -1 || a_partner[v] != -1)
        throw PatternMismatch("vertex with two a-edges");
      a_partner[u] = v;
      a_partner[v] = u;
    }
    ++incident[u][l];
    if (u != v) ++incident[v][l];
  }
  for (int v = 0; v < n; ++v) {
    if (a_partner[v] < 0) throw PatternMismatch("vertex without a-edge");
    for (const auto& l : {"b", "c", "d"})
      if (incident[v][l] != 1)
        throw PatternMismatch(std::string("vertex needs exactly one ") + l +
                              "-edge");
  }

  LabeledGraph out;
  out.vertices = gamma_n.vertices;
  out.marked = gamma_n.marked;
  auto add_undirected = [&out](int u, int v, const std::string& l) {
    out.edges.push_back({u, v, l});
    if (u != v) out.edges.push_back({v, u, l});
  };
  static const std::map<std::string, std::string> relabel{
      {"b", "d"}, {"c", "b"}, {"d", "c"}};
  for (const auto& [u, v, l] : und) {
    if (l != "a") add_undirected(u, v, relabel.at(l));
  }
  // a-edge u-v  ~>  u -a- p -{b,c}- q -a- v with d-loops at p and q.
  for (const auto& [u, v, l] : und) {
    if (l != "a") continue;
    int p = static_cast<int>(out.vertices.size());
    out.vertices.push_back(gamma_n.vertices[u] + "*");
    int q = static_cast<int>(out.vertices.size());
    out.vertices.push_back(gamma_n.vertices[v] + "*");
    add_undirected(u, p, "a");
    add_undirected(q, v, "a");
    add_undirected(p, q, "b");
    add_undirected(p, q, "c");
    add_undirected(p, p, "d");
    add_undirected(q, q, "d");
  }
  return out;
}

LabeledGraph graph_ball(const LabeledGraph& g, int center, int radius) {
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (const auto& e : g.edges) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  std::vector<int> dist(g.vertices.size(), -1);
  std::queue<int> q;
  dist[center] = 0;
  q.push(center);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (dist[v] == radius) continue;
    for (int t : adj[v])
      if (dist[t] < 0) {
        dist[t] = dist[v] + 1;
        q.push(t);
      }
  }
  LabeledGraph ball;
  std::vector<int> remap(g.vertices.size(), -1);
  for (int v = 0; v < (int)g.vertices.size(); ++v)
    if (dist[v] >= 0) {
      remap[v] = static_cast<int>(ball.vertices.size());
      ball.vertices.push_back(g.vertices[v]);
    }
  for (const auto& e : g.edges)
    if (remap[e.src] >= 0 && remap[e.dst] >= 0)
      ball.edges.push_back({remap[e.src], remap[e.dst], e.label});
  ball.marked = remap[center];
  return ball;
}

BoundaryBall boundary_ball(const GroupSpec& spec, const std::string& xi_prefix,
                           int radius, int level_cap) {
  if (xi_prefix.empty())
    throw PatternMismatch("boundary point prefix must be nonempty");
  auto xi = [&](int n) {
    std::string w;
    while ((int)w.size() < n) w += xi_prefix;
    return w.substr(0, n);
  };
  LabeledGraph prev;
  bool have_prev = false;
  for (int n = radius + 1; n <= level_cap; ++n) {
    LabeledGraph gn = level_graph(spec, n);
    gn.marked = word_index(xi(n), spec.machine->d);
    LabeledGraph ball = graph_ball(gn, gn.marked, radius);
    if (have_prev && isomorphic_rooted(prev, ball))
      return {ball, n};
    prev = std::move(ball);
    have_prev = true;
  }
  throw StabilizationNotReached("boundary ball did not stabilize by level " +
                                std::to_string(level_cap));
}

CayleyBall cayley_ball_graph(const GroupSpec& spec, int radius,
                             std::size_t budget) {
  GrowthResult res =
      cayley_ball(spec.machine, spec.generators, radius, budget);
  CayleyBall out;
  out.growth.ball = res.ball;
  std::map<std::string, int> index;
  for (int i = 0; i < (int)res.elements.size(); ++i) {
    out.graph.vertices.push_back(res.elements[i].display());
    index[res.elements[i].canonical_key(budget)] = i;
  }
  out.graph.marked = 0;
  for (int i = 0; i < (int)res.elements.size(); ++i) {
    for (const auto& gname : spec.generators) {
      ElementWord w = res.elements[i] * spec.gen(gname);
      auto it = index.find(w.canonical_key(budget));
      if (it != index.end())
        out.graph.edges.push_back({i, it->second, gname});
    }
  }
  return out;
}

std::string growth_csv(const GrowthTable& t) {
  std::ostringstream os;
  os << "radius,ball\n";
  for (std::size_t r = 0; r < t.ball.size(); ++r)
    os << r << "," << t.ball[r] << "\n";
  return os.str();
}

}  // namespace fractal
