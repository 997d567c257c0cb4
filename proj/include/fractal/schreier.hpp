#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fractal/catalog.hpp"
#include "fractal/element.hpp"

namespace fractal {

struct LabeledEdge {
  int src = 0, dst = 0;
  std::string label;
  bool operator==(const LabeledEdge&) const = default;
};

struct LabeledGraph {
  std::vector<std::string> vertices;
  std::vector<LabeledEdge> edges;
  int marked = -1;
  int find_vertex(const std::string& name) const;
};

// Level-n action graph: vertices are words of length n (first letter most
// significant in the index), one edge (v, g v, g) per designated generator,
// plus a reversed g'-edge for generators that are not involutions.
LabeledGraph level_graph(const GroupSpec& spec, int n);

bool is_connected(const LabeledGraph& g);

// Incident generator labels counted once per vertex (loops once).
std::vector<int> degrees(const LabeledGraph& g);

std::string export_dot(const LabeledGraph& g);
std::string export_csv(const LabeledGraph& g);

// Canonical string of the deterministically-labeled graph seen from `root`
// (unique out-edge per label at every vertex). Equal strings <=> rooted
// label-preserving isomorphism.
std::string canonical_rooted(const LabeledGraph& g, int root);
bool isomorphic_rooted(const LabeledGraph& a, const LabeledGraph& b);
bool isomorphic(const LabeledGraph& a, const LabeledGraph& b);

// Edge/vertex replacement rule for the classic level graphs: relabel
// b->d, c->b, d->c, then blow every a-edge u-v up to u-a-p-{b,c}-q-a-v
// with d-loops at the two fresh vertices.
LabeledGraph substitution_expand(const LabeledGraph& gamma_n);

// r-ball around the vertex following the boundary point xi (the prefix is
// repeated periodically), in Γ_n for n large enough that the ball
// stabilizes; detected by rooted isomorphism of consecutive levels.
struct BoundaryBall {
  LabeledGraph ball;
  int level = 0;  // level at which the ball stabilized
};
BoundaryBall boundary_ball(const GroupSpec& spec, const std::string& xi_prefix,
                           int radius, int level_cap = 16);

// Induced subgraph of the undirected r-ball around `center`.
LabeledGraph graph_ball(const LabeledGraph& g, int center, int radius);

struct GrowthTable {
  std::vector<std::int64_t> ball;  // gamma(0..r)
};

// Word-metric ball of the group itself; graph vertices carry shortest words.
struct CayleyBall {
  GrowthTable growth;
  LabeledGraph graph;
};
CayleyBall cayley_ball_graph(const GroupSpec& spec, int radius,
                             std::size_t budget = 1u << 20);

std::string growth_csv(const GrowthTable& t);

}  // namespace fractal
