#pragma once

#include <utility>
#include <vector>

#include "osmc/error.hpp"
#include "osmc/rational.hpp"

namespace osmc {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  long long cost = 0;
};

// Plain weighted graph; the solver is generic and knows nothing about duals.
struct WeightedGraph {
  int n = 0;
  std::vector<WeightedEdge> edges;
  int m() const { return static_cast<int>(edges.size()); }
};

using DemandPair = std::pair<int, int>;

// One dual variable y_S of the moat-growing run: the vertex set S (sorted)
// and the value it accumulated while S was a component.
struct Moat {
  std::vector<int> vertices;
  Rational y;

  bool contains(int v) const;
};

struct ForestSolution {
  std::vector<int> edges;           // ascending edge ids; acyclic, feasible
  long long cost = 0;
  std::vector<Moat> moats;          // dual certificate (empty for exact oracles)
  std::vector<int> addition_order;  // growth-phase additions, before pruning
  Rational dual_total;              // sum of all moat values
};

// Primal-dual 2-approximation for minimum-cost Steiner forest. A component
// is active while it separates some demand pair; all active components grow
// uniformly, edges are added the moment they go tight (ties in ascending
// edge id, merge cascades run to fixpoint before growth resumes), and the
// growth forest is pruned by reverse_delete. All event arithmetic is exact,
// so identical inputs give bit-identical solutions.
ForestSolution gw_steiner_forest(const WeightedGraph& graph,
                                 const std::vector<DemandPair>& demands);

// Scans edges in reverse addition order and drops every edge whose removal
// keeps all demands connected. The result is inclusion-minimal feasible.
std::vector<int> reverse_delete(const WeightedGraph& graph,
                                const std::vector<DemandPair>& demands,
                                const std::vector<int>& addition_order);

// True iff the solution is an acyclic edge set connecting every demand pair
// whose moats are a feasible dual with cost <= 2 * sum(y).
bool verify_forest(const WeightedGraph& graph, const std::vector<DemandPair>& demands,
                   const ForestSolution& solution);

}  // namespace osmc
