#pragma once

#include <vector>

#include "osmc/dual_graph.hpp"
#include "osmc/os_instance.hpp"
#include "osmc/steiner_forest.hpp"

namespace osmc {

struct MulticutSolution {
  std::vector<int> edges;     // primal edge ids, ascending
  long long cost = 0;
  std::vector<int> component; // component label of each vertex in (V, E \ F)

  // separation certificate for pair i: the two labels differ
  bool separates(const OSInstance& inst, int pair_index) const {
    const TerminalPair& p = inst.pairs[pair_index];
    return component[p.s] != component[p.t];
  }
};

// Primal image of a Steiner forest: every Internal or Crossing forest edge
// contributes its primal edge, External edges contribute nothing. The result
// is verified to separate all pairs; a failure would mean the forest did not
// connect its demands and is treated as a broken invariant.
MulticutSolution extract_multicut(const ForestSolution& sol, const DualGraph& dual,
                                  const OSInstance& inst);

// True iff removing cut_edges disconnects every terminal pair.
bool verify_multicut(const OSInstance& inst, const std::vector<int>& cut_edges);

// Greedily drops edges (descending cost, ties ascending id) while the rest
// still separates every pair; the result is a minimal multicut.
std::vector<int> minimalize(const OSInstance& inst, std::vector<int> cut_edges);

// For each pair i: whether the dual image of cut_edges plus pair i's
// External edges connects u_i to v_i. Holds for every separating set; no
// claim is made for non-separating input.
std::vector<bool> cut_dual_connectivity(const OSInstance& inst, const DualGraph& dual,
                                        const std::vector<int>& cut_edges);

// Diagnostic: whether the dual image of cut_edges is acyclic.
bool dual_image_acyclic(const DualGraph& dual, const std::vector<int>& cut_edges);

}  // namespace osmc
