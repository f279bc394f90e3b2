#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "osmc/os_instance.hpp"
#include "osmc/steiner_forest.hpp"

namespace osmc {

enum class DualVertexKind { Face, Boundary, PairSideU, PairSideV };

// ref is the finite face id (Face), the primal boundary edge id (Boundary)
// or the 0-based pair index (PairSideU / PairSideV).
struct DualVertex {
  DualVertexKind kind = DualVertexKind::Face;
  int ref = -1;
};

enum class DualEdgeKind { Internal, Crossing, External };

struct DualEdge {
  int a = -1;
  int b = -1;
  DualEdgeKind kind = DualEdgeKind::Internal;
  long long cost = 0;
  int primal = -1;  // primal edge id; -1 for External
};

// The modified dual of an OS instance. One face vertex per finite face, one
// boundary vertex v_e per boundary edge (shared across pairs), and u_i / v_i
// per pair. Internal and Crossing edges carry the primal cost and are in
// bijection with the primal edge set; External edges carry cost
// N = sum of all primal costs. The dual is a plain weighted graph; it is in
// general not planar and no embedding is kept.
struct DualGraph {
  std::vector<DualVertex> vertices;
  std::vector<DualEdge> edges;
  long long N = 0;
  std::vector<std::pair<int, int>> pair_terminals;  // (u_i, v_i) vertex ids
  std::vector<int> dual_edge_of_primal;             // primal edge id -> dual edge id
  int internal_count = 0;
  int crossing_count = 0;
  int external_count = 0;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

// Steps: face vertices for every finite face; an Internal edge for every
// primal edge between two finite faces; u_i, v_i per pair with sides given
// by boundary_split; a boundary vertex and a Crossing edge for every
// boundary edge; an External edge (u_i, v_e) for every e on side_u of pair i
// and (v_i, v_e) for every e on side_v. Edge ids are assigned Internal
// first (ascending primal id), then Crossing (ascending primal id), then
// External (by pair, side_u in walk order, then side_v).
DualGraph build_dual(const OSInstance& inst);

// The primal edge a dual edge corresponds to; empty for External edges.
std::optional<int> primal_of(const DualGraph& dual, int dual_edge_id);

// Image of a primal edge set under the bijection, ascending dual edge ids.
std::vector<int> dual_edges_of(const DualGraph& dual, const std::vector<int>& primal_edges);

// View of the dual as a plain weighted graph for the forest solver.
WeightedGraph to_weighted(const DualGraph& dual);

// The (u_i, v_i) demand list for the forest solver.
std::vector<DemandPair> dual_demands(const DualGraph& dual);

}  // namespace osmc
