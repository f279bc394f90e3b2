#include "osmc/dual_graph.hpp"

#include <algorithm>
#include <string>

namespace osmc {

DualGraph build_dual(const OSInstance& inst) {
  const EmbeddedGraph& g = inst.graph;
  const int m = g.m();

  DualGraph dual;
  dual.N = g.total_cost();
  dual.dual_edge_of_primal.assign(m, -1);

  std::vector<int> face_vertex(inst.faces.size(), -1);
  for (const Face& f : inst.faces) {
    if (f.id == inst.outer_face_id) continue;
    face_vertex[f.id] = dual.vertex_count();
    dual.vertices.push_back(DualVertex{DualVertexKind::Face, f.id});
  }

  std::vector<int> boundary_vertex(m, -1);
  for (int e : inst.boundary_edges) {
    boundary_vertex[e] = dual.vertex_count();
    dual.vertices.push_back(DualVertex{DualVertexKind::Boundary, e});
  }

  for (int i = 0; i < inst.k(); ++i) {
    int u = dual.vertex_count();
    dual.vertices.push_back(DualVertex{DualVertexKind::PairSideU, i});
    int v = dual.vertex_count();
    dual.vertices.push_back(DualVertex{DualVertexKind::PairSideV, i});
    dual.pair_terminals.emplace_back(u, v);
  }

  // classify primal edges by the faces on their two sides
  std::vector<int> finite_side(m, -1);
  for (int e = 0; e < m; ++e) {
    int f0 = inst.face_of_dart[make_dart(e, 0)];
    int f1 = inst.face_of_dart[make_dart(e, 1)];
    if (f0 == f1) {
      // both sides on one face <=> bridge; excluded by biconnectivity
      throw Error(ErrorCode::BridgeDetected, "primal edge " + std::to_string(e) + " is a bridge");
    }
    if (f0 != inst.outer_face_id && f1 != inst.outer_face_id) {
      dual.dual_edge_of_primal[e] = dual.edge_count();
      dual.edges.push_back(
          DualEdge{face_vertex[f0], face_vertex[f1], DualEdgeKind::Internal, g.edges[e].cost, e});
      ++dual.internal_count;
    } else {
      finite_side[e] = f0 == inst.outer_face_id ? f1 : f0;
    }
  }

  for (int e = 0; e < m; ++e) {
    if (boundary_vertex[e] < 0) continue;
    dual.dual_edge_of_primal[e] = dual.edge_count();
    dual.edges.push_back(DualEdge{boundary_vertex[e], face_vertex[finite_side[e]],
                                  DualEdgeKind::Crossing, g.edges[e].cost, e});
    ++dual.crossing_count;
  }

  for (int i = 0; i < inst.k(); ++i) {
    BoundarySplit split = boundary_split(inst, i);
    auto [u_i, v_i] = dual.pair_terminals[i];
    for (int e : split.side_u) {
      dual.edges.push_back(DualEdge{u_i, boundary_vertex[e], DualEdgeKind::External, dual.N, -1});
      ++dual.external_count;
    }
    for (int e : split.side_v) {
      dual.edges.push_back(DualEdge{v_i, boundary_vertex[e], DualEdgeKind::External, dual.N, -1});
      ++dual.external_count;
    }
  }

  return dual;
}

std::optional<int> primal_of(const DualGraph& dual, int dual_edge_id) {
  if (dual_edge_id < 0 || dual_edge_id >= dual.edge_count()) {
    throw Error(ErrorCode::BadParams, "dual edge id out of range");
  }
  const DualEdge& e = dual.edges[dual_edge_id];
  if (e.kind == DualEdgeKind::External) return std::nullopt;
  return e.primal;
}

std::vector<int> dual_edges_of(const DualGraph& dual, const std::vector<int>& primal_edges) {
  std::vector<int> out;
  out.reserve(primal_edges.size());
  for (int e : primal_edges) {
    if (e < 0 || e >= static_cast<int>(dual.dual_edge_of_primal.size())) {
      throw Error(ErrorCode::BadParams, "primal edge id out of range");
    }
    out.push_back(dual.dual_edge_of_primal[e]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeightedGraph to_weighted(const DualGraph& dual) {
  WeightedGraph g;
  g.n = dual.vertex_count();
  g.edges.reserve(dual.edges.size());
  for (const DualEdge& e : dual.edges) g.edges.push_back(WeightedEdge{e.a, e.b, e.cost});
  return g;
}

std::vector<DemandPair> dual_demands(const DualGraph& dual) {
  std::vector<DemandPair> demands;
  demands.reserve(dual.pair_terminals.size());
  for (auto [u, v] : dual.pair_terminals) demands.emplace_back(u, v);
  return demands;
}

}  // namespace osmc
