#include "osmc/os_instance.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace osmc {

OSInstance validate_os_instance(EmbeddedGraph graph, Dart outer_marker,
                                std::vector<TerminalPair> pairs) {
  if (!check_biconnected(graph)) {
    throw Error(ErrorCode::NotBiconnected, "instance graph must be biconnected");
  }

  OSInstance inst;
  inst.faces = enumerate_faces(graph);
  const Face& outer = outer_face(graph, inst.faces, outer_marker);
  inst.outer_face_id = outer.id;

  inst.face_of_dart.assign(2 * graph.m(), -1);
  for (const Face& f : inst.faces) {
    for (Dart d : f.darts) inst.face_of_dart[d] = f.id;
  }

  // boundary walk, rotated to start at the marker dart
  std::vector<Dart> walk = outer.darts;
  auto it = std::find(walk.begin(), walk.end(), outer_marker);
  std::rotate(walk.begin(), it, walk.end());

  inst.boundary_pos.assign(graph.n, -1);
  for (std::size_t j = 0; j < walk.size(); ++j) {
    int v = graph.dart_tail(walk[j]);
    if (inst.boundary_pos[v] != -1) {
      // cannot happen on a biconnected graph; kept as a hard check
      throw Error(ErrorCode::NotBiconnected, "outer boundary is not a simple cycle");
    }
    inst.boundary_pos[v] = static_cast<int>(j);
    inst.boundary_vertices.push_back(v);
    inst.boundary_edges.push_back(dart_edge(walk[j]));
  }

  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const TerminalPair& p = pairs[i];
    const std::string label = "pair " + std::to_string(i + 1);
    if (p.s < 0 || p.s >= graph.n || p.t < 0 || p.t >= graph.n) {
      throw Error(ErrorCode::BadParams, label + " terminal out of range");
    }
    if (p.s == p.t) {
      throw Error(ErrorCode::DegeneratePair, label + " has s = t = " + std::to_string(p.s));
    }
    if (inst.boundary_pos[p.s] < 0) {
      throw Error(ErrorCode::TerminalNotOnBoundary,
                  label + ": vertex " + std::to_string(p.s) + " is not on the outer boundary");
    }
    if (inst.boundary_pos[p.t] < 0) {
      throw Error(ErrorCode::TerminalNotOnBoundary,
                  label + ": vertex " + std::to_string(p.t) + " is not on the outer boundary");
    }
    if (!seen.insert(std::minmax(p.s, p.t)).second) {
      throw Error(ErrorCode::DuplicatePair, label + " repeats an earlier pair");
    }
  }

  inst.graph = std::move(graph);
  inst.pairs = std::move(pairs);
  return inst;
}

BoundarySplit boundary_split(const OSInstance& inst, int pair_index) {
  if (pair_index < 0 || pair_index >= inst.k()) {
    throw Error(ErrorCode::BadParams, "pair index out of range");
  }
  const TerminalPair& p = inst.pairs[pair_index];
  const int len = inst.boundary_length();
  const int ps = inst.boundary_pos[p.s];
  const int pt = inst.boundary_pos[p.t];

  BoundarySplit split;
  for (int j = ps; j != pt; j = (j + 1) % len) split.side_u.push_back(inst.boundary_edges[j]);
  for (int j = pt; j != ps; j = (j + 1) % len) split.side_v.push_back(inst.boundary_edges[j]);
  return split;
}

}  // namespace osmc
