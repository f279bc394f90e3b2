#pragma once

#include <vector>

#include "osmc/error.hpp"

namespace osmc {

// Undirected edge with a nonnegative integer cost. The edge id is its
// position in EmbeddedGraph::edges.
struct EdgeRecord {
  int u = 0;
  int v = 0;
  long long cost = 0;
};

// A dart is one of the two orientations of an edge, encoded as 2*edge + dir.
// dir 0 runs u -> v as stored in the EdgeRecord, dir 1 runs v -> u.
using Dart = int;

constexpr Dart make_dart(int edge, int dir) { return 2 * edge + dir; }
constexpr int dart_edge(Dart d) { return d >> 1; }
constexpr int dart_dir(Dart d) { return d & 1; }
constexpr Dart dart_reverse(Dart d) { return d ^ 1; }

// Connected simple graph with a combinatorial embedding: rotation[v] lists
// the darts leaving v in anticlockwise order. Immutable once built; all
// operations on it are pure.
struct EmbeddedGraph {
  int n = 0;
  std::vector<EdgeRecord> edges;
  std::vector<std::vector<Dart>> rotation;
  // Position of each dart within rotation[dart_tail(dart)]; filled by build_graph.
  std::vector<int> rotation_pos;

  int m() const { return static_cast<int>(edges.size()); }

  int dart_tail(Dart d) const {
    const EdgeRecord& e = edges[dart_edge(d)];
    return dart_dir(d) == 0 ? e.u : e.v;
  }
  int dart_head(Dart d) const {
    const EdgeRecord& e = edges[dart_edge(d)];
    return dart_dir(d) == 0 ? e.v : e.u;
  }
  int other_end(int edge, int vertex) const {
    const EdgeRecord& e = edges[edge];
    return e.u == vertex ? e.v : e.u;
  }

  long long total_cost() const;

  // Dart after d along the face on its left: the rotation predecessor of
  // reverse(d) at the head of d.
  Dart face_next(Dart d) const;
};

// Closed walk of darts tracing one face; starts at the smallest dart code.
struct Face {
  int id = 0;
  std::vector<Dart> darts;
};

// Validates and freezes an embedded graph. Rejects self-loops, parallel
// edges, rotations that miss or repeat darts, and disconnected graphs.
EmbeddedGraph build_graph(int n, std::vector<EdgeRecord> edges,
                          std::vector<std::vector<Dart>> rotation);

// Orbits of the face-successor permutation; every dart lands in exactly one
// face. Throws EulerViolation when n - m + f != 2, which signals a rotation
// system that is not a sphere embedding.
std::vector<Face> enumerate_faces(const EmbeddedGraph& g);

// The face whose boundary contains the marker dart. Which face is "outer"
// is purely a designation made by the caller.
const Face& outer_face(const EmbeddedGraph& g, const std::vector<Face>& faces, Dart marker);

// True iff the graph has at least three vertices and no cut vertex.
bool check_biconnected(const EmbeddedGraph& g);

}  // namespace osmc
