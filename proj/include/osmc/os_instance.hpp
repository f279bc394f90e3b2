#pragma once

#include <vector>

#include "osmc/planar_graph.hpp"

namespace osmc {

// Terminal pair (s_i, t_i). Pair indices are 0-based in code; messages and
// labels use the 1-based i of u_i / v_i.
struct TerminalPair {
  int s = 0;
  int t = 0;
};

// Edge ids of the two boundary portions a pair splits the outer cycle into:
// side_u holds the edges met walking anticlockwise from s to t, side_v the
// rest. Both are nonempty and together cover the boundary exactly once.
struct BoundarySplit {
  std::vector<int> side_u;
  std::vector<int> side_v;
};

// Embedded graph plus terminal pairs, with every terminal on the outer
// boundary. The boundary is stored in anticlockwise order starting at the
// marker dart's tail; "anticlockwise" is by definition the stored order.
struct OSInstance {
  EmbeddedGraph graph;
  std::vector<Face> faces;
  int outer_face_id = -1;
  std::vector<int> boundary_vertices;  // simple cycle
  std::vector<int> boundary_edges;     // boundary_edges[j] joins boundary_vertices[j], [j+1]
  std::vector<TerminalPair> pairs;
  std::vector<int> face_of_dart;   // dart -> face id
  std::vector<int> boundary_pos;   // vertex -> index in boundary_vertices, or -1

  int boundary_length() const { return static_cast<int>(boundary_vertices.size()); }
  int k() const { return static_cast<int>(pairs.size()); }
  bool on_boundary(int vertex) const { return boundary_pos[vertex] >= 0; }
};

// Checks biconnectivity, enumerates faces, designates the marker's face as
// outer and validates the pairs. Rejects terminals off the boundary,
// degenerate pairs (s == t) and duplicate pairs.
OSInstance validate_os_instance(EmbeddedGraph graph, Dart outer_marker,
                                std::vector<TerminalPair> pairs);

BoundarySplit boundary_split(const OSInstance& inst, int pair_index);

}  // namespace osmc
