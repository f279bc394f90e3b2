#include "osmc/planar_graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace osmc {

long long EmbeddedGraph::total_cost() const {
  long long sum = 0;
  for (const EdgeRecord& e : edges) sum += e.cost;
  return sum;
}

Dart EmbeddedGraph::face_next(Dart d) const {
  Dart r = dart_reverse(d);
  int v = dart_tail(r);
  const std::vector<Dart>& rot = rotation[v];
  int pos = rotation_pos[r];
  int prev = pos == 0 ? static_cast<int>(rot.size()) - 1 : pos - 1;
  return rot[prev];
}

EmbeddedGraph build_graph(int n, std::vector<EdgeRecord> edges,
                          std::vector<std::vector<Dart>> rotation) {
  if (n <= 0) throw Error(ErrorCode::BadParams, "vertex count must be positive");

  std::set<std::pair<int, int>> seen_pairs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeRecord& e = edges[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::BadParams, "edge " + std::to_string(i) + " endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop, "edge " + std::to_string(i) + " is a self-loop");
    }
    if (e.cost < 0) {
      throw Error(ErrorCode::BadParams, "edge " + std::to_string(i) + " has negative cost");
    }
    std::pair<int, int> key = std::minmax(e.u, e.v);
    if (!seen_pairs.insert(key).second) {
      throw Error(ErrorCode::ParallelEdge,
                  "duplicate edge between " + std::to_string(e.u) + " and " + std::to_string(e.v));
    }
  }

  const int m = static_cast<int>(edges.size());
  if (static_cast<int>(rotation.size()) != n) {
    throw Error(ErrorCode::MalformedRotation, "rotation must list every vertex");
  }

  EmbeddedGraph g;
  g.n = n;
  g.edges = std::move(edges);
  g.rotation = std::move(rotation);
  g.rotation_pos.assign(2 * m, -1);

  for (int v = 0; v < n; ++v) {
    const std::vector<Dart>& rot = g.rotation[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      Dart d = rot[i];
      if (d < 0 || d >= 2 * m) {
        throw Error(ErrorCode::MalformedRotation,
                    "dart " + std::to_string(d) + " out of range at vertex " + std::to_string(v));
      }
      if (g.dart_tail(d) != v) {
        throw Error(ErrorCode::MalformedRotation,
                    "dart " + std::to_string(d) + " listed at vertex " + std::to_string(v) +
                        " but its tail is " + std::to_string(g.dart_tail(d)));
      }
      if (g.rotation_pos[d] != -1) {
        throw Error(ErrorCode::MalformedRotation, "dart " + std::to_string(d) + " listed twice");
      }
      g.rotation_pos[d] = static_cast<int>(i);
    }
  }
  for (Dart d = 0; d < 2 * m; ++d) {
    if (g.rotation_pos[d] == -1) {
      throw Error(ErrorCode::MalformedRotation, "dart " + std::to_string(d) + " missing");
    }
  }

  // connectivity
  std::vector<char> reached(n, 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (Dart d : g.rotation[v]) {
      int w = g.dart_head(d);
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != n) throw Error(ErrorCode::Disconnected, "graph is not connected");

  return g;
}

std::vector<Face> enumerate_faces(const EmbeddedGraph& g) {
  const int total = 2 * g.m();
  std::vector<Face> faces;
  if (total == 0) {
    // single vertex: one face covering the whole sphere
    faces.push_back(Face{0, {}});
  } else {
    std::vector<char> visited(total, 0);
    for (Dart start = 0; start < total; ++start) {
      if (visited[start]) continue;
      Face f;
      f.id = static_cast<int>(faces.size());
      Dart d = start;
      do {
        visited[d] = 1;
        f.darts.push_back(d);
        d = g.face_next(d);
      } while (d != start);
      faces.push_back(std::move(f));
    }
  }
  long long euler = static_cast<long long>(g.n) - g.m() + static_cast<long long>(faces.size());
  if (euler != 2) {
    throw Error(ErrorCode::EulerViolation,
                "face traversal found " + std::to_string(faces.size()) +
                    " faces; n - m + f = " + std::to_string(euler) +
                    " (rotation system is not planar)");
  }
  return faces;
}

const Face& outer_face(const EmbeddedGraph& g, const std::vector<Face>& faces, Dart marker) {
  if (marker < 0 || marker >= 2 * g.m()) {
    throw Error(ErrorCode::InvalidMarker, "marker dart " + std::to_string(marker) + " out of range");
  }
  for (const Face& f : faces) {
    if (std::find(f.darts.begin(), f.darts.end(), marker) != f.darts.end()) return f;
  }
  throw Error(ErrorCode::InvalidMarker, "marker dart not on any face");
}

bool check_biconnected(const EmbeddedGraph& g) {
  if (g.n < 3) return false;

  // iterative Hopcroft-Tarjan articulation search
  std::vector<int> depth(g.n, -1), low(g.n, 0), parent(g.n, -1), iter(g.n, 0);
  int root_children = 0;
  std::vector<int> stack{0};
  depth[0] = 0;
  low[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    if (iter[v] < static_cast<int>(g.rotation[v].size())) {
      Dart d = g.rotation[v][iter[v]++];
      int w = g.dart_head(d);
      if (depth[w] == -1) {
        depth[w] = depth[v] + 1;
        low[w] = depth[w];
        parent[w] = v;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], depth[w]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        int p = stack.back();
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= depth[p]) return false;  // p is a cut vertex
      }
    }
  }
  return root_children <= 1;
}

}  // namespace osmc
