#include "osmc/multicut.hpp"

#include <algorithm>

#include "osmc/union_find.hpp"

namespace osmc {

namespace {

// component label per vertex once cut_edges are removed
std::vector<int> label_components(const EmbeddedGraph& g, const std::vector<char>& removed) {
  UnionFind uf(g.n);
  for (int e = 0; e < g.m(); ++e) {
    if (!removed[e]) uf.unite(g.edges[e].u, g.edges[e].v);
  }
  std::vector<int> label(g.n);
  for (int v = 0; v < g.n; ++v) label[v] = uf.find(v);
  return label;
}

std::vector<char> removal_mask(const EmbeddedGraph& g, const std::vector<int>& cut_edges) {
  std::vector<char> removed(g.m(), 0);
  for (int e : cut_edges) {
    if (e < 0 || e >= g.m()) throw Error(ErrorCode::BadParams, "cut edge id out of range");
    removed[e] = 1;
  }
  return removed;
}

bool all_pairs_separated(const OSInstance& inst, const std::vector<int>& label) {
  for (const TerminalPair& p : inst.pairs) {
    if (label[p.s] == label[p.t]) return false;
  }
  return true;
}

}  // namespace

MulticutSolution extract_multicut(const ForestSolution& sol, const DualGraph& dual,
                                  const OSInstance& inst) {
  MulticutSolution cut;
  for (int e : sol.edges) {
    const DualEdge& de = dual.edges[e];
    if (de.kind != DualEdgeKind::External) cut.edges.push_back(de.primal);
  }
  std::sort(cut.edges.begin(), cut.edges.end());
  for (int e : cut.edges) cut.cost += inst.graph.edges[e].cost;

  cut.component = label_components(inst.graph, removal_mask(inst.graph, cut.edges));
  if (!all_pairs_separated(inst, cut.component)) {
    throw Error(ErrorCode::ExtractionNotSeparating,
                "forest image does not separate every pair");
  }
  return cut;
}

bool verify_multicut(const OSInstance& inst, const std::vector<int>& cut_edges) {
  std::vector<int> label = label_components(inst.graph, removal_mask(inst.graph, cut_edges));
  return all_pairs_separated(inst, label);
}

std::vector<int> minimalize(const OSInstance& inst, std::vector<int> cut_edges) {
  if (!verify_multicut(inst, cut_edges)) {
    throw Error(ErrorCode::NotAMulticut, "minimalize needs a separating edge set");
  }
  std::vector<int> order = cut_edges;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    long long ca = inst.graph.edges[a].cost;
    long long cb = inst.graph.edges[b].cost;
    return ca != cb ? ca > cb : a < b;
  });
  std::vector<char> removed = removal_mask(inst.graph, cut_edges);
  for (int e : order) {
    removed[e] = 0;
    std::vector<int> label = label_components(inst.graph, removed);
    if (!all_pairs_separated(inst, label)) removed[e] = 1;
  }
  std::vector<int> kept;
  for (int e = 0; e < inst.graph.m(); ++e) {
    if (removed[e]) kept.push_back(e);
  }
  return kept;
}

std::vector<bool> cut_dual_connectivity(const OSInstance& inst, const DualGraph& dual,
                                        const std::vector<int>& cut_edges) {
  std::vector<int> image = dual_edges_of(dual, cut_edges);
  std::vector<bool> connected(inst.k(), false);
  for (int i = 0; i < inst.k(); ++i) {
    auto [u_i, v_i] = dual.pair_terminals[i];
    UnionFind uf(dual.vertex_count());
    for (int e : image) uf.unite(dual.edges[e].a, dual.edges[e].b);
    for (const DualEdge& e : dual.edges) {
      if (e.kind != DualEdgeKind::External) continue;
      if (e.a == u_i || e.a == v_i || e.b == u_i || e.b == v_i) uf.unite(e.a, e.b);
    }
    connected[i] = uf.same(u_i, v_i);
  }
  return connected;
}

bool dual_image_acyclic(const DualGraph& dual, const std::vector<int>& cut_edges) {
  UnionFind uf(dual.vertex_count());
  for (int e : dual_edges_of(dual, cut_edges)) {
    if (!uf.unite(dual.edges[e].a, dual.edges[e].b)) return false;
  }
  return true;
}

}  // namespace osmc
