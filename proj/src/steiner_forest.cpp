#include "osmc/steiner_forest.hpp"

#include <algorithm>
#include <string>

#include "osmc/union_find.hpp"

namespace osmc {

bool Moat::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

namespace {

void check_inputs(const WeightedGraph& g, const std::vector<DemandPair>& demands) {
  for (const WeightedEdge& e : g.edges) {
    if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n) {
      throw Error(ErrorCode::BadParams, "edge endpoint out of range");
    }
    if (e.cost < 0) throw Error(ErrorCode::BadParams, "negative edge cost");
  }
  UnionFind cc(g.n);
  for (const WeightedEdge& e : g.edges) cc.unite(e.u, e.v);
  for (std::size_t i = 0; i < demands.size(); ++i) {
    const DemandPair& d = demands[i];
    if (d.first < 0 || d.first >= g.n || d.second < 0 || d.second >= g.n) {
      throw Error(ErrorCode::BadParams, "demand vertex out of range");
    }
    if (!cc.same(d.first, d.second)) {
      throw Error(ErrorCode::UnsatisfiableDemand,
                  "demand " + std::to_string(i) + " spans two graph components");
    }
  }
}

bool demands_connected(const WeightedGraph& g, const std::vector<DemandPair>& demands,
                       const std::vector<char>& in_use) {
  UnionFind uf(g.n);
  for (int e = 0; e < g.m(); ++e) {
    if (in_use[e]) uf.unite(g.edges[e].u, g.edges[e].v);
  }
  for (const DemandPair& d : demands) {
    if (!uf.same(d.first, d.second)) return false;
  }
  return true;
}

}  // namespace

ForestSolution gw_steiner_forest(const WeightedGraph& g,
                                 const std::vector<DemandPair>& demands) {
  check_inputs(g, demands);
  const int n = g.n;
  const int m = g.m();

  UnionFind uf(n);
  std::vector<std::vector<int>> comp_vertices(n);
  for (int v = 0; v < n; ++v) comp_vertices[v] = {v};
  std::vector<Rational> epoch_y(n, Rational(0));  // y of the current epoch, indexed by root
  std::vector<Rational> load(m, Rational(0));     // sum of y_S over history with e in delta(S)
  std::vector<char> active(n, 0);                 // per root

  ForestSolution sol;

  auto freeze_moat = [&](int root) {
    if (!epoch_y[root].is_zero()) {
      std::vector<int> vs = comp_vertices[root];
      std::sort(vs.begin(), vs.end());
      sol.moats.push_back(Moat{std::move(vs), epoch_y[root]});
      epoch_y[root] = Rational(0);
    }
  };

  // Merge every tight edge joining two components, ascending edge id, and
  // repeat until none is left.
  auto cascade = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int e = 0; e < m; ++e) {
        int ru = uf.find(g.edges[e].u);
        int rv = uf.find(g.edges[e].v);
        if (ru == rv) continue;
        if (load[e] != Rational(g.edges[e].cost)) continue;
        freeze_moat(ru);
        freeze_moat(rv);
        uf.unite(ru, rv);
        int r = uf.find(ru);
        int other = r == ru ? rv : ru;
        comp_vertices[r].insert(comp_vertices[r].end(), comp_vertices[other].begin(),
                                comp_vertices[other].end());
        comp_vertices[other].clear();
        sol.addition_order.push_back(e);
        changed = true;
      }
    }
  };

  auto recompute_active = [&]() {
    std::fill(active.begin(), active.end(), 0);
    bool any = false;
    for (const DemandPair& d : demands) {
      int ra = uf.find(d.first);
      int rb = uf.find(d.second);
      if (ra != rb) {
        active[ra] = active[rb] = 1;
        any = true;
      }
    }
    return any;
  };

  cascade();  // zero-cost edges are tight from the start
  while (recompute_active()) {
    // smallest growth that makes some edge tight
    bool found = false;
    Rational delta;
    for (int e = 0; e < m; ++e) {
      int ru = uf.find(g.edges[e].u);
      int rv = uf.find(g.edges[e].v);
      if (ru == rv) continue;
      int rate = active[ru] + active[rv];
      if (rate == 0) continue;
      Rational d = (Rational(g.edges[e].cost) - load[e]) / Rational(rate);
      if (!found || d < delta) {
        delta = d;
        found = true;
      }
    }
    if (!found) {
      // unreachable: demands were checked satisfiable
      throw Error(ErrorCode::UnsatisfiableDemand, "active component with no outgoing edge");
    }
    for (int v = 0; v < n; ++v) {
      if (uf.find(v) == v && active[v]) epoch_y[v] += delta;
    }
    for (int e = 0; e < m; ++e) {
      int ru = uf.find(g.edges[e].u);
      int rv = uf.find(g.edges[e].v);
      if (ru == rv) continue;
      int rate = active[ru] + active[rv];
      if (rate > 0) load[e] += Rational(rate) * delta;
    }
    cascade();
  }
  for (int v = 0; v < n; ++v) {
    if (uf.find(v) == v) freeze_moat(v);
  }

  sol.edges = reverse_delete(g, demands, sol.addition_order);
  for (int e : sol.edges) sol.cost += g.edges[e].cost;
  for (const Moat& moat : sol.moats) sol.dual_total += moat.y;
  return sol;
}

std::vector<int> reverse_delete(const WeightedGraph& g, const std::vector<DemandPair>& demands,
                                const std::vector<int>& addition_order) {
  std::vector<char> in_use(g.m(), 0);
  for (int e : addition_order) in_use[e] = 1;
  for (auto it = addition_order.rbegin(); it != addition_order.rend(); ++it) {
    in_use[*it] = 0;
    if (!demands_connected(g, demands, in_use)) in_use[*it] = 1;
  }
  std::vector<int> kept;
  for (int e = 0; e < g.m(); ++e) {
    if (in_use[e]) kept.push_back(e);
  }
  return kept;
}

bool verify_forest(const WeightedGraph& g, const std::vector<DemandPair>& demands,
                   const ForestSolution& sol) {
  std::vector<char> seen(g.m(), 0);
  UnionFind uf(g.n);
  long long cost = 0;
  for (int e : sol.edges) {
    if (e < 0 || e >= g.m() || seen[e]) return false;
    seen[e] = 1;
    if (!uf.unite(g.edges[e].u, g.edges[e].v)) return false;  // cycle
    cost += g.edges[e].cost;
  }
  if (cost != sol.cost) return false;
  for (const DemandPair& d : demands) {
    if (d.first < 0 || d.first >= g.n || d.second < 0 || d.second >= g.n) return false;
    if (!uf.same(d.first, d.second)) return false;
  }

  // dual feasibility: for every edge, the moats it crosses sum to at most
  // its cost
  Rational total(0);
  for (const Moat& moat : sol.moats) {
    if (moat.y < Rational(0)) return false;
    total += moat.y;
  }
  if (total != sol.dual_total) return false;
  for (const WeightedEdge& e : g.edges) {
    Rational sum(0);
    for (const Moat& moat : sol.moats) {
      if (moat.contains(e.u) != moat.contains(e.v)) sum += moat.y;
    }
    if (sum > Rational(e.cost)) return false;
  }

  // 2-approximation certificate
  return Rational(sol.cost) <= Rational(2) * total;
}

}  // namespace osmc
