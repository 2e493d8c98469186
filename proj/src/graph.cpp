#include "kac/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>

namespace kac {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)), groups(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(b)] = a;
    --groups;
    return true;
  }
  std::vector<int> parent;
  int groups;
};

int component_count(const ColoredMultigraph& g) {
  UnionFind uf(g.vertices);
  for (const Edge& e : g.edges)
    if (e.u != e.v) uf.unite(e.u - 1, e.v - 1);
  return uf.groups;
}

// components of the spanning subgraph picked out by an edge-subset bitmask
int subset_components(const ColoredMultigraph& g, unsigned long mask) {
  UnionFind uf(g.vertices);
  for (size_t i = 0; i < g.edges.size(); ++i)
    if ((mask >> i) & 1u) {
      const Edge& e = g.edges[i];
      if (e.u != e.v) uf.unite(e.u - 1, e.v - 1);
    }
  return uf.groups;
}

constexpr size_t kSubsetEdgeLimit = 24;

void check_subset_budget(const ColoredMultigraph& g, const char* what) {
  if (g.edges.size() > kSubsetEdgeLimit)
    throw TooLarge(std::string(what) + " enumerates 2^" +
                   std::to_string(g.edges.size()) + " edge subsets");
}

// contract edge {u,v} (already removed from g): merge v into u, relabel
ColoredMultigraph contract(const ColoredMultigraph& g, int u, int v) {
  ColoredMultigraph h;
  h.vertices = g.vertices - 1;
  h.edges.reserve(g.edges.size());
  auto remap = [&](int w) {
    if (w == v) w = u;
    return w > v ? w - 1 : w;
  };
  for (const Edge& e : g.edges) {
    int a = remap(e.u), b = remap(e.v);
    h.edges.push_back({std::min(a, b), std::max(a, b), e.color});
  }
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

bool connected_without_last(const ColoredMultigraph& g, int u, int v) {
  UnionFind uf(g.vertices);
  for (size_t i = 0; i + 1 < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    if (e.u != e.v) uf.unite(e.u - 1, e.v - 1);
  }
  return uf.find(u - 1) == uf.find(v - 1);
}

BiPoly tutte_delcon(const ColoredMultigraph& g) {
  if (g.edges.empty()) return BiPoly::constant(1);
  const Edge e = g.edges.back();
  if (e.u == e.v) {
    ColoredMultigraph del = g;
    del.edges.pop_back();
    return BiPoly::y() * tutte_delcon(del);
  }
  if (!connected_without_last(g, e.u, e.v)) {
    ColoredMultigraph del = g;
    del.edges.pop_back();
    return BiPoly::x() * tutte_delcon(contract(del, e.u, e.v));
  }
  ColoredMultigraph del = g;
  del.edges.pop_back();
  return tutte_delcon(del) + tutte_delcon(contract(del, e.u, e.v));
}

BiPoly tutte_subsets(const ColoredMultigraph& g) {
  check_subset_budget(g, "tutte subset expansion");
  const int ke = component_count(g);
  BiPoly total;
  BiPoly xm1 = BiPoly::x() + BiPoly::constant(-1);
  BiPoly ym1 = BiPoly::y() + BiPoly::constant(-1);
  const unsigned long full = 1ul << g.edges.size();
  for (unsigned long mask = 0; mask < full; ++mask) {
    int ka = subset_components(g, mask);
    int sz = std::popcount(mask);
    BiPoly term = BiPoly::constant(1);
    for (int i = 0; i < ka - ke; ++i) term *= xm1;
    for (int i = 0; i < sz + ka - g.vertices; ++i) term *= ym1;
    total += term;
  }
  return total;
}

IntPoly tutte_at_x1(const ColoredMultigraph& g) {
  if (g.edges.empty()) return IntPoly::constant(1);
  const Edge e = g.edges.back();
  ColoredMultigraph del = g;
  del.edges.pop_back();
  if (e.u == e.v) return IntPoly::variable() * tutte_at_x1(del);
  if (!connected_without_last(g, e.u, e.v))
    return tutte_at_x1(contract(del, e.u, e.v));
  return tutte_at_x1(del) + tutte_at_x1(contract(del, e.u, e.v));
}

// fraction-free determinant of an integer matrix, n >= 0
Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

ColoredMultigraph make_graph(int vertices, std::vector<Edge> edges) {
  if (vertices < 1) throw InvalidInput("graph needs at least one vertex");
  for (Edge& e : edges) {
    if (e.u < 1 || e.u > vertices || e.v < 1 || e.v > vertices)
      throw InvalidInput("edge endpoint out of range [1," +
                         std::to_string(vertices) + "]");
    if (e.color < 0) throw InvalidInput("edge color must be nonnegative");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  return ColoredMultigraph{vertices, std::move(edges)};
}

bool has_loops(const ColoredMultigraph& g) {
  return std::any_of(g.edges.begin(), g.edges.end(),
                     [](const Edge& e) { return e.u == e.v; });
}

bool is_connected(const ColoredMultigraph& g) {
  return component_count(g) == 1;
}

IntPoly external_activity_subgraph_sum(const ColoredMultigraph& g) {
  if (has_loops(g))
    throw InvalidInput("connected-subgraph sum expects a loop-free graph");
  if (!is_connected(g)) return IntPoly();
  check_subset_budget(g, "connected-subgraph sum");
  // tally subsets by Betti number, then expand sum_b count_b (q-1)^b
  std::vector<Int> by_betti(g.edges.size() + 2, Int(0));
  const unsigned long full = 1ul << g.edges.size();
  for (unsigned long mask = 0; mask < full; ++mask) {
    if (subset_components(g, mask) != 1) continue;
    int betti = std::popcount(mask) - g.vertices + 1;
    by_betti[static_cast<size_t>(betti)] += 1;
  }
  IntPoly qm1({Int(-1), Int(1)});
  IntPoly total;
  for (size_t b = 0; b < by_betti.size(); ++b)
    if (by_betti[b] != 0)
      total += IntPoly::constant(by_betti[b]) * qm1.pow(static_cast<int>(b));
  return total;
}

BiPoly tutte(const ColoredMultigraph& g, TutteMode mode) {
  return mode == TutteMode::DeletionContraction ? tutte_delcon(g)
                                                : tutte_subsets(g);
}

IntPoly external_activity_tutte(const ColoredMultigraph& g) {
  if (!is_connected(g)) return IntPoly();
  return tutte_at_x1(g);
}

Int spanning_tree_count(const ColoredMultigraph& g) {
  if (!is_connected(g)) throw Disconnected("spanning trees need a connected graph");
  const size_t n = static_cast<size_t>(g.vertices);
  std::vector<std::vector<Int>> lap(n, std::vector<Int>(n, Int(0)));
  for (const Edge& e : g.edges) {
    if (e.u == e.v) continue;
    size_t a = static_cast<size_t>(e.u - 1), b = static_cast<size_t>(e.v - 1);
    lap[a][a] += 1;
    lap[b][b] += 1;
    lap[a][b] -= 1;
    lap[b][a] -= 1;
  }
  std::vector<std::vector<Int>> reduced(n - 1, std::vector<Int>(n - 1));
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = 0; j + 1 < n; ++j) reduced[i][j] = lap[i][j];
  return bareiss_determinant(std::move(reduced));
}

Rat reliability(const ColoredMultigraph& g, const Rat& p) {
  if (!is_connected(g)) throw Disconnected("reliability needs a connected graph");
  if (p < 0 || p > 1) throw InvalidInput("failure probability must lie in [0,1]");
  const IntPoly r = external_activity_tutte(g);
  const int top = static_cast<int>(g.edges.size()) - g.vertices + 1;
  Rat survive = Rat(1) - p;
  Rat prefix = 1;
  for (int i = 0; i + 1 < g.vertices; ++i) prefix *= survive;
  Rat sum = 0;
  for (int d = 0; d <= r.degree(); ++d) {
    Rat term(r.coeff(d));
    for (int i = 0; i < top - d; ++i) term *= p;
    sum += term;
  }
  return prefix * sum;
}

}  // namespace kac
