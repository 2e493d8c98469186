/*
  graph.hpp — colored multigraphs and their polynomial invariants.

  Vertices are labeled 1..vertex_count. Parallel edges are distinct elements
  of the edge list; loops are representable (they arise from contraction) but
  the connected-subgraph sum requires loop-free input. The edge list is kept
  canonical (endpoints ordered, list sorted) so equal graphs compare equal.
  Colors tag provenance only and never influence any invariant.
*/
#pragma once

#include <vector>

#include "kac/exactmath.hpp"

namespace kac {

struct Edge {
  int u = 0;
  int v = 0;
  int color = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct ColoredMultigraph {
  int vertices = 0;
  std::vector<Edge> edges;
  friend bool operator==(const ColoredMultigraph&, const ColoredMultigraph&) = default;
};

// Validates indices, orders endpoints, sorts the edge list.
ColoredMultigraph make_graph(int vertices, std::vector<Edge> edges);

bool has_loops(const ColoredMultigraph& g);
bool is_connected(const ColoredMultigraph& g);

// Sum over edge subsets whose spanning subgraph is connected of
// (q-1)^(e-r+1); zero when g is disconnected. Loop-free input only.
IntPoly external_activity_subgraph_sum(const ColoredMultigraph& g);

enum class TutteMode { DeletionContraction, SubsetExpansion };

BiPoly tutte(const ColoredMultigraph& g,
             TutteMode mode = TutteMode::DeletionContraction);

// T_g(1,q) when g is connected, zero otherwise; computed by a univariate
// deletion-contraction that contracts bridges directly (factor 1 at x=1).
IntPoly external_activity_tutte(const ColoredMultigraph& g);

// Matrix-Tree determinant over exact integers; Disconnected when g is not.
Int spanning_tree_count(const ColoredMultigraph& g);

// Probability that the graph stays connected when each edge fails
// independently with probability p; exact over rationals.
Rat reliability(const ColoredMultigraph& g, const Rat& p);

}  // namespace kac
