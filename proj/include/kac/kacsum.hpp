/*
  kacsum.hpp — the cell-sum pipeline for Kac polynomials of supernova
  quivers: enumerate the product cross-section attached to mu, build each
  tuple's inversion graph, and sum the external activity polynomials of the
  connected cells.

  Block structure per leg: (r - |mu^i|, mu^i_1, ..., mu^i_last) with zero
  parts dropped. Cells whose total inversion count is below r - 1 cannot be
  connected and are skipped without building the graph.
*/
#pragma once

#include <vector>

#include "kac/bruhat.hpp"
#include "kac/exactmath.hpp"
#include "kac/graph.hpp"
#include "kac/quiver.hpp"

namespace kac {

struct CellReport {
  PermTuple tuple;
  int inversion_count = 0;
  bool connected = false;
  IntPoly rw;
  friend bool operator==(const CellReport&, const CellReport&) = default;
};

struct KacOptions {
  int threads = 1;
  // when set, reports cover every enumerated cell, not just connected ones
  bool all_cells = false;
  long long cell_budget = 5'000'000;
};

struct KacReport {
  IntPoly kac;
  bool warning_outside_M = false;
  std::vector<CellReport> cells;  // sorted by tuple lexicographic order
};

// external activity polynomial of the inversion graph, 0 when disconnected
IntPoly rw_polynomial(const PermTuple& wt);

// sum of rw over the product cross-section; InvalidInput when some
// |mu^i| > r, TooLarge when the cell count exceeds the budget
KacReport kac_polynomial(const MultiPartition& mu, const KacOptions& opts = {});

// external activity polynomial of a connected loop-free graph; this equals
// the Kac polynomial of the all-ones dimension vector on that graph
IntPoly kac_all_ones(const ColoredMultigraph& g);

}  // namespace kac
