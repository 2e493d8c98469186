/*
  Cell-sum pipeline. The tuple enumeration is a fixed lexicographic list;
  workers pull indices from an atomic counter, so any thread count yields
  the same polynomial and the same sorted report.
*/
#include "kac/kacsum.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "kac/errors.hpp"

namespace kac {

namespace {

std::vector<Edge> inversion_edges(const Permutation& w, int color) {
  std::vector<Edge> edges;
  for (const auto& [i, j] : inversions(w))
    edges.push_back(Edge{j, i, color});
  return edges;
}

}  // namespace

IntPoly rw_polynomial(const PermTuple& wt) {
  ColoredMultigraph g = inversion_graph(wt);
  if (!is_connected(g)) return IntPoly();
  return external_activity_tutte(g);
}

KacReport kac_polynomial(const MultiPartition& mu, const KacOptions& opts) {
  if (opts.threads < 1) throw InvalidInput("thread count must be positive");
  const int r = mu.r;
  const int k = static_cast<int>(mu.legs.size());
  for (const Partition& leg : mu.legs)
    if (leg.size() > r)
      throw InvalidInput("hub dimension " + std::to_string(leg.size()) +
                         " exceeds the short-leg count " + std::to_string(r));

  KacReport report;
  try {
    report.warning_outside_M = !vmu_in_M(mu);
  } catch (const HypothesisViolated&) {
    auto [qv, v] = build_supernova(mu);
    report.warning_outside_M = !in_fundamental_domain(qv, v);
  }

  std::vector<std::vector<Permutation>> sections;
  for (const Partition& leg : mu.legs) {
    std::vector<int> parts{r - leg.size()};
    parts.insert(parts.end(), leg.parts().begin(), leg.parts().end());
    sections.push_back(cross_section(Composition(std::move(parts))));
  }

  std::vector<long long> sizes;
  long long total = 1;
  bool over_budget = false;
  for (const auto& xs : sections) {
    sizes.push_back(static_cast<long long>(xs.size()));
    if (total > opts.cell_budget / sizes.back()) over_budget = true;
    if (!over_budget) total *= sizes.back();
  }
  if (over_budget || total > opts.cell_budget)
    throw TooLarge("cell count exceeds the budget of " +
                   std::to_string(opts.cell_budget));

  std::vector<std::vector<std::vector<Edge>>> edge_cache(
      static_cast<size_t>(k));
  std::vector<std::vector<int>> inv_count(static_cast<size_t>(k));
  for (int t = 0; t < k; ++t) {
    for (const Permutation& w : sections[static_cast<size_t>(t)]) {
      std::vector<Edge> edges = inversion_edges(w, t + 1);
      inv_count[static_cast<size_t>(t)].push_back(
          static_cast<int>(edges.size()));
      edge_cache[static_cast<size_t>(t)].push_back(std::move(edges));
    }
  }

  struct Local {
    IntPoly sum;
    std::vector<std::pair<long long, CellReport>> cells;
  };
  std::vector<Local> locals(static_cast<size_t>(opts.threads));
  std::atomic<long long> next{0};

  auto work = [&](Local& loc) {
    std::vector<size_t> digit(static_cast<size_t>(k));
    for (;;) {
      long long idx = next.fetch_add(1, std::memory_order_relaxed);
      if (idx >= total) return;
      long long rem = idx;
      for (int t = k - 1; t >= 0; --t) {
        digit[static_cast<size_t>(t)] =
            static_cast<size_t>(rem % sizes[static_cast<size_t>(t)]);
        rem /= sizes[static_cast<size_t>(t)];
      }
      int inv = 0;
      for (int t = 0; t < k; ++t)
        inv += inv_count[static_cast<size_t>(t)][digit[static_cast<size_t>(t)]];

      CellReport cell;
      cell.inversion_count = inv;
      if (inv >= r - 1) {
        std::vector<Edge> edges;
        edges.reserve(static_cast<size_t>(inv));
        for (int t = 0; t < k; ++t) {
          const auto& part =
              edge_cache[static_cast<size_t>(t)][digit[static_cast<size_t>(t)]];
          edges.insert(edges.end(), part.begin(), part.end());
        }
        ColoredMultigraph g = make_graph(r, std::move(edges));
        cell.connected = is_connected(g);
        if (cell.connected) {
          cell.rw = external_activity_tutte(g);
          loc.sum += cell.rw;
        }
      }
      if (cell.connected || opts.all_cells) {
        std::vector<Permutation> perms;
        perms.reserve(static_cast<size_t>(k));
        for (int t = 0; t < k; ++t)
          perms.push_back(
              sections[static_cast<size_t>(t)][digit[static_cast<size_t>(t)]]);
        cell.tuple = make_perm_tuple(std::move(perms));
        loc.cells.emplace_back(idx, std::move(cell));
      }
    }
  };

  if (opts.threads == 1) {
    work(locals[0]);
  } else {
    std::vector<std::thread> pool;
    for (Local& loc : locals) pool.emplace_back(work, std::ref(loc));
    for (std::thread& th : pool) th.join();
  }

  std::vector<std::pair<long long, CellReport>> tagged;
  for (Local& loc : locals) {
    report.kac += loc.sum;
    for (auto& entry : loc.cells) tagged.push_back(std::move(entry));
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  report.cells.reserve(tagged.size());
  for (auto& [idx, cell] : tagged) report.cells.push_back(std::move(cell));
  return report;
}

IntPoly kac_all_ones(const ColoredMultigraph& g) {
  if (has_loops(g)) throw InvalidInput("graph has loops");
  if (!is_connected(g)) throw Disconnected("graph is disconnected");
  return external_activity_tutte(g);
}

}  // namespace kac
