/*
  Finite-field oracles. Flags are chains of nested subspaces, each stored
  as a reduced row echelon basis so that equality of flags is equality of
  representations; the torus acts by column scaling followed by
  re-canonicalization. Orbits are connected components under the r
  single-coordinate primitive-root scalings, and the orbit-stabilizer
  identity turns the stabilizer-equals-scalars criterion into an orbit-size
  test.
*/
#include "kac/orbits.hpp"

#include <algorithm>
#include <numeric>

#include "kac/errors.hpp"

namespace kac {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Mat = std::vector<std::vector<int>>;

int inv_mod(int a, int p) {
  int t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    int q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  return (t % p + p) % p;
}

// in-place reduced row echelon form with leftmost pivots scaled to 1
void rref(Mat& m, int p) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return;
  int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int i = row; i < rows; ++i)
      if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<size_t>(row)], m[static_cast<size_t>(pivot)]);
    int scale = inv_mod(m[static_cast<size_t>(row)][static_cast<size_t>(col)], p);
    for (int& x : m[static_cast<size_t>(row)]) x = x * scale % p;
    for (int i = 0; i < rows; ++i) {
      if (i == row) continue;
      int f = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            ((m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
              f * m[static_cast<size_t>(row)][static_cast<size_t>(j)]) % p + p) % p;
    }
    ++row;
  }
}

// all reduced echelon bases of k-dimensional subspaces of F_p^n
std::vector<Mat> all_subspaces(int n, int k, int p) {
  std::vector<Mat> out;
  if (k == 0) {
    out.push_back(Mat{});
    return out;
  }
  std::vector<int> pivots(static_cast<size_t>(k));
  std::iota(pivots.begin(), pivots.end(), 0);
  for (;;) {
    std::vector<std::pair<int, int>> free_slots;  // (row, col)
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    for (int i = 0; i < k; ++i)
      for (int j = pivots[static_cast<size_t>(i)] + 1; j < n; ++j)
        if (!is_pivot[static_cast<size_t>(j)]) free_slots.emplace_back(i, j);

    std::vector<int> fill(free_slots.size(), 0);
    for (;;) {
      Mat m(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(n), 0));
      for (int i = 0; i < k; ++i)
        m[static_cast<size_t>(i)][static_cast<size_t>(pivots[static_cast<size_t>(i)])] = 1;
      for (size_t f = 0; f < free_slots.size(); ++f)
        m[static_cast<size_t>(free_slots[f].first)]
         [static_cast<size_t>(free_slots[f].second)] = fill[f];
      out.push_back(std::move(m));
      size_t f = 0;
      while (f < fill.size() && ++fill[f] == p) fill[f++] = 0;
      if (f == fill.size()) break;
    }

    int i = k - 1;
    while (i >= 0 && pivots[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pivots[static_cast<size_t>(j)] = pivots[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

using Chain = std::vector<Mat>;
using Point = std::vector<Chain>;

// subspaces of dimension d containing v-dimensional base, via the quotient
// spanned by the unit vectors at the base's non-pivot columns
std::vector<Mat> extensions(const Mat& base, int d, int r, int p) {
  int v = static_cast<int>(base.size());
  std::vector<int> nonpivot;
  {
    std::vector<bool> is_pivot(static_cast<size_t>(r), false);
    for (const auto& row : base) {
      int c = 0;
      while (row[static_cast<size_t>(c)] == 0) ++c;
      is_pivot[static_cast<size_t>(c)] = true;
    }
    for (int j = 0; j < r; ++j)
      if (!is_pivot[static_cast<size_t>(j)]) nonpivot.push_back(j);
  }
  std::vector<Mat> out;
  for (const Mat& u : all_subspaces(r - v, d - v, p)) {
    Mat m = base;
    for (const auto& urow : u) {
      std::vector<int> lifted(static_cast<size_t>(r), 0);
      for (size_t t = 0; t < nonpivot.size(); ++t)
        lifted[static_cast<size_t>(nonpivot[t])] = urow[t];
      m.push_back(std::move(lifted));
    }
    rref(m, p);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<int> chain_dims(const MultiPartition& mu, const Partition& leg) {
  std::vector<int> parts{mu.r - leg.size()};
  parts.insert(parts.end(), leg.parts().begin(), leg.parts().end());
  std::vector<int> dims;
  int acc = 0;
  for (int part : parts) {
    acc += part;
    if (acc > 0 && acc < mu.r) {
      if (dims.empty() || dims.back() != acc) dims.push_back(acc);
    }
  }
  return dims;
}

std::vector<Chain> leg_chains(const std::vector<int>& dims, int r, int p) {
  std::vector<Chain> chains{Chain{}};
  for (int d : dims) {
    std::vector<Chain> next;
    for (const Chain& c : chains) {
      Mat base = c.empty() ? Mat{} : c.back();
      for (Mat& ext : extensions(base, d, r, p)) {
        Chain grown = c;
        grown.push_back(std::move(ext));
        next.push_back(std::move(grown));
      }
    }
    chains = std::move(next);
  }
  return chains;
}

std::vector<int> encode(const Point& pt) {
  std::vector<int> out;
  for (const Chain& c : pt)
    for (const Mat& m : c)
      for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Chain act_chain(const Chain& c, const std::vector<int>& t, int p) {
  Chain out;
  for (const Mat& m : c) {
    Mat scaled = m;
    for (auto& row : scaled)
      for (size_t j = 0; j < row.size(); ++j)
        row[j] = row[j] * t[j] % p;
    rref(scaled, p);
    out.push_back(std::move(scaled));
  }
  return out;
}

Point act_point(const Point& pt, const std::vector<int>& t, int p) {
  Point out;
  for (const Chain& c : pt) out.push_back(act_chain(c, t, p));
  return out;
}

int primitive_root(int p) {
  for (int g = 2; g < p; ++g) {
    int x = g % p, order = 1;
    while (x != 1) {
      x = x * g % p;
      ++order;
    }
    if (order == p - 1) return g;
  }
  return 1;
}

struct UnionFind {
  std::vector<long long> parent;
  explicit UnionFind(long long n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  long long find(long long x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(long long a, long long b) {
    parent[static_cast<size_t>(find(a))] = find(b);
  }
};

Int gauss_binomial_at(int n, int k, int p) {
  Int num = 1, den = 1;
  Int pp = p;
  for (int i = 0; i < k; ++i) {
    Int pn, pk;
    mpz_pow_ui(pn.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(pk.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(k - i));
    num *= pn - 1;
    den *= pk - 1;
  }
  return num / den;
}

}  // namespace

Int stirling2(int r, int m) {
  if (r < 0 || m < 0) throw InvalidInput("Stirling indices must be nonnegative");
  if (m > r) return 0;
  std::vector<std::vector<Int>> s(
      static_cast<size_t>(r + 1), std::vector<Int>(static_cast<size_t>(m + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= std::min(i, m); ++j)
      s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          Int(j) * s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] +
          s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  return s[static_cast<size_t>(r)][static_cast<size_t>(m)];
}

IntPoly gm_orbit_count(int r) {
  if (r < 3) throw InvalidInput("orbit count needs at least three points");
  IntPoly total;
  for (int m = 3; m <= r; ++m) {
    IntPoly c = IntPoly::constant(1);
    for (int t = 2; t <= m - 2; ++t)
      c *= IntPoly::monomial(1, 1) - IntPoly::constant(t);
    total += IntPoly::constant(stirling2(r, m)) * c;
  }
  return total;
}

long long oracle_cell_count(const PermTuple& wt, int p, long long budget) {
  if (!is_prime(p)) throw BadPrime("modulus must be prime");
  const int r = wt.perms[0].size();

  std::vector<std::pair<int, int>> coords;
  for (const Permutation& w : wt.perms)
    for (const auto& [i, j] : inversions(w)) coords.emplace_back(j, i);
  const int m = static_cast<int>(coords.size());

  long long total = 1;
  for (int i = 0; i < m; ++i) {
    if (total > budget / p)
      throw TooLarge("assignment count exceeds the budget of " +
                     std::to_string(budget));
    total *= p;
  }

  long long count = 0;
  std::vector<int> digits(static_cast<size_t>(m), 0);
  std::vector<int> parent(static_cast<size_t>(r));
  for (long long it = 0; it < total; ++it) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
      return x;
    };
    int components = r;
    for (int e = 0; e < m; ++e) {
      if (digits[static_cast<size_t>(e)] == 0) continue;
      int a = find(coords[static_cast<size_t>(e)].first - 1);
      int b = find(coords[static_cast<size_t>(e)].second - 1);
      if (a != b) {
        parent[static_cast<size_t>(a)] = b;
        --components;
      }
    }
    if (components == 1) ++count;
    size_t d = 0;
    while (d < digits.size() && ++digits[d] == p) digits[d++] = 0;
  }
  return count;
}

FlagOrbitReport oracle_flag_orbits(const MultiPartition& mu, int p,
                                   long long budget) {
  if (!is_prime(p) || p < 3)
    throw BadPrime("odd prime required for torus-orbit counting");
  const int r = mu.r;
  for (const Partition& leg : mu.legs)
    if (leg.size() > r)
      throw InvalidInput("hub dimension exceeds the short-leg count");

  std::vector<std::vector<int>> dims;
  Int predicted_points = 1;
  for (const Partition& leg : mu.legs) {
    dims.push_back(chain_dims(mu, leg));
    int prev = 0;
    for (int d : dims.back()) {
      predicted_points *= gauss_binomial_at(r - prev, d - prev, p);
      prev = d;
    }
  }
  Int torus_order = 1;
  for (int i = 0; i < r; ++i) torus_order *= p - 1;
  if (predicted_points * torus_order > Int(static_cast<long>(budget)))
    throw TooLarge("flag enumeration exceeds the budget of " +
                   std::to_string(budget));

  std::vector<std::vector<Chain>> per_leg;
  for (const auto& d : dims) per_leg.push_back(leg_chains(d, r, p));

  std::vector<Point> points;
  std::map<std::vector<int>, long long> index;
  {
    std::vector<size_t> pick(per_leg.size(), 0);
    for (;;) {
      Point pt;
      for (size_t t = 0; t < per_leg.size(); ++t) pt.push_back(per_leg[t][pick[t]]);
      index.emplace(encode(pt), static_cast<long long>(points.size()));
      points.push_back(std::move(pt));
      size_t t = per_leg.size();
      while (t > 0) {
        --t;
        if (++pick[t] < per_leg[t].size()) break;
        pick[t] = 0;
        if (t == 0) pick.clear();
      }
      if (pick.empty()) break;
    }
  }
  const long long n = static_cast<long long>(points.size());

  const int g = primitive_root(p);
  UnionFind uf(n);
  for (long long i = 0; i < n; ++i) {
    for (int c = 0; c < r; ++c) {
      std::vector<int> t(static_cast<size_t>(r), 1);
      t[static_cast<size_t>(c)] = g;
      uf.unite(i, index.at(encode(act_point(points[static_cast<size_t>(i)], t, p))));
    }
  }

  std::map<long long, long long> orbit_size;
  std::map<long long, long long> orbit_rep;
  for (long long i = 0; i < n; ++i) {
    long long root = uf.find(i);
    if (!orbit_rep.count(root)) orbit_rep[root] = i;
    ++orbit_size[root];
  }

  long long scalar_orbit = 1;
  for (int i = 0; i + 1 < r; ++i) scalar_orbit *= p - 1;

  FlagOrbitReport report;
  report.point_count = n;
  for (const auto& [root, size] : orbit_size) {
    if (size != scalar_orbit) continue;
    ++report.orbit_count;

    const Chain& first = points[static_cast<size_t>(orbit_rep[root])][0];
    long long stab = 0;
    std::vector<int> t(static_cast<size_t>(r), 1);
    for (;;) {
      if (act_chain(first, t, p) == first) ++stab;
      size_t c = 0;
      while (c < t.size() && ++t[c] == p) t[c++] = 1;
      if (c == t.size()) break;
    }
    ++report.strata[stab];
  }
  return report;
}

IntPoly kac_via_oracle(const MultiPartition& mu, const std::vector<int>& primes) {
  for (int p : primes)
    if (!is_prime(p) || p < 3) throw BadPrime("odd primes required");
  std::vector<int> sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("interpolation primes must be distinct");

  auto [qv, v] = build_supernova(mu);
  long long needed = std::max<long long>(1, delta(qv, v) + 2);
  if (static_cast<long long>(primes.size()) < needed)
    throw InvalidInput("need at least " + std::to_string(needed) +
                       " interpolation primes");

  std::vector<std::pair<Int, Int>> samples;
  for (int p : primes)
    samples.emplace_back(
        Int(p), Int(static_cast<long>(oracle_flag_orbits(mu, p).orbit_count)));
  return poly_interpolate(samples);
}

}  // namespace kac
