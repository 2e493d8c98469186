#include "kac/bruhat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kac {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw InvalidInput("composition parts must be nonnegative");
  std::erase(parts_, 0);
}

int Composition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw InvalidInput("empty permutation");
  std::vector<char> seen(images_.size() + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<size_t>(v)])
      throw InvalidInput("not a permutation of 1..r");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int r) {
  if (r < 1) throw InvalidInput("permutation size must be positive");
  std::vector<int> img(static_cast<size_t>(r));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> img;
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw InvalidInput("unterminated permutation list");
    std::string body = text.substr(1, text.size() - 2);
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidInput("bad permutation entry \"" + tok + "\"");
      img.push_back(std::atoi(tok.c_str()));
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw InvalidInput("permutation digits must be 1..9; use [..] beyond");
      img.push_back(c - '0');
    }
  }
  return Permutation(std::move(img));
}

int Permutation::image(int i) const {
  if (i < 1 || i > size()) throw InvalidInput("permutation argument out of range");
  return images_[static_cast<size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i)
    inv[static_cast<size_t>(image(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::str() const {
  std::ostringstream out;
  if (size() <= 9) {
    for (int v : images_) out << v;
  } else {
    out << '[';
    for (size_t i = 0; i < images_.size(); ++i) {
      if (i) out << ',';
      out << images_[i];
    }
    out << ']';
  }
  return out.str();
}

PermTuple make_perm_tuple(std::vector<Permutation> perms) {
  if (perms.empty()) throw InvalidInput("permutation tuple must be nonempty");
  for (const Permutation& w : perms)
    if (w.size() != perms.front().size())
      throw InvalidInput("permutation tuple components must share one size");
  return PermTuple{std::move(perms)};
}

std::string perm_tuple_str(const PermTuple& wt) {
  std::string out;
  for (size_t i = 0; i < wt.perms.size(); ++i) {
    if (i) out += '|';
    out += wt.perms[i].str();
  }
  return out;
}

PermTuple parse_perm_tuple(const std::string& text) {
  std::vector<Permutation> perms;
  std::string cur;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '|') {
      perms.push_back(Permutation::parse(cur));
      cur.clear();
    } else {
      cur += text[i];
    }
  }
  return make_perm_tuple(std::move(perms));
}

std::vector<Permutation> cross_section(const Composition& c) {
  if (c.empty()) throw InvalidInput("cross-section needs a nonempty composition");
  const int r = c.total();

  unsigned long long count = 1;
  {
    int rem = r;
    for (int part : c.parts()) {
      for (int i = 0; i < part; ++i) {
        count = count * static_cast<unsigned long long>(rem - i) /
                static_cast<unsigned long long>(i + 1);
        if (count > 1'000'000ull)
          throw TooLarge("cross-section would hold more than 10^6 elements");
      }
      rem -= part;
    }
  }

  // value-block sizes in reverse composition order
  std::vector<int> sizes(c.parts().rbegin(), c.parts().rend());
  std::vector<int> labels;
  for (size_t b = 0; b < sizes.size(); ++b)
    labels.insert(labels.end(), static_cast<size_t>(sizes[b]), static_cast<int>(b));

  std::vector<int> starts(sizes.size(), 1);
  for (size_t b = 1; b < sizes.size(); ++b)
    starts[b] = starts[b - 1] + sizes[b - 1];

  std::vector<Permutation> result;
  result.reserve(static_cast<size_t>(count));
  std::vector<int> next(sizes.size());
  do {
    for (size_t b = 0; b < sizes.size(); ++b) next[b] = starts[b];
    std::vector<int> img(static_cast<size_t>(r));
    for (int pos = 0; pos < r; ++pos)
      img[static_cast<size_t>(pos)] = next[static_cast<size_t>(labels[static_cast<size_t>(pos)])]++;
    result.emplace_back(std::move(img));
  } while (std::next_permutation(labels.begin(), labels.end()));

  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::pair<int, int>> inversions(const Permutation& w) {
  std::vector<std::pair<int, int>> out;
  for (int i = 2; i <= w.size(); ++i)
    for (int j = 1; j < i; ++j)
      if (w.image(j) > w.image(i)) out.push_back({i, j});
  std::sort(out.begin(), out.end());
  return out;
}

ColoredMultigraph inversion_graph(const PermTuple& wt) {
  std::vector<Edge> edges;
  for (size_t t = 0; t < wt.perms.size(); ++t)
    for (auto [i, j] : inversions(wt.perms[t]))
      edges.push_back({j, i, static_cast<int>(t) + 1});
  return make_graph(wt.perms.front().size(), std::move(edges));
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int inv_mod(int a, int p) {
  int t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    int q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw DivisionByZero("element not invertible mod p");
  return (t % p + p) % p;
}

int rightmost_nonzero(const std::vector<int>& v) {
  for (int c = static_cast<int>(v.size()) - 1; c >= 0; --c)
    if (v[static_cast<size_t>(c)] != 0) return c;
  return -1;
}

std::vector<int> blocks_top_down(const Composition& s) {
  return {s.parts().rbegin(), s.parts().rend()};
}

}  // namespace

FFMatrix make_ff_matrix(int p, std::vector<std::vector<int>> rows) {
  if (!is_prime(p) || p > 97)
    throw BadPrime("modulus must be a prime in [2, 97]");
  for (auto& row : rows) {
    if (row.size() != rows.front().size())
      throw InvalidInput("matrix rows must have equal length");
    for (int& x : row) x = (x % p + p) % p;
  }
  return FFMatrix{p, std::move(rows)};
}

FFMatrix ff_identity(int p, int n) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(n),
                                     std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return make_ff_matrix(p, std::move(rows));
}

FFMatrix ff_multiply(const FFMatrix& a, const FFMatrix& b) {
  if (a.p != b.p) throw InvalidInput("matrix moduli differ");
  if (a.col_count() != b.row_count()) throw InvalidInput("matrix shapes differ");
  std::vector<std::vector<int>> rows(
      static_cast<size_t>(a.row_count()),
      std::vector<int>(static_cast<size_t>(b.col_count()), 0));
  for (int i = 0; i < a.row_count(); ++i)
    for (int k = 0; k < a.col_count(); ++k) {
      int aik = a.rows[static_cast<size_t>(i)][static_cast<size_t>(k)];
      if (aik == 0) continue;
      for (int j = 0; j < b.col_count(); ++j)
        rows[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            (rows[static_cast<size_t>(i)][static_cast<size_t>(j)] +
             aik * b.rows[static_cast<size_t>(k)][static_cast<size_t>(j)]) % a.p;
    }
  return FFMatrix{a.p, std::move(rows)};
}

FFMatrix permutation_matrix(const Permutation& w, int p) {
  Permutation winv = w.inverse();
  std::vector<std::vector<int>> rows(
      static_cast<size_t>(w.size()),
      std::vector<int>(static_cast<size_t>(w.size()), 0));
  for (int i = 1; i <= w.size(); ++i)
    rows[static_cast<size_t>(i - 1)][static_cast<size_t>(winv.image(i) - 1)] = 1;
  return make_ff_matrix(p, std::move(rows));
}

bool is_echelon(const FFMatrix& m, const Composition& s) {
  if (s.total() != m.row_count())
    throw InvalidInput("block structure does not match row count");
  const int n = m.row_count();
  std::vector<int> pivot(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int c = rightmost_nonzero(m.rows[static_cast<size_t>(i)]);
    if (c < 0 || m.rows[static_cast<size_t>(i)][static_cast<size_t>(c)] != 1)
      return false;
    for (int below = i + 1; below < n; ++below)
      if (m.rows[static_cast<size_t>(below)][static_cast<size_t>(c)] != 0)
        return false;
    pivot[static_cast<size_t>(i)] = c;
  }
  int row = 0;
  for (int sz : blocks_top_down(s)) {
    for (int t = 1; t < sz; ++t)
      if (pivot[static_cast<size_t>(row + t)] <= pivot[static_cast<size_t>(row + t - 1)])
        return false;
    row += sz;
  }
  return true;
}

std::pair<FFMatrix, FFMatrix> echelon_normal_form(const FFMatrix& a,
                                                  const Composition& s) {
  const int n = a.row_count(), r = a.col_count(), p = a.p;
  if (s.total() != n) throw InvalidInput("block structure does not match row count");
  if (r < n) throw RankDeficient("more rows than columns");

  struct Work {
    std::vector<int> v, c;
    int pivot;
  };
  std::vector<Work> basis;
  auto subtract = [p](std::vector<int>& x, const std::vector<int>& y, int m) {
    for (size_t i = 0; i < x.size(); ++i)
      x[i] = ((x[i] - m * y[i]) % p + p) % p;
  };

  std::vector<std::vector<int>> erows, grows;
  int row = 0;
  for (int sz : blocks_top_down(s)) {
    std::vector<int> fresh;
    for (int t = 0; t < sz; ++t, ++row) {
      Work cand{a.rows[static_cast<size_t>(row)],
                std::vector<int>(static_cast<size_t>(n), 0), -1};
      cand.c[static_cast<size_t>(row)] = 1;
      for (;;) {
        int c = rightmost_nonzero(cand.v);
        if (c < 0) throw RankDeficient("matrix rows are linearly dependent");
        auto hit = std::find_if(basis.begin(), basis.end(),
                                [c](const Work& w) { return w.pivot == c; });
        if (hit != basis.end()) {
          int m = cand.v[static_cast<size_t>(c)];
          subtract(cand.v, hit->v, m);
          subtract(cand.c, hit->c, m);
          continue;
        }
        int scale = inv_mod(cand.v[static_cast<size_t>(c)], p);
        for (int& x : cand.v) x = x * scale % p;
        for (int& x : cand.c) x = x * scale % p;
        cand.pivot = c;
        for (Work& b : basis) {
          int m = b.v[static_cast<size_t>(c)];
          if (m != 0) {
            subtract(b.v, cand.v, m);
            subtract(b.c, cand.c, m);
          }
        }
        for (const Work& b : basis) {
          int m = cand.v[static_cast<size_t>(b.pivot)];
          if (m != 0) {
            subtract(cand.v, b.v, m);
            subtract(cand.c, b.c, m);
          }
        }
        basis.push_back(std::move(cand));
        fresh.push_back(c);
        break;
      }
    }
    std::sort(fresh.begin(), fresh.end());
    for (int c : fresh) {
      auto hit = std::find_if(basis.begin(), basis.end(),
                              [c](const Work& w) { return w.pivot == c; });
      erows.push_back(hit->v);
      grows.push_back(hit->c);
    }
  }

  FFMatrix g{p, std::move(grows)};
  FFMatrix e{p, std::move(erows)};

  // parabolic zero pattern: row blocks never reach past their own column block
  std::vector<int> block_of(static_cast<size_t>(n));
  int idx = 0, bno = 0;
  for (int sz : blocks_top_down(s)) {
    for (int t = 0; t < sz; ++t) block_of[static_cast<size_t>(idx++)] = bno;
    ++bno;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (block_of[static_cast<size_t>(j)] > block_of[static_cast<size_t>(i)] &&
          g.rows[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
        throw Error("echelon transform left the parabolic subgroup");
  if (!is_echelon(e, s) || !(ff_multiply(g, a) == e))
    throw Error("echelon normal form failed its self-check");
  return {std::move(g), std::move(e)};
}

FFMatrix complete_echelon(const FFMatrix& e, const Composition& s, int s0) {
  const int n = e.row_count(), r = e.col_count();
  if (s0 != r - n) throw InvalidInput("completion size must be cols - rows");
  if (!is_echelon(e, s)) throw NotEchelon("matrix is not in echelon form");

  std::vector<char> is_pivot(static_cast<size_t>(r), 0);
  for (const auto& rowv : e.rows)
    is_pivot[static_cast<size_t>(rightmost_nonzero(rowv))] = 1;

  FFMatrix out = e;
  for (int c = 0; c < r; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) {
      std::vector<int> unit(static_cast<size_t>(r), 0);
      unit[static_cast<size_t>(c)] = 1;
      out.rows.push_back(std::move(unit));
    }

  std::vector<int> full = {s0};
  full.insert(full.end(), s.parts().begin(), s.parts().end());
  if (!is_echelon(out, Composition(std::move(full))))
    throw Error("completion failed its echelon self-check");
  return out;
}

}  // namespace kac
