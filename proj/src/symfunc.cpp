/*
  Generating-function pipeline. The log series is computed on exponential
  coefficients: for F = sum f_s U^s/s!, the product rule is
  (FG)_s = sum_j binom(s,j) f_j g_{s-j}.
*/
#include "kac/symfunc.hpp"

#include <algorithm>
#include <mutex>

#include "kac/errors.hpp"

namespace kac {

namespace {

void collect_partitions(int rest, int cap, std::vector<int>& acc,
                        std::vector<Partition>& out) {
  if (rest == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int part = std::min(rest, cap); part >= 1; --part) {
    acc.push_back(part);
    collect_partitions(rest - part, part, acc, out);
    acc.pop_back();
  }
}

// distinct rearrangements of the parts padded with zeros to n entries
std::vector<std::vector<int>> orbit(const Partition& p, int n) {
  std::vector<int> v(static_cast<size_t>(n), 0);
  std::copy(p.parts().begin(), p.parts().end(), v.begin());
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

RatFunc int_scalar(long n) {
  return RatFunc(IntPoly::constant(Int(n)));
}

Int binomial(int s, int j) {
  Int c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(s),
               static_cast<unsigned long>(j));
  return c;
}

}  // namespace

std::vector<Partition> partitions_of(int s) {
  if (s < 0) throw InvalidInput("partition size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> acc;
  collect_partitions(s, s == 0 ? 1 : s, acc, out);
  return out;
}

IntPoly q_factorial(int n) {
  if (n < 0) throw InvalidInput("q-factorial of a negative integer");
  IntPoly acc = IntPoly::constant(1);
  for (int i = 1; i <= n; ++i)
    acc *= IntPoly::constant(1) - IntPoly::monomial(1, i);
  return acc;
}

IntPoly q_multinomial(int s, const Partition& lam) {
  if (lam.size() != s)
    throw SizeMismatch("partition of " + std::to_string(lam.size()) +
                       " against s = " + std::to_string(s));
  IntPoly result = q_factorial(s);
  for (int part : lam.parts()) result = poly_divexact(result, q_factorial(part));
  return result;
}

SymPoly::SymPoly(int alphabets, int nvars)
    : alphabets_(alphabets), nvars_(nvars) {
  if (alphabets < 1 || nvars < 1)
    throw InvalidInput("symmetric polynomial needs alphabets and variables");
}

RatFunc SymPoly::coeff(const std::vector<Partition>& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? RatFunc() : it->second;
}

void SymPoly::add_term(std::vector<Partition> key, RatFunc c) {
  if (static_cast<int>(key.size()) != alphabets_)
    throw InvalidInput("term key does not match the alphabet count");
  for (const Partition& p : key)
    if (p.length() > nvars_) return;
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (alphabets_ != o.alphabets_ || nvars_ != o.nvars_)
    throw InvalidInput("adding symmetric polynomials of different shapes");
  for (const auto& [key, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
  if (alphabets_ != o.alphabets_ || nvars_ != o.nvars_)
    throw InvalidInput("multiplying symmetric polynomials of different shapes");
  SymPoly out(alphabets_, nvars_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      RatFunc base = ca * cb;
      std::vector<std::map<Partition, Int>> factors;
      for (int t = 0; t < alphabets_; ++t)
        factors.push_back(monomial_product(ka[static_cast<size_t>(t)],
                                           kb[static_cast<size_t>(t)], nvars_));
      std::vector<std::map<Partition, Int>::const_iterator> pos;
      for (const auto& f : factors) pos.push_back(f.begin());
      for (;;) {
        std::vector<Partition> key;
        Int mult = 1;
        for (int t = 0; t < alphabets_; ++t) {
          key.push_back(pos[static_cast<size_t>(t)]->first);
          mult *= pos[static_cast<size_t>(t)]->second;
        }
        out.add_term(std::move(key),
                     base * RatFunc(IntPoly::constant(mult)));
        int t = alphabets_ - 1;
        while (t >= 0) {
          if (++pos[static_cast<size_t>(t)] != factors[static_cast<size_t>(t)].end())
            break;
          pos[static_cast<size_t>(t)] = factors[static_cast<size_t>(t)].begin();
          --t;
        }
        if (t < 0) break;
      }
    }
  }
  return out;
}

SymPoly SymPoly::scaled(const RatFunc& c) const {
  SymPoly out(alphabets_, nvars_);
  if (c.is_zero()) return out;
  for (const auto& [key, coeff] : terms_) out.terms_[key] = coeff * c;
  return out;
}

std::map<Partition, Int> monomial_product(const Partition& a,
                                          const Partition& b, int nvars) {
  if (a.length() > nvars || b.length() > nvars)
    throw InvalidInput("monomial does not fit in the variable count");

  using Key = std::pair<int, std::pair<Partition, Partition>>;
  static std::map<Key, std::map<Partition, Int>> cache;
  static std::mutex cache_mutex;

  Key key{nvars, a <= b ? std::make_pair(a, b) : std::make_pair(b, a)};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  std::map<Partition, Int> result;
  std::vector<std::vector<int>> ua = orbit(a, nvars), ub = orbit(b, nvars);
  std::vector<int> sum(static_cast<size_t>(nvars));
  for (const auto& va : ua) {
    for (const auto& vb : ub) {
      bool sorted = true;
      for (size_t i = 0; i < sum.size(); ++i) {
        sum[i] = va[i] + vb[i];
        if (i > 0 && sum[i] > sum[i - 1]) sorted = false;
      }
      if (sorted) result[Partition(sum)] += 1;
    }
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

SymPoly rogers_szego(int s, int nvars) {
  if (s < 0) throw InvalidInput("Rogers-Szego index must be nonnegative");
  SymPoly out(1, nvars);
  for (const Partition& lam : partitions_of(s))
    out.add_term({lam}, RatFunc(q_multinomial(s, lam)));
  return out;
}

const SymPoly& USeries::at(int s) const {
  if (s < 1 || s > order) throw InvalidInput("series order out of range");
  return terms[static_cast<size_t>(s - 1)];
}

USeries genfun_series(int r, int k) {
  if (r < 1 || r > 7) throw InvalidInput("series order must be in 1..7");
  if (k < 1 || k > 3) throw InvalidInput("alphabet count must be in 1..3");

  const RatFunc qminus1(IntPoly::monomial(1, 1) - IntPoly::constant(1));

  // inner[s] = R_s(x_1)...R_s(x_k) / (q-1)^s as an exponential coefficient
  std::vector<SymPoly> inner(static_cast<size_t>(r + 1), SymPoly(k, r));
  for (int s = 1; s <= r; ++s) {
    SymPoly term(k, r);
    RatFunc scale = RatFunc(IntPoly::constant(1));
    for (int i = 0; i < s; ++i) scale /= qminus1;
    std::vector<Partition> lams = partitions_of(s);
    std::vector<size_t> pick(static_cast<size_t>(k), 0);
    for (;;) {
      std::vector<Partition> key;
      RatFunc c = scale;
      for (int t = 0; t < k; ++t) {
        const Partition& lam = lams[pick[static_cast<size_t>(t)]];
        key.push_back(lam);
        c *= RatFunc(q_multinomial(s, lam));
      }
      term.add_term(std::move(key), std::move(c));
      int t = k - 1;
      while (t >= 0) {
        if (++pick[static_cast<size_t>(t)] < lams.size()) break;
        pick[static_cast<size_t>(t)] = 0;
        --t;
      }
      if (t < 0) break;
    }
    inner[static_cast<size_t>(s)] = std::move(term);
  }

  // log(1 + S) = sum_{m>=1} (-1)^{m+1} S^m / m on exponential coefficients
  std::vector<SymPoly> log_terms(static_cast<size_t>(r + 1), SymPoly(k, r));
  std::vector<SymPoly> power = inner;
  for (int m = 1; m <= r; ++m) {
    RatFunc factor = int_scalar(m % 2 == 1 ? 1 : -1) / int_scalar(m);
    for (int s = m; s <= r; ++s)
      log_terms[static_cast<size_t>(s)] +=
          power[static_cast<size_t>(s)].scaled(factor);
    if (m == r) break;
    std::vector<SymPoly> next(static_cast<size_t>(r + 1), SymPoly(k, r));
    for (int s = m + 1; s <= r; ++s) {
      for (int j = m; j < s; ++j) {
        SymPoly prod = power[static_cast<size_t>(j)] *
                       inner[static_cast<size_t>(s - j)];
        next[static_cast<size_t>(s)] +=
            prod.scaled(RatFunc(IntPoly::constant(binomial(s, j))));
      }
    }
    power = std::move(next);
  }

  USeries series;
  series.order = r;
  for (int s = 1; s <= r; ++s) {
    SymPoly a = log_terms[static_cast<size_t>(s)].scaled(qminus1);
    for (const auto& [key, c] : a.terms())
      if (!c.is_polynomial())
        throw NonPolynomialCoefficient(
            "series coefficient is not a polynomial: " + c.str());
    series.terms.push_back(std::move(a));
  }
  return series;
}

IntPoly kac_via_genfun(const MultiPartition& mu) {
  const int r = mu.r;
  std::vector<Partition> key;
  for (const Partition& leg : mu.legs) {
    if (leg.size() > r)
      throw NotAPartition("hub dimension " + std::to_string(leg.size()) +
                          " exceeds the short-leg count " + std::to_string(r));
    std::vector<int> parts = leg.parts();
    parts.push_back(r - leg.size());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    key.emplace_back(std::move(parts));
  }
  USeries series = genfun_series(r, static_cast<int>(mu.legs.size()));
  RatFunc c = series.at(r).coeff(key);
  return c.as_polynomial();
}

}  // namespace kac
