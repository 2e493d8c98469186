/*
  symfunc.hpp — the generating-function pipeline: q-factorials and
  q-multinomials, Rogers-Szego symmetric functions, the exponential-log
  series whose U^s/s! coefficients carry the Kac polynomials, and the
  monomial-coefficient extraction that recovers them.

  Symmetric polynomials live in the monomial basis over k alphabets of
  nvars variables each; coefficients are rational functions of q. Products
  are expanded per alphabet through cached m_lambda * m_nu structure
  constants, which is exact for the degrees (at most nvars) used here.
*/
#pragma once

#include <map>
#include <vector>

#include "kac/exactmath.hpp"
#include "kac/quiver.hpp"

namespace kac {

// all partitions of s, first part descending, deterministic order
std::vector<Partition> partitions_of(int s);

// (1-q)(1-q^2)...(1-q^n); empty product for n = 0
IntPoly q_factorial(int n);

// [s]! / ([lam_1]! [lam_2]! ...); SizeMismatch unless |lam| = s
IntPoly q_multinomial(int s, const Partition& lam);

class SymPoly {
 public:
  SymPoly() = default;
  SymPoly(int alphabets, int nvars);

  int alphabets() const { return alphabets_; }
  int nvars() const { return nvars_; }
  const std::map<std::vector<Partition>, RatFunc>& terms() const {
    return terms_;
  }
  RatFunc coeff(const std::vector<Partition>& key) const;
  bool is_zero() const { return terms_.empty(); }

  // adds c * m_{key}; silently drops partitions longer than nvars
  void add_term(std::vector<Partition> key, RatFunc c);

  SymPoly& operator+=(const SymPoly& o);
  SymPoly operator*(const SymPoly& o) const;
  SymPoly scaled(const RatFunc& c) const;
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  int alphabets_ = 1;
  int nvars_ = 1;
  std::map<std::vector<Partition>, RatFunc> terms_;
};

// m_a * m_b in nvars variables as a map from partitions to multiplicities
std::map<Partition, Int> monomial_product(const Partition& a,
                                          const Partition& b, int nvars);

// R_s = sum over |lam| = s of qmultinomial(s, lam) m_lam, one alphabet
SymPoly rogers_szego(int s, int nvars);

struct USeries {
  int order = 0;
  std::vector<SymPoly> terms;  // terms[s-1] holds the U^s/s! coefficient

  const SymPoly& at(int s) const;  // 1-based, InvalidInput out of range
};

// the series whose U^s/s! coefficient is (q-1) log of
// sum_s R_s(x_1)...R_s(x_k) (U/(q-1))^s/s!, truncated at order r;
// every coefficient is checked to be a polynomial in q
USeries genfun_series(int r, int k);

// coefficient of m_{sorted tilde-mu^1} ... m_{sorted tilde-mu^k} in the
// order-r series; NotAPartition when some |mu^i| > r
IntPoly kac_via_genfun(const MultiPartition& mu);

}  // namespace kac
