/*
  exactmath.hpp — exact univariate/bivariate integer polynomials and rational
  functions over Z[q], backed by GMP. No floating point anywhere.

  IntPoly stores coefficients ascending by degree with no trailing zeros, so
  equality of values is equality of representations. The zero polynomial is
  the empty coefficient vector and reports degree() == -1.
*/
#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kac/errors.hpp"

namespace kac {

using Int = mpz_class;
using Rat = mpq_class;

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly constant(Int c);
  static IntPoly variable();                 // the polynomial q
  static IntPoly monomial(Int coeff, int degree);

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1 (stands in for -infinity)
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int d) const;
  const std::vector<Int>& coeffs() const { return c_; }
  Int leading() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly operator-() const;
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  IntPoly pow(int e) const;
  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  // "q^2+5q+11": descending powers, no spaces, coefficient 1 omitted on
  // nonconstant terms, "q" for degree one, "0" for the zero polynomial.
  std::string str() const;

 private:
  void trim();
  std::vector<Int> c_;  // c_[d] is the coefficient of q^d
};

Int poly_eval(const IntPoly& f, const Int& x);

// Lagrange interpolation through integer points with pairwise distinct
// abscissae. Throws NonIntegerCoefficients when the interpolant is not in
// Z[q], InvalidInput on an empty list or repeated abscissae.
IntPoly poly_interpolate(const std::vector<std::pair<Int, Int>>& points);

// Exact division; throws InvalidInput when b is zero or does not divide a.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);

// Primitive gcd over Z[q] with positive leading coefficient; gcd(0,0) = 0.
IntPoly poly_gcd(IntPoly a, IntPoly b);

class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly constant(Int c);
  static BiPoly monomial(Int coeff, int dx, int dy);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }

  bool is_zero() const { return t_.empty(); }
  Int coeff(int dx, int dy) const;
  const std::map<std::pair<int, int>, Int>& terms() const { return t_; }

  BiPoly& operator+=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

  Int eval(const Int& x, const Int& y) const;
  // substitute a constant for x, leaving a polynomial in y
  IntPoly at_x(const Int& x0) const;

  // "x^4+2x^3+3x^2+x+y^2+4y": terms in descending lexicographic order of
  // (x-degree, y-degree), so the x block precedes the y block.
  std::string str() const;

 private:
  void insert(int dx, int dy, const Int& c);
  std::map<std::pair<int, int>, Int> t_;
};

/*
  Reduced rational function num/den over Z[q]. Canonical form: the pair is
  coprime in Z[q], jointly primitive over Z, and den has positive leading
  coefficient. Zero is 0/1.
*/
class RatFunc {
 public:
  RatFunc() : num_(), den_(IntPoly::constant(1)) {}
  RatFunc(IntPoly p) : num_(std::move(p)), den_(IntPoly::constant(1)) {}
  static RatFunc of(IntPoly num, IntPoly den);  // throws DivisionByZero

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  IntPoly as_polynomial() const;  // throws NotAPolynomial

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  std::string str() const;

 private:
  void normalize();
  IntPoly num_, den_;
};

inline RatFunc ratfunc_normalize(IntPoly num, IntPoly den) {
  return RatFunc::of(std::move(num), std::move(den));
}

}  // namespace kac
