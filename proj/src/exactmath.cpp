#include "kac/exactmath.hpp"

#include <algorithm>
#include <sstream>

namespace kac {

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::variable() { return monomial(1, 1); }

IntPoly IntPoly::monomial(Int coeff, int degree) {
  if (degree < 0) throw InvalidInput("monomial degree must be nonnegative");
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(static_cast<size_t>(degree) + 1, Int(0));
    p.c_.back() = std::move(coeff);
  }
  return p;
}

Int IntPoly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(d)];
}

Int IntPoly::leading() const { return c_.empty() ? Int(0) : c_.back(); }

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> prod(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(prod));
}

IntPoly IntPoly::pow(int e) const {
  if (e < 0) throw InvalidInput("negative polynomial exponent");
  IntPoly r = IntPoly::constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

namespace {

void append_term(std::ostringstream& out, bool first, const Int& c,
                 const std::string& vars) {
  Int a = abs(c);
  if (first) {
    if (c < 0) out << '-';
  } else {
    out << (c < 0 ? '-' : '+');
  }
  if (vars.empty()) {
    out << a.get_str();
  } else {
    if (a != 1) out << a.get_str();
    out << vars;
  }
}

std::string power_str(const char* v, int d) {
  if (d == 0) return "";
  std::string s(v);
  if (d > 1) s += "^" + std::to_string(d);
  return s;
}

}  // namespace

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Int& c = c_[static_cast<size_t>(d)];
    if (c == 0) continue;
    append_term(out, first, c, power_str("q", d));
    first = false;
  }
  return out.str();
}

Int poly_eval(const IntPoly& f, const Int& x) { return f.eval(x); }

IntPoly poly_interpolate(const std::vector<std::pair<Int, Int>>& points) {
  if (points.empty()) throw InvalidInput("interpolation needs at least one point");
  const size_t n = points.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw InvalidInput("repeated interpolation abscissa " +
                           points[i].first.get_str());

  // Lagrange over Q: sum_i y_i * prod_{j!=i} (q - x_j)/(x_i - x_j)
  std::vector<Rat> acc(n, Rat(0));
  std::vector<Rat> basis;
  for (size_t i = 0; i < n; ++i) {
    basis.assign(1, Rat(1));
    Rat denom(1);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      basis.push_back(Rat(0));
      for (size_t d = basis.size() - 1; d > 0; --d)
        basis[d] = basis[d - 1] - Rat(points[j].first) * basis[d];
      basis[0] = -Rat(points[j].first) * basis[0];
      denom *= Rat(points[i].first) - Rat(points[j].first);
    }
    Rat scale = Rat(points[i].second) / denom;
    for (size_t d = 0; d < basis.size(); ++d) acc[d] += scale * basis[d];
  }

  std::vector<Int> coeffs(n, Int(0));
  for (size_t d = 0; d < n; ++d) {
    if (acc[d].get_den() != 1)
      throw NonIntegerCoefficients("interpolant has coefficient " +
                                   acc[d].get_str() + " at degree " +
                                   std::to_string(d));
    coeffs[d] = acc[d].get_num();
  }
  return IntPoly(std::move(coeffs));
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("exact division by zero polynomial");
  if (a.is_zero()) return IntPoly();
  IntPoly r = a;
  std::vector<Int> quot;
  int db = b.degree();
  if (r.degree() < db) throw InvalidInput("inexact polynomial division");
  quot.assign(static_cast<size_t>(r.degree() - db) + 1, Int(0));
  while (!r.is_zero() && r.degree() >= db) {
    Int lead = r.leading();
    if (!mpz_divisible_p(lead.get_mpz_t(), b.leading().get_mpz_t()))
      throw InvalidInput("inexact polynomial division");
    Int c = lead / b.leading();
    int d = r.degree() - db;
    quot[static_cast<size_t>(d)] = c;
    r -= IntPoly::monomial(c, d) * b;
  }
  if (!r.is_zero()) throw InvalidInput("inexact polynomial division");
  return IntPoly(std::move(quot));
}

namespace {

Int int_content(const IntPoly& f) {
  Int g = 0;
  for (const Int& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;  // zero for the zero polynomial
}

IntPoly scale_down(const IntPoly& f, const Int& g) {
  std::vector<Int> c = f.coeffs();
  for (auto& x : c) x /= g;
  return IntPoly(std::move(c));
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  return scale_down(f, int_content(f));
}

// pseudo-remainder: reduce a by b without leaving Z[q]
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    Int la = a.leading();
    int shift = a.degree() - db;
    IntPoly scaled(a.coeffs());
    scaled *= IntPoly::constant(b.leading());
    a = scaled - IntPoly::monomial(la, shift) * b;
  }
  return a;
}

IntPoly make_leading_positive(IntPoly f) {
  if (f.leading() < 0) return -f;
  return f;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  if (a.is_zero()) return make_leading_positive(std::move(b));
  if (b.is_zero()) return make_leading_positive(std::move(a));
  Int ca = int_content(a), cb = int_content(b);
  Int cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly A = scale_down(a, ca), B = scale_down(b, cb);
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    IntPoly R = primitive_part(pseudo_rem(A, B));
    A = std::move(B);
    B = std::move(R);
  }
  return make_leading_positive(A * IntPoly::constant(cg));
}

BiPoly BiPoly::constant(Int c) { return monomial(std::move(c), 0, 0); }

BiPoly BiPoly::monomial(Int coeff, int dx, int dy) {
  if (dx < 0 || dy < 0) throw InvalidInput("monomial degree must be nonnegative");
  BiPoly p;
  if (coeff != 0) p.t_[{dx, dy}] = std::move(coeff);
  return p;
}

Int BiPoly::coeff(int dx, int dy) const {
  auto it = t_.find({dx, dy});
  return it == t_.end() ? Int(0) : it->second;
}

void BiPoly::insert(int dx, int dy, const Int& c) {
  auto [it, fresh] = t_.try_emplace({dx, dy}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [deg, c] : o.t_) insert(deg.first, deg.second, c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly prod;
  for (const auto& [da, ca] : a.t_)
    for (const auto& [db, cb] : b.t_)
      prod.insert(da.first + db.first, da.second + db.second, ca * cb);
  return prod;
}

Int BiPoly::eval(const Int& x, const Int& y) const {
  Int acc = 0;
  for (const auto& [deg, c] : t_) {
    Int term = c;
    for (int i = 0; i < deg.first; ++i) term *= x;
    for (int i = 0; i < deg.second; ++i) term *= y;
    acc += term;
  }
  return acc;
}

IntPoly BiPoly::at_x(const Int& x0) const {
  std::vector<Int> coeffs;
  for (const auto& [deg, c] : t_) {
    if (deg.second >= static_cast<int>(coeffs.size()))
      coeffs.resize(static_cast<size_t>(deg.second) + 1, Int(0));
    Int term = c;
    for (int i = 0; i < deg.first; ++i) term *= x0;
    coeffs[static_cast<size_t>(deg.second)] += term;
  }
  return IntPoly(std::move(coeffs));
}

std::string BiPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [deg, c] = *it;
    append_term(out, first, c, power_str("x", deg.first) + power_str("y", deg.second));
    first = false;
  }
  return out.str();
}

RatFunc RatFunc::of(IntPoly num, IntPoly den) {
  RatFunc f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  f.normalize();
  return f;
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly::constant(1);
    return;
  }
  IntPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0 || g.leading() != 1) {
    num_ = poly_divexact(num_, g);
    den_ = poly_divexact(den_, g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool RatFunc::is_polynomial() const {
  return den_.degree() == 0 && den_.leading() == 1;
}

IntPoly RatFunc::as_polynomial() const {
  if (!is_polynomial())
    throw NotAPolynomial("rational function has denominator " + den_.str());
  return num_;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc::of(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero rational function");
  return RatFunc::of(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace kac
