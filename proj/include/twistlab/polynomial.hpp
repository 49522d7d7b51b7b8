#pragma once

#include <string>
#include <vector>

#include "twistlab/numbers.hpp"

namespace twistlab {

/// Dense polynomial with coefficient type Integer or Rational, lowest degree first,
/// kept trimmed (no trailing zeros; the zero polynomial has no coefficients).
template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }  // NOLINT
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& leading() const { return c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const {
    std::vector<T> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) + o.coeff(k);
    return Poly(std::move(v));
  }
  Poly operator-() const {
    std::vector<T> v(c_);
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<T> v(c_.size() + o.c_.size() - 1);
    for (std::size_t a = 0; a < c_.size(); ++a) {
      if (c_[a] == 0) continue;
      for (std::size_t b = 0; b < o.c_.size(); ++b) v[a + b] += c_[a] * o.c_[b];
    }
    return Poly(std::move(v));
  }
  Poly operator*(const T& s) const {
    std::vector<T> v(c_);
    for (auto& x : v) x *= s;
    return Poly(std::move(v));
  }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly pow(unsigned e) const {
    Poly out({T(1)});
    for (unsigned k = 0; k < e; ++k) out = out * *this;
    return out;
  }

  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + U(c_[k]);
    return acc;
  }

  /// P(s*T).
  Poly scale_variable(const T& s) const {
    std::vector<T> v(c_);
    T f(1);
    for (auto& x : v) {
      x *= f;
      f *= s;
    }
    return Poly(std::move(v));
  }

  Poly derivative() const {
    std::vector<T> v;
    for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * T(static_cast<long>(k)));
    return Poly(std::move(v));
  }

  std::string to_string(const char* var = "T") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Poly<Integer>;
using RatPolynomial = Poly<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

/// Quotient and remainder over Q; throws on division by zero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial monic_gcd(RatPolynomial a, RatPolynomial b);

/// Exact divisibility in Z[T]: true iff b | a with an integral quotient (b != 0).
bool divides(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient = nullptr);

/// Primitive integer multiple of a rational polynomial (positive leading coefficient).
IntPolynomial primitive_part(const RatPolynomial& p);

Integer resultant(const IntPolynomial& f, const IntPolynomial& g);
/// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f).
Integer discriminant(const IntPolynomial& f);

/// Distinct rational roots, ascending. Real roots are isolated with Sturm sequences and
/// refined by exact bisection; candidates from continued fractions are verified exactly.
std::vector<Rational> rational_roots(const RatPolynomial& p);

}  // namespace twistlab
