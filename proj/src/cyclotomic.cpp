#include "twistlab/cyclotomic.hpp"

#include <vector>

namespace twistlab {

namespace {

// Reduce a polynomial of degree < 2*kDegree modulo z^8 = z^4 - 1.
std::array<Rational, CyclotomicValue::kDegree> reduce(std::vector<Rational> poly) {
  constexpr int n = CyclotomicValue::kDegree;
  for (int k = static_cast<int>(poly.size()) - 1; k >= n; --k) {
    if (poly[k] == 0) continue;
    const Rational c = poly[k];
    poly[k] = 0;
    poly[k - 4] += c;
    poly[k - 8] -= c;
  }
  std::array<Rational, n> out{};
  for (int k = 0; k < n && k < static_cast<int>(poly.size()); ++k) out[k] = poly[k];
  return out;
}

}  // namespace

CyclotomicValue::CyclotomicValue(const Rational& q) { coeffs_[0] = q; }

CyclotomicValue CyclotomicValue::zeta_power(long k) {
  long e = ((k % kOrder) + kOrder) % kOrder;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1);
  poly[e] = 1;
  CyclotomicValue out;
  out.coeffs_ = reduce(std::move(poly));
  return out;
}

CyclotomicValue CyclotomicValue::operator+(const CyclotomicValue& o) const {
  CyclotomicValue out;
  for (int k = 0; k < kDegree; ++k) out.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
  return out;
}

CyclotomicValue CyclotomicValue::operator-(const CyclotomicValue& o) const { return *this + (-o); }

CyclotomicValue CyclotomicValue::operator-() const {
  CyclotomicValue out;
  for (int k = 0; k < kDegree; ++k) out.coeffs_[k] = -coeffs_[k];
  return out;
}

CyclotomicValue CyclotomicValue::operator*(const CyclotomicValue& o) const {
  std::vector<Rational> poly(2 * kDegree - 1);
  for (int a = 0; a < kDegree; ++a) {
    if (coeffs_[a] == 0) continue;
    for (int b = 0; b < kDegree; ++b)
      if (o.coeffs_[b] != 0) poly[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  CyclotomicValue out;
  out.coeffs_ = reduce(std::move(poly));
  return out;
}

CyclotomicValue CyclotomicValue::operator*(const Rational& q) const {
  CyclotomicValue out;
  for (int k = 0; k < kDegree; ++k) out.coeffs_[k] = coeffs_[k] * q;
  return out;
}

CyclotomicValue CyclotomicValue::galois(int k) const {
  CyclotomicValue out;
  for (int e = 0; e < kDegree; ++e)
    if (coeffs_[e] != 0) out += zeta_power(static_cast<long>(e) * k) * coeffs_[e];
  return out;
}

bool CyclotomicValue::is_rational() const {
  for (int k = 1; k < kDegree; ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

Rational CyclotomicValue::as_rational() const {
  ensure(is_rational(), "cyclotomic value " + render() + " is not rational");
  return coeffs_[0];
}

std::string CyclotomicValue::render() const {
  if (is_rational()) return to_string(coeffs_[0]);
  struct Named {
    CyclotomicValue unit;
    const char* name;
  };
  const Named names[] = {{i(), "i"},
                         {sqrt2(), "sqrt2"},
                         {sqrt_minus3(), "sqrt(-3)"},
                         {zeta8(), "zeta8"},
                         {sqrt2() * i(), "i*sqrt2"}};
  for (const auto& [unit, name] : names) {
    // this == c * unit with c rational?
    Rational c;
    for (int k = 0; k < kDegree; ++k)
      if (unit.coeffs_[k] != 0) {
        c = coeffs_[k] / unit.coeffs_[k];
        break;
      }
    if (c != 0 && unit * c == *this) {
      if (c == 1) return name;
      if (c == -1) return std::string("-") + name;
      return to_string(c) + std::string(name);
    }
  }
  std::string s;
  for (int k = 0; k < kDegree; ++k) {
    if (coeffs_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(coeffs_[k]) + ")";
    if (k > 0) s += "*z24^" + std::to_string(k);
  }
  return s;
}

}  // namespace twistlab
