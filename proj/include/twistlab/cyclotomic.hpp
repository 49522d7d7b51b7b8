#pragma once

#include <array>
#include <string>

#include "twistlab/numbers.hpp"

namespace twistlab {

/// Exact element of Q(zeta_24) in the power basis 1, z, ..., z^7, z = exp(2 pi i / 24),
/// reduced modulo the cyclotomic polynomial z^8 - z^4 + 1.
class CyclotomicValue {
 public:
  static constexpr int kDegree = 8;
  static constexpr int kOrder = 24;

  CyclotomicValue() = default;
  CyclotomicValue(const Rational& q);  // NOLINT(google-explicit-constructor)
  CyclotomicValue(long v) : CyclotomicValue(Rational(v)) {}  // NOLINT

  /// z^k for any integer k.
  static CyclotomicValue zeta_power(long k);
  static CyclotomicValue i() { return zeta_power(6); }
  static CyclotomicValue sqrt2() { return zeta_power(3) + zeta_power(-3); }
  /// sqrt(-3) = 2*zeta_3 + 1.
  static CyclotomicValue sqrt_minus3() { return zeta_power(8) * CyclotomicValue(2) + CyclotomicValue(1); }
  static CyclotomicValue zeta8() { return zeta_power(3); }

  CyclotomicValue operator+(const CyclotomicValue& o) const;
  CyclotomicValue operator-(const CyclotomicValue& o) const;
  CyclotomicValue operator-() const;
  CyclotomicValue operator*(const CyclotomicValue& o) const;
  CyclotomicValue operator*(const Rational& q) const;
  CyclotomicValue& operator+=(const CyclotomicValue& o) { return *this = *this + o; }
  bool operator==(const CyclotomicValue& o) const { return coeffs_ == o.coeffs_; }

  /// Galois automorphism z -> z^k (k coprime to 24).
  CyclotomicValue galois(int k) const;
  /// Complex conjugation.
  CyclotomicValue conj() const { return galois(kOrder - 1); }

  bool is_rational() const;
  /// Throws InternalError unless rational.
  Rational as_rational() const;
  const std::array<Rational, kDegree>& coordinates() const { return coeffs_; }

  /// Readable rendering such as "2", "-2i", "sqrt2", "-sqrt(-3)", falling back to a z-polynomial.
  std::string render() const;

 private:
  std::array<Rational, kDegree> coeffs_{};
};

}  // namespace twistlab
