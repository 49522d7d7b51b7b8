#pragma once

#include <map>
#include <string>

#include "twistlab/field.hpp"
#include "twistlab/numbers.hpp"

namespace twistlab {

/// Exact element of a multiquadratic field, stored as sum_r c_r * sqrt(r) over squarefree r.
/// sqrt(r) for r < 0 means i*sqrt(|r|), so sqrt(a)*sqrt(b) = -sqrt(|ab|) when a, b < 0.
/// For the biquadratic fields used here the support is a subset of {1, m1, m2, m1*m2} up to
/// squarefree normalization.
class BiquadraticNumber {
 public:
  BiquadraticNumber() = default;
  BiquadraticNumber(const Rational& q);  // NOLINT(google-explicit-constructor)
  BiquadraticNumber(long v) : BiquadraticNumber(Rational(v)) {}  // NOLINT

  /// c * sqrt(radicand), radicand reduced to its squarefree part.
  static BiquadraticNumber surd(const Rational& c, const Integer& radicand);
  /// The principal sqrt(q) of a nonzero rational (i*sqrt(|q|) for q < 0).
  static BiquadraticNumber sqrt_of(const Rational& q);

  BiquadraticNumber operator+(const BiquadraticNumber& o) const;
  BiquadraticNumber operator-(const BiquadraticNumber& o) const;
  BiquadraticNumber operator-() const;
  BiquadraticNumber operator*(const BiquadraticNumber& o) const;
  bool operator==(const BiquadraticNumber& o) const { return terms_ == o.terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of sqrt(r) (r squarefree).
  Rational coefficient(const Integer& r) const;
  const std::map<Integer, Rational>& terms() const { return terms_; }

  /// Field automorphism g of `field` applied termwise.
  BiquadraticNumber conjugate(const galois::MultiquadraticField& field, galois::GaloisElement g) const;

  std::string to_string() const;

 private:
  void add_term(const Integer& r, const Rational& c);
  std::map<Integer, Rational> terms_;
};

}  // namespace twistlab
