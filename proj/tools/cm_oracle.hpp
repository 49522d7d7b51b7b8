#pragma once

// Floating-point oracle for Hilbert class polynomials of class number <= 2: sum over
// reduced primitive forms, j from the q-expansion E4^3 / Delta at 200 decimal digits,
// coefficients rounded to the nearest integer. Used by gen_cm_table and its regression test.

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_complex.hpp>

namespace twistlab::cm_oracle {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
using Complex = boost::multiprecision::number<boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<200>>>;

struct Form {
  long a, b, c;
};

/// Reduced primitive positive definite forms of discriminant d < 0.
inline std::vector<Form> reduced_forms(long d) {
  std::vector<Form> out;
  for (long a = 1; 3 * a * a <= -d; ++a)
    for (long b = -a + 1; b <= a; ++b) {
      const long num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const long c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      out.push_back({a, b, c});
    }
  return out;
}

inline Complex j_invariant(const Form& f, long d) {
  const Real pi = boost::math::constants::pi<Real>();
  const Real sq = sqrt(Real(-d));
  // q = exp(2 pi i tau), tau = (-b + i sqrt|d|) / (2a)
  const Real re = -pi * f.b / f.a;
  const Real mag = exp(-pi * sq / f.a);
  const Complex q(mag * cos(re), mag * sin(re));
  Complex e4(1), prod(1), qn(1);
  for (int n = 1; n < 2000; ++n) {
    qn *= q;
    if (abs(qn) < Real("1e-190")) break;
    long s3 = 0;
    for (long k = 1; k <= n; ++k)
      if (n % k == 0) s3 += k * k * k;
    e4 += Real(240 * s3) * qn;
    const Complex t = Complex(1) - qn;
    Complex t24 = t;
    for (int k = 1; k < 24; ++k) t24 *= t;
    prod *= t24;
  }
  return e4 * e4 * e4 / (q * prod);
}

struct OracleEntry {
  long d;
  std::vector<std::string> coefficients;  ///< monic, constant term first
  Real max_rounding_error;
  Real max_relative_error;
};

inline OracleEntry hilbert_class_polynomial(long d) {
  const auto forms = reduced_forms(d);
  std::vector<Complex> poly{Complex(1)};
  for (const auto& f : forms) {
    const Complex j = j_invariant(f, d);
    std::vector<Complex> next(poly.size() + 1, Complex(0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * j;
    }
    poly = std::move(next);
  }
  OracleEntry e{d, {}, Real(0), Real(0)};
  for (const auto& c : poly) {
    const Real r = round(c.real());
    const Real err = abs(c - Complex(r));
    e.max_rounding_error = std::max(e.max_rounding_error, err);
    if (r != 0) e.max_relative_error = std::max(e.max_relative_error, err / abs(r));
    e.coefficients.push_back(r.str(0, std::ios_base::fixed));
  }
  for (auto& s : e.coefficients) {
    if (auto dot = s.find('.'); dot != std::string::npos) s.erase(dot);
    if (s == "-0") s = "0";
  }
  return e;
}

/// Discriminants of imaginary quadratic orders with class number 1 (13) and 2 (29).
inline const std::vector<long>& class_number_le2_discriminants() {
  static const std::vector<long> d{-3,   -4,   -7,   -8,   -11,  -12,  -16,  -19,  -27,  -28,  -43,
                                   -67,  -163, -15,  -20,  -24,  -32,  -35,  -36,  -40,  -48,  -51,
                                   -52,  -60,  -64,  -72,  -75,  -88,  -91,  -99,  -100, -112, -115,
                                   -123, -147, -148, -187, -232, -235, -267, -403, -427};
  return d;
}

}  // namespace twistlab::cm_oracle
