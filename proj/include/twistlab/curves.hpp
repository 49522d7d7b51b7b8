#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/numbers.hpp"
#include "twistlab/polynomial.hpp"

namespace twistlab::curves {

enum class Family { D8, D12 };
enum class ModelTag { D8Family, D12Family, D8Alt, D12Alt, Custom };

std::string to_string(Family f);
std::string to_string(ModelTag t);
Family parse_family(const std::string& s);

/// Rejects u = 0 and the two degenerate parameters of each family.
void check_parameter(Family family, const Rational& u);

/// Y^2 = f(X) over Q with deg f in {5, 6} and disc f != 0.
class GenusTwoCurve {
 public:
  /// Validates degree and squarefreeness; `twist` records the accumulated quadratic twist.
  GenusTwoCurve(RatPolynomial f, ModelTag tag, std::optional<Rational> u = std::nullopt, Integer twist = 1);

  const RatPolynomial& f() const { return f_; }
  ModelTag tag() const { return tag_; }
  const std::optional<Rational>& parameter() const { return u_; }
  const Integer& twist() const { return twist_; }
  int degree() const { return f_.degree(); }
  /// True for the alternate models, which are only Qbar-isomorphic to the family curve.
  bool is_alternate_model() const { return tag_ == ModelTag::D8Alt || tag_ == ModelTag::D12Alt; }

  /// c^2 * f with c the lcm of the denominators: Y'^2 = g(X) with Y' = cY.
  const IntPolynomial& integral_model() const { return g_; }
  const Integer& denominator() const { return c_; }
  const Integer& discriminant() const { return disc_; }

  /// Canonical spec string, e.g. "d8:u=3", "custom:f=[1,-1,0,0,0,1];twist=-1".
  std::string spec() const;

 private:
  RatPolynomial f_;
  ModelTag tag_;
  std::optional<Rational> u_;
  Integer twist_;
  IntPolynomial g_;
  Integer c_;
  Integer disc_;
};

GenusTwoCurve d8_curve(const Rational& u);
GenusTwoCurve d12_curve(const Rational& u);
/// Y^2 = X^5 + X^3 + uX (D8) or Y^2 = X^6 + X^3 + u (D12).
GenusTwoCurve alt_model(Family family, const Rational& u);
GenusTwoCurve custom_curve(const std::vector<Rational>& coeffs);

/// Y^2 = d f(X). d must be squarefree and nonzero.
GenusTwoCurve quadratic_twist(const GenusTwoCurve& c, const Integer& d);

/// Conservative bad-reduction predicate: 2, primes dividing a coefficient denominator,
/// the leading coefficient of the integral model, or its discriminant.
bool is_bad_prime(const GenusTwoCurve& c, std::uint64_t p);
std::vector<std::uint64_t> bad_primes(const GenusTwoCurve& c, std::uint64_t bound);

/// #C(F_{p^k}), k in {1, 2}, on the smooth projective model. Rejects bad p.
std::uint64_t count_points(const GenusTwoCurve& c, std::uint64_t p, int extension_degree);

/// L_p(C, T) = 1 + c1 T + c2 T^2 + c3 T^3 + c4 T^4.
struct LocalFactor {
  std::uint64_t p = 0;
  std::array<std::int64_t, 5> c{};
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;

  IntPolynomial polynomial() const;
  /// Trace of Frobenius s1 = -c1.
  std::int64_t trace() const { return -c[1]; }
  /// Functional equation, Weil bound and count round trip. Empty string when consistent.
  std::string validate() const;
  bool operator==(const LocalFactor&) const = default;
};

/// Builds the factor from N1 = #C(F_p), N2 = #C(F_{p^2}); throws InternalError if the counts
/// are inconsistent (non-integral e2).
LocalFactor local_factor_from_counts(std::uint64_t p, std::uint64_t n1, std::uint64_t n2);
LocalFactor local_factor(const GenusTwoCurve& c, std::uint64_t p);

}  // namespace twistlab::curves
