#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistlab/curves.hpp"
#include "twistlab/numbers.hpp"
#include "twistlab/polynomial.hpp"

namespace twistlab::cm {

/// a + b sqrt(m) in Q(sqrt m), m squarefree (m = 1 folds b into a).
class QuadSurd {
 public:
  QuadSurd(Rational a = 0, Rational b = 0, Integer m = 1);
  /// sqrt(u) for a nonzero rational u.
  static QuadSurd sqrt_of(const Rational& u);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& radicand() const { return m_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadSurd operator+(const QuadSurd& o) const;
  QuadSurd operator-(const QuadSurd& o) const;
  QuadSurd operator*(const QuadSurd& o) const;
  QuadSurd operator/(const QuadSurd& o) const;
  QuadSurd conj() const { return QuadSurd(a_, -b_, m_); }
  bool operator==(const QuadSurd& o) const;

  std::string to_string() const;

 private:
  void check(const QuadSurd& o) const;
  Integer common(const QuadSurd& o) const;
  Rational a_, b_;
  Integer m_;
};

/// j-invariant of the elliptic quotient. sign = -1 selects the upper signs of the
/// two-case formula (3 - 10 sqrt u for D8), sign = +1 the lower ones; equivalently the
/// formula is evaluated at t = sign * sqrt(u). Rejects u = 1/4 (pole) and u = 0.
QuadSurd j_quotient(curves::Family family, const Rational& u, int sign);

struct RawHilbertEntry {
  long discriminant;
  std::vector<const char*> coefficients;  ///< constant term first, monic
};
const std::vector<RawHilbertEntry>& raw_hilbert_table();

struct HilbertEntry {
  long discriminant;
  IntPolynomial polynomial;
};
/// The 13 + 29 Hilbert class polynomials of class number <= 2.
const std::vector<HilbertEntry>& cm_table();

/// Discriminant D with H_D(j) = 0, if any.
std::optional<long> is_cm_j(const QuadSurd& j);

/// True if either elliptic quotient has CM.
bool is_cm_parameter(curves::Family family, const Rational& u);

/// All admissible rational u for which some j_quotient is a CM j-invariant, ascending.
std::vector<Rational> cm_scan(curves::Family family);

/// Published exclusion lists, verbatim as (numerator, denominator) strings.
const std::vector<std::pair<std::string, std::string>>& published_cm_list(curves::Family family);

struct ListComparison {
  curves::Family family;
  std::vector<Rational> scan;
  std::vector<std::string> published;          ///< as printed
  std::vector<Rational> published_canonical;   ///< lowest terms
  std::vector<Rational> missing_from_scan;     ///< published (canonical) but not found
  std::vector<Rational> extra_in_scan;         ///< found but not published
  std::vector<std::string> notes;
  /// Exact agreement, or disagreement confined to the flagged 6480/25920 entry.
  bool acceptable = false;
  bool exact = false;
};
ListComparison compare_with_published(curves::Family family);

}  // namespace twistlab::cm
