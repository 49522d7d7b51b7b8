#pragma once

// Twisting groups G_C = Aut(C) x| Gal(K/Q) of the D8 and D12 families, the twisting
// representation theta_C on End^0_K(J(C)), and exact character theory over Q(zeta_24).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/curves.hpp"
#include "twistlab/cyclotomic.hpp"
#include "twistlab/field.hpp"
#include "twistlab/radicals.hpp"

namespace twistlab::groups {

using curves::Family;

/// Finite group given by its multiplication table; element 0 is the identity.
struct FiniteGroup {
  std::vector<std::vector<int>> table;
  std::vector<int> inverse;
  std::vector<int> element_order;
  /// Classes ordered by (element order, size, smallest member).
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;

  static FiniteGroup from_table(std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(table.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  int class_count() const { return static_cast<int>(classes.size()); }
  int class_size(int k) const { return static_cast<int>(classes[k].size()); }
  int class_order(int k) const { return element_order[classes[k].front()]; }
};

/// 2x2 matrix (m n; p q) acting as (X,Y) -> ((mX+n)/(pX+q), (mq-np)Y/(pX+q)^3).
using AutMatrix = std::array<BiquadraticNumber, 4>;
AutMatrix multiply(const AutMatrix& a, const AutMatrix& b);
AutMatrix conjugate(const AutMatrix& a, const galois::MultiquadraticField& field, galois::GaloisElement g);

/// Rational coordinates in the basis {1, U*, V*, U*V*} of End^0_K(J(C)).
using EndElement = std::array<Rational, 4>;

/// The 4-dimensional algebra End^0_K(J(C)) for the D8 or D12 family.
/// D8: U*^2 = 1, V*^2 = -1, U*V* = -V*U*. D12: U*^2 = 1, V*^2 = V* - 1, U*V* = (1 - V*)U*.
class EndAlgebra {
 public:
  explicit EndAlgebra(Family family);
  EndElement multiply(const EndElement& a, const EndElement& b) const;
  static EndElement basis(int k);
  static EndElement one() { return basis(0); }
  /// Matrix of left multiplication by a, columns are images of the basis.
  std::array<std::array<Rational, 4>, 4> left_regular(const EndElement& a) const;

 private:
  // products of basis elements: table_[i][j] = e_i * e_j
  std::array<std::array<EndElement, 4>, 4> table_;
};

/// Which square class the family parameter falls into.
enum class ArithmeticCase {
  Generic,     ///< u and 2u (resp. 3u) non-squares, [K:Q] = 4
  USquare,     ///< u a square, K = Q(sqrt 2) (resp. Q(sqrt 3))
  TwistSquare  ///< 2u (resp. 3u) a square
};
std::string to_string(ArithmeticCase c);
ArithmeticCase arithmetic_case(Family family, const Rational& u);

/// Aut(C) as explicit matrices over K together with the Galois action lambda_C.
struct AutGroup {
  Family family;
  Rational u;
  galois::MultiquadraticField field;  ///< K: generators (squarefree(u), 2 or 3), deduplicated
  std::vector<AutMatrix> matrices;    ///< index 0 is the identity
  std::vector<std::string> words;     ///< shortest word in U, V for each element
  std::vector<EndElement> end_image;  ///< alpha -> alpha* in End^0_K(J(C))
  FiniteGroup group;
  int U = -1;
  int V = -1;
  int w = -1;  ///< hyperelliptic involution, the matrix -1
  /// galois_action[mask][alpha] = index of ^sigma alpha
  std::vector<std::vector<int>> galois_action;

  int find(const AutMatrix& m) const;
};

/// Generates Aut(C) from the explicit U, V of the family and verifies the defining relations.
AutGroup build_aut_group(Family family, const Rational& u);

/// lambda_C(sigma)(alpha) = ^sigma alpha, computed entrywise and matched in the group.
int galois_action(const AutGroup& aut, galois::GaloisElement sigma, int alpha);

using Matrix4 = std::array<std::array<Rational, 4>, 4>;
Matrix4 identity4();
Matrix4 operator*(const Matrix4& a, const Matrix4& b);
Rational trace(const Matrix4& m);

/// Values of a class function, one per conjugacy class of the group it lives on.
struct ClassFunction {
  std::vector<CyclotomicValue> values;
  bool operator==(const ClassFunction&) const = default;
};

struct TwistingGroupElement {
  int aut = 0;
  galois::GaloisElement sigma;
};

class TwistingGroup {
 public:
  TwistingGroup(Family family, const Rational& u);

  const AutGroup& aut() const { return aut_; }
  const FiniteGroup& group() const { return group_; }
  const FiniteGroup& subgroup() const { return aut_.group; }  ///< H_C = Aut(C)
  Family family() const { return aut_.family; }
  ArithmeticCase arithmetic() const { return case_; }
  const EndAlgebra& algebra() const { return algebra_; }
  int galois_degree() const { return static_cast<int>(aut_.field.degree()); }

  int index(TwistingGroupElement e) const { return e.aut * galois_degree() + static_cast<int>(e.sigma.mask); }
  TwistingGroupElement element(int g) const {
    return {g / galois_degree(), {static_cast<std::uint32_t>(g % galois_degree())}};
  }
  /// Index in G_C of (alpha, id).
  int embed(int alpha) const { return alpha * galois_degree(); }

  /// theta_C((alpha, sigma))(psi) = alpha o ^sigma psi on the basis {1, U*, V*, U*V*}.
  const Matrix4& theta(int g) const { return theta_[g]; }
  ClassFunction theta_character() const;

 private:
  AutGroup aut_;
  ArithmeticCase case_;
  EndAlgebra algebra_;
  FiniteGroup group_;
  std::vector<Matrix4> theta_;
};

Matrix4 theta_matrix(const TwistingGroup& g, TwistingGroupElement e);

/// Hard-coded appendix table, exactly as tabulated apart from the resolved order-8 entry.
struct TableData {
  std::string caption;
  std::string gap_id;
  int order = 0;
  std::vector<std::string> class_labels;
  std::vector<int> class_sizes;
  std::vector<std::string> character_labels;
  std::vector<std::vector<CyclotomicValue>> rows;

  int class_order(int column) const;  ///< from the label, e.g. "12A" -> 12
};

const TableData& appendix_table(Family family, ArithmeticCase arith);
std::vector<const TableData*> all_appendix_tables();

/// Outcome of the order-8 entry resolution for the GAP(16,7) table.
struct Zeta8Resolution {
  struct Candidate {
    std::string name;
    CyclotomicValue value;
    bool orthogonal;
    bool matches_group;  ///< class-algebra consistent with G_C for (d8, u = 2)
  };
  std::vector<Candidate> candidates;
  std::string chosen;
};
Zeta8Resolution resolve_gap16_7_entry();

struct TableCheck {
  bool row_orthogonality = false;
  bool column_orthogonality = false;
  bool degree_sum = false;
  bool degrees_match_identity_column = false;
  bool class_sizes_sum = false;
  std::vector<std::string> failures;
  bool ok() const {
    return row_orthogonality && column_orthogonality && degree_sum && degrees_match_identity_column &&
           class_sizes_sum;
  }
};
TableCheck verify_table_data(const TableData& t);

/// Appendix table attached to a computed group: column_to_class maps table columns to computed
/// classes; characters are re-indexed to computed classes.
struct CharacterTable {
  const TableData* data = nullptr;
  std::vector<int> column_to_class;
  std::vector<ClassFunction> characters;
  /// Number of column bijections consistent with the class-algebra structure constants.
  int admissible_matchings = 0;
  std::vector<std::vector<int>> admissible_maps;
};

/// Matches columns to classes by (element order, class size) and then checks that every
/// character satisfies omega(K_i) omega(K_j) = sum_k a_ijk omega(K_k); the first admissible
/// bijection in lexicographic order is kept. Throws InternalError when none exists.
CharacterTable character_table(const TwistingGroup& g);
/// Same matching against an explicit table.
CharacterTable match_table(const TwistingGroup& g, const TableData& data);

Rational inner_product(const FiniteGroup& g, const ClassFunction& a, const ClassFunction& b);
/// Multiplicities (chi, chi_i); exact rationals.
std::vector<Rational> decompose(const FiniteGroup& g, const ClassFunction& chi, const CharacterTable& table);
ClassFunction regular_character(const FiniteGroup& g);

ClassFunction restrict_character(const TwistingGroup& g, const ClassFunction& chi);
ClassFunction induce_character(const TwistingGroup& g, const ClassFunction& psi);
ClassFunction scale(const ClassFunction& chi, const Rational& s);

/// lambda_phi for the quadratic twist by d: L = K(sqrt d), sigma -> (w^{eps_d(sigma)}, sigma|_K).
struct QuadraticCocycle {
  Integer d;
  galois::MultiquadraticField field;  ///< L, generators of K followed by d
  std::vector<int> image;             ///< image[mask of Gal(L/Q)] = element of G_C
};

/// Rejects d when sqrt(d) lies in K. Verifies the homomorphism property and injectivity.
QuadraticCocycle lambda_phi_quadratic(const TwistingGroup& g, const Integer& d);

}  // namespace twistlab::groups
