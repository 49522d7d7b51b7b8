#include <doctest.h>

#include <algorithm>
#include <set>

#include "twistlab/groups.hpp"

using namespace twistlab;
using namespace twistlab::groups;

namespace {

int power(const FiniteGroup& G, int a, int n) {
  int r = 0;
  for (int k = 0; k < n; ++k) r = G.mul(r, a);
  return r;
}

const std::vector<std::pair<Family, long>> kCases{{Family::D8, 3},  {Family::D8, 4},  {Family::D8, 2},
                                                  {Family::D12, 2}, {Family::D12, 4}, {Family::D12, 3}};

std::vector<int> nonzero_indices(const std::vector<Rational>& m) {
  std::vector<int> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) out.push_back(static_cast<int>(i) + 1);
  return out;
}

}  // namespace

TEST_CASE("automorphism group relations") {
  const auto a8 = build_aut_group(Family::D8, 3);
  const auto& G8 = a8.group;
  CHECK(G8.order() == 8);
  CHECK(power(G8, a8.U, 2) == 0);
  CHECK(power(G8, a8.V, 2) == a8.w);
  CHECK(power(G8, a8.V, 4) == 0);
  CHECK(G8.mul(a8.U, a8.V) == G8.mul(power(G8, a8.V, 3), a8.U));

  const auto a12 = build_aut_group(Family::D12, 2);
  const auto& G12 = a12.group;
  CHECK(G12.order() == 12);
  CHECK(power(G12, a12.U, 2) == 0);
  CHECK(power(G12, a12.V, 3) == a12.w);
  CHECK(power(G12, a12.V, 6) == 0);
  CHECK(G12.mul(a12.U, a12.V) == G12.mul(power(G12, a12.V, 5), a12.U));
}

TEST_CASE("Galois action on automorphisms") {
  // D8, u = 3: K = Q(sqrt3, sqrt2); sigma moves sqrt u, tau moves sqrt 2
  const auto a = build_aut_group(Family::D8, 3);
  const auto& G = a.group;
  const galois::GaloisElement id{0}, sigma{1}, tau{2};
  for (int x = 0; x < G.order(); ++x) CHECK(galois_action(a, id, x) == x);
  CHECK(galois_action(a, sigma, a.U) == G.mul(a.U, a.V));
  CHECK(galois_action(a, sigma, a.V) == power(G, a.V, 3));
  // every entry of U carries 1/sqrt2, so tau gives -U = U V^2 (the text states UV)
  CHECK(galois_action(a, tau, a.U) == G.mul(a.U, power(G, a.V, 2)));
  CHECK(galois_action(a, tau, a.V) == a.V);

  // D12, u = 2: K = Q(sqrt2, sqrt3); tau moves sqrt 3
  const auto b = build_aut_group(Family::D12, 2);
  const auto& H = b.group;
  CHECK(galois_action(b, sigma, b.U) == H.mul(b.U, power(H, b.V, 3)));
  CHECK(galois_action(b, sigma, b.V) == power(H, b.V, 5));
  CHECK(galois_action(b, tau, b.U) == b.U);
  CHECK(galois_action(b, tau, b.V) == power(H, b.V, 5));
}

TEST_CASE("End algebra") {
  for (Family f : {Family::D8, Family::D12}) {
    const EndAlgebra A(f);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          const auto l = A.multiply(A.multiply(EndAlgebra::basis(i), EndAlgebra::basis(j)), EndAlgebra::basis(k));
          const auto r = A.multiply(EndAlgebra::basis(i), A.multiply(EndAlgebra::basis(j), EndAlgebra::basis(k)));
          CHECK(l == r);
        }
    const auto U = EndAlgebra::basis(1), V = EndAlgebra::basis(2);
    CHECK(A.multiply(U, U) == EndAlgebra::one());
    if (f == Family::D8) {
      CHECK(A.multiply(V, V) == EndElement{-1, 0, 0, 0});
      CHECK(A.multiply(U, V) == EndElement{0, 0, 0, 1});
      CHECK(A.multiply(V, U) == EndElement{0, 0, 0, -1});
    } else {
      CHECK(A.multiply(V, V) == EndElement{-1, 0, 1, 0});
      // U*V* = (1 - V*) U*
      CHECK(A.multiply(EndElement{1, 0, -1, 0}, U) == A.multiply(U, V));
    }
  }
  // D8 algebra is split: every element x satisfies x^2 - tr(x) x + n(x) = 0
  const EndAlgebra A(Family::D8);
  for (const EndElement x : {EndElement{1, 2, 3, 4}, EndElement{0, 1, -1, 2}, EndElement{make_rational(1, 2), 0, 5, -3}}) {
    const auto x2 = A.multiply(x, x);
    const Rational t = 2 * x[0];
    const Rational n = x[0] * x[0] - x[1] * x[1] + x[2] * x[2] - x[3] * x[3];
    EndElement rhs{};
    for (int k = 0; k < 4; ++k) rhs[k] = t * x[k];
    rhs[0] -= n;
    CHECK(x2 == rhs);
  }
  // (1 + U*)/2 is a nontrivial idempotent
  const EndElement e{make_rational(1, 2), make_rational(1, 2), 0, 0};
  CHECK(A.multiply(e, e) == e);
}

TEST_CASE("twisting group orders and classes") {
  const TwistingGroup g(Family::D8, 3);
  CHECK(g.group().order() == 32);
  std::vector<int> sizes;
  for (int k = 0; k < g.group().class_count(); ++k) sizes.push_back(g.group().class_size(k));
  std::vector<int> expected{1, 1, 2, 4, 4, 4, 2, 2, 4, 4, 4};
  std::sort(sizes.begin(), sizes.end());
  std::sort(expected.begin(), expected.end());
  CHECK(sizes == expected);
  CHECK(TwistingGroup(Family::D8, 4).group().class_count() == 10);
  CHECK(TwistingGroup(Family::D8, 4).group().order() == 16);
  CHECK(TwistingGroup(Family::D12, 3).group().order() == 24);
  CHECK(TwistingGroup(Family::D12, 3).group().class_count() == 9);
  CHECK(TwistingGroup(Family::D12, 2).group().order() == 48);
  CHECK(arithmetic_case(Family::D8, 3) == ArithmeticCase::Generic);
  CHECK(arithmetic_case(Family::D8, 4) == ArithmeticCase::USquare);
  CHECK(arithmetic_case(Family::D8, 2) == ArithmeticCase::TwistSquare);
  CHECK(arithmetic_case(Family::D12, 3) == ArithmeticCase::TwistSquare);
  CHECK(arithmetic_case(Family::D12, make_rational(4, 25)) == ArithmeticCase::USquare);
}

TEST_CASE("appendix tables verify") {
  for (const auto* t : all_appendix_tables()) {
    const auto c = verify_table_data(*t);
    INFO(t->gap_id);
    CHECK(c.ok());
    int total = 0;
    for (int s : t->class_sizes) total += s;
    CHECK(total == t->order);
  }
  const auto& t1 = appendix_table(Family::D8, ArithmeticCase::Generic);
  CHECK(t1.rows[10][0] == CyclotomicValue(4));
  CHECK(t1.rows[10][1] == CyclotomicValue(-4));
  for (int k = 2; k < 11; ++k) CHECK(t1.rows[10][k] == CyclotomicValue(0));
  const auto& t2 = appendix_table(Family::D8, ArithmeticCase::USquare);
  CHECK(t2.rows[8][5] == CyclotomicValue::i() * Rational(2));
  CHECK(t2.rows[9][5] == CyclotomicValue::i() * Rational(-2));
  const auto& t6 = appendix_table(Family::D12, ArithmeticCase::TwistSquare);
  const auto col6a = std::find(t6.class_labels.begin(), t6.class_labels.end(), "6A") - t6.class_labels.begin();
  CHECK(t6.rows[7][col6a] == -CyclotomicValue::sqrt_minus3());
}

TEST_CASE("order-8 entry of GAP(16,7)") {
  const auto z = resolve_gap16_7_entry();
  CHECK(z.chosen == "zeta8+zeta8^-1 (sqrt2)");
  int orthogonal = 0;
  for (const auto& c : z.candidates) orthogonal += c.orthogonal ? 1 : 0;
  CHECK(orthogonal == 2);  // sqrt2 and i*sqrt2; the group match separates them
}

TEST_CASE("theta decompositions in the six arithmetic cases") {
  const std::vector<std::vector<int>> expected{{11}, {9, 10}, {6, 7}, {15}, {}, {8, 9}};
  for (std::size_t c = 0; c < kCases.size(); ++c) {
    const auto [family, u] = kCases[c];
    const TwistingGroup tg(family, u);
    const auto ct = character_table(tg);
    const auto m = decompose(tg.group(), tg.theta_character(), ct);
    INFO(curves::to_string(family) << " u=" << u);
    for (const auto& x : m) CHECK((x == 0 || x == 1));
    const auto idx = nonzero_indices(m);
    if (family == Family::D12 && u == 4) {
      REQUIRE(idx.size() == 2);
      CHECK(idx[0] >= 10);
      CHECK(idx[1] <= 12);
      MESSAGE("d12, u square: theta = chi_" << idx[0] << " + chi_" << idx[1]);
    } else {
      CHECK(idx == expected[c]);
    }
    // other admissible column matchings: same answer, except that in the d12 u-square
    // case they may permute chi_10, chi_11, chi_12
    std::set<std::vector<int>> seen;
    for (const auto& map : ct.admissible_maps) {
      CharacterTable alt = ct;
      alt.column_to_class = map;
      for (std::size_t r = 0; r < ct.data->rows.size(); ++r)
        for (std::size_t col = 0; col < map.size(); ++col) alt.characters[r].values[map[col]] = ct.data->rows[r][col];
      const auto am = decompose(tg.group(), tg.theta_character(), alt);
      if (family == Family::D12 && u == 4) {
        const auto ai = nonzero_indices(am);
        REQUIRE(ai.size() == 2);
        CHECK((ai[0] >= 10 && ai[1] <= 12));
        seen.insert(ai);
      } else {
        CHECK(am == m);
      }
    }
    if (family == Family::D12 && u == 4) MESSAGE("pairs over all admissible matchings: " << seen.size());
  }
}

TEST_CASE("regular character decomposes by degrees") {
  const TwistingGroup tg(Family::D12, 2);
  const auto ct = character_table(tg);
  const auto m = decompose(tg.group(), regular_character(tg.group()), ct);
  for (std::size_t i = 0; i < m.size(); ++i) CHECK(m[i] == ct.data->rows[i][0].as_rational());
}

TEST_CASE("theta is a faithful homomorphism with the expected traces") {
  for (const auto& [family, u] : kCases) {
    const TwistingGroup tg(family, u);
    const auto& G = tg.group();
    for (int a = 0; a < G.order(); ++a)
      for (int b = 0; b < G.order(); ++b) REQUIRE(tg.theta(G.mul(a, b)) == tg.theta(a) * tg.theta(b));
    int identities = 0;
    for (int a = 0; a < G.order(); ++a) identities += tg.theta(a) == identity4() ? 1 : 0;
    CHECK(identities == 1);
    CHECK(tg.theta(0) == identity4());
    CHECK(trace(tg.theta(tg.embed(tg.aut().w))) == -4);
    for (int a = 0; a < G.order(); ++a)
      if (!tg.element(a).sigma.is_identity()) CHECK(trace(tg.theta(a)) == 0);
  }
}

TEST_CASE("restriction and induction") {
  for (const auto& [family, u] : kCases) {
    const TwistingGroup tg(family, u);
    const ClassFunction theta = tg.theta_character();
    const ClassFunction res = restrict_character(tg, theta);
    const ClassFunction rho = scale(res, make_rational(1, 2));
    INFO(curves::to_string(family) << " u=" << u);
    CHECK(inner_product(tg.subgroup(), rho, rho) == 1);
    CHECK(rho.values[0] == CyclotomicValue(2));
    const Rational degree(tg.galois_degree());
    CHECK(induce_character(tg, rho) == scale(theta, degree / 2));
    CHECK(induce_character(tg, res) == scale(theta, degree));
  }
  // split cases: both constituents restrict to the same character of H_C
  for (const auto& [family, u] : kCases) {
    const TwistingGroup tg(family, u);
    if (tg.arithmetic() == ArithmeticCase::Generic) continue;
    const auto ct = character_table(tg);
    const auto idx = nonzero_indices(decompose(tg.group(), tg.theta_character(), ct));
    REQUIRE(idx.size() == 2);
    CHECK(restrict_character(tg, ct.characters[idx[0] - 1]) == restrict_character(tg, ct.characters[idx[1] - 1]));
  }
}

TEST_CASE("quadratic cocycle") {
  const TwistingGroup tg(Family::D8, 3);
  CHECK_THROWS_AS(lambda_phi_quadratic(tg, 3), InputError);
  CHECK_THROWS_AS(lambda_phi_quadratic(tg, 6), InputError);
  CHECK_THROWS_AS(lambda_phi_quadratic(tg, 2), InputError);
  const auto c = lambda_phi_quadratic(tg, 5);
  CHECK(c.field.degree() == 8);
  CHECK(c.image[0] == 0);
  // the element moving only sqrt 5 maps to (w, id), where theta is -1
  const int only_d = 1 << 2;
  CHECK(c.image[only_d] == tg.embed(tg.aut().w));
  Matrix4 minus = identity4();
  for (int i = 0; i < 4; ++i) minus[i][i] = -1;
  CHECK(tg.theta(c.image[only_d]) == minus);
  std::set<int> distinct(c.image.begin(), c.image.end());
  CHECK(distinct.size() == c.image.size());
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) CHECK(c.image[a ^ b] == tg.group().mul(c.image[a], c.image[b]));
}
