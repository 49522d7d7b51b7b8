#include "twistlab/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace twistlab::groups {

using galois::GaloisElement;
using galois::MultiquadraticField;

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
  FiniteGroup g;
  g.table = std::move(table);
  const int n = g.order();
  ensure(n > 0, "empty group");
  for (int a = 0; a < n; ++a) ensure(g.table[0][a] == a && g.table[a][0] == a, "element 0 is not the identity");
  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table[a][b] == 0) g.inverse[a] = b;
  g.element_order.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = g.table[x][a];
      ++k;
      ensure(k <= n, "element of infinite order in a finite table");
    }
    g.element_order[a] = k;
  }
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (seen[a] != 0) continue;
    std::vector<int> cls;
    for (int x = 0; x < n; ++x) {
      const int c = g.table[g.table[x][a]][g.inverse[x]];
      if (seen[c] == 0) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [&](const auto& x, const auto& y) {
    const auto kx = std::make_tuple(g.element_order[x.front()], x.size(), x.front());
    const auto ky = std::make_tuple(g.element_order[y.front()], y.size(), y.front());
    return kx < ky;
  });
  g.classes = std::move(classes);
  g.class_of.assign(n, -1);
  for (int k = 0; k < g.class_count(); ++k)
    for (int x : g.classes[k]) g.class_of[x] = k;
  return g;
}

AutMatrix multiply(const AutMatrix& a, const AutMatrix& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

AutMatrix conjugate(const AutMatrix& a, const MultiquadraticField& field, GaloisElement g) {
  return {a[0].conjugate(field, g), a[1].conjugate(field, g), a[2].conjugate(field, g), a[3].conjugate(field, g)};
}

EndAlgebra::EndAlgebra(Family family) {
  // e0 = 1, e1 = U*, e2 = V*, e3 = U*V*
  auto v = [](long a, long b, long c, long d) { return EndElement{Rational(a), Rational(b), Rational(c), Rational(d)}; };
  if (family == Family::D8) {
    table_ = {{
        {v(1, 0, 0, 0), v(0, 1, 0, 0), v(0, 0, 1, 0), v(0, 0, 0, 1)},
        {v(0, 1, 0, 0), v(1, 0, 0, 0), v(0, 0, 0, 1), v(0, 0, 1, 0)},
        {v(0, 0, 1, 0), v(0, 0, 0, -1), v(-1, 0, 0, 0), v(0, 1, 0, 0)},
        {v(0, 0, 0, 1), v(0, 0, -1, 0), v(0, -1, 0, 0), v(1, 0, 0, 0)},
    }};
  } else {
    // V*U* = U* - U*V*, V*^2 = V* - 1
    table_ = {{
        {v(1, 0, 0, 0), v(0, 1, 0, 0), v(0, 0, 1, 0), v(0, 0, 0, 1)},
        {v(0, 1, 0, 0), v(1, 0, 0, 0), v(0, 0, 0, 1), v(0, 0, 1, 0)},
        {v(0, 0, 1, 0), v(0, 1, 0, -1), v(-1, 0, 1, 0), v(0, 1, 0, 0)},
        {v(0, 0, 0, 1), v(1, 0, -1, 0), v(0, -1, 0, 1), v(1, 0, 0, 0)},
    }};
  }
}

EndElement EndAlgebra::basis(int k) {
  EndElement e{};
  e[k] = 1;
  return e;
}

EndElement EndAlgebra::multiply(const EndElement& a, const EndElement& b) const {
  EndElement out{};
  for (int i = 0; i < 4; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (b[j] == 0) continue;
      const Rational c = a[i] * b[j];
      for (int k = 0; k < 4; ++k) out[k] += c * table_[i][j][k];
    }
  }
  return out;
}

std::array<std::array<Rational, 4>, 4> EndAlgebra::left_regular(const EndElement& a) const {
  std::array<std::array<Rational, 4>, 4> m{};
  for (int j = 0; j < 4; ++j) {
    const EndElement col = multiply(a, basis(j));
    for (int i = 0; i < 4; ++i) m[i][j] = col[i];
  }
  return m;
}

std::string to_string(ArithmeticCase c) {
  switch (c) {
    case ArithmeticCase::Generic: return "generic";
    case ArithmeticCase::USquare: return "u-square";
    case ArithmeticCase::TwistSquare: return "twist-square";
  }
  return "?";
}

ArithmeticCase arithmetic_case(Family family, const Rational& u) {
  if (is_rational_square(u)) return ArithmeticCase::USquare;
  const long k = family == Family::D8 ? 2 : 3;
  if (is_rational_square(u * k)) return ArithmeticCase::TwistSquare;
  return ArithmeticCase::Generic;
}

int AutGroup::find(const AutMatrix& m) const {
  for (std::size_t i = 0; i < matrices.size(); ++i)
    if (matrices[i] == m) return static_cast<int>(i);
  return -1;
}

namespace {

std::pair<AutMatrix, AutMatrix> generators(Family family, const Rational& u) {
  using BN = BiquadraticNumber;
  const BN r = BN::sqrt_of(u);
  const BN one_over_r = r * BN(Rational(1) / u);
  if (family == Family::D8) {
    const BN t = BN::sqrt_of(2);
    const BN half(Rational(1, 2));
    // U = (1/sqrt2, 1/sqrt(2u); sqrt(u/2), -1/sqrt2), V = (0, -1/sqrt u; sqrt u, 0)
    AutMatrix U{t * half, t * r * BN(Rational(1) / (2 * u)), r * t * half, -(t * half)};
    AutMatrix V{BN(0), -one_over_r, r, BN(0)};
    return {U, V};
  }
  const BN s = BN::sqrt_of(3);
  // U = (0, sqrt u/3; 3/sqrt u, 0), V = (1/2, -sqrt u/sqrt 12; 3 sqrt 3/sqrt(4u), 1/2)
  AutMatrix U{BN(0), r * BN(Rational(1, 3)), one_over_r * BN(3), BN(0)};
  AutMatrix V{BN(Rational(1, 2)), -(r * s * BN(Rational(1, 6))), s * one_over_r * BN(Rational(3, 2)),
              BN(Rational(1, 2))};
  return {U, V};
}

AutMatrix power(const AutMatrix& m, int k) {
  AutMatrix out{BiquadraticNumber(1), BiquadraticNumber(0), BiquadraticNumber(0), BiquadraticNumber(1)};
  for (int i = 0; i < k; ++i) out = multiply(out, m);
  return out;
}

}  // namespace

AutGroup build_aut_group(Family family, const Rational& u) {
  curves::check_parameter(family, u);
  AutGroup aut;
  aut.family = family;
  aut.u = u;
  aut.field = MultiquadraticField({squarefree_part(u), Integer(family == Family::D8 ? 2 : 3)});

  const auto [U, V] = generators(family, u);
  const AutMatrix I = power(U, 0);
  const AutMatrix minus_I{BiquadraticNumber(-1), BiquadraticNumber(0), BiquadraticNumber(0),
                          BiquadraticNumber(-1)};
  const int n = family == Family::D8 ? 8 : 12;
  const int v_order = n / 2;
  ensure(multiply(U, U) == I, "U^2 != 1");
  ensure(power(V, v_order) == I, "V has the wrong order");
  ensure(power(V, v_order / 2) == minus_I, "V^(ord/2) is not the hyperelliptic involution");
  ensure(multiply(U, V) == multiply(power(V, v_order - 1), U), "UV != V^{-1}U");

  const EndAlgebra algebra(family);
  const std::array<AutMatrix, 2> gens{U, V};
  const std::array<EndElement, 2> gen_images{EndAlgebra::basis(1), EndAlgebra::basis(2)};
  const std::array<const char*, 2> gen_names{"U", "V"};

  aut.matrices.push_back(I);
  aut.words.emplace_back("1");
  aut.end_image.push_back(EndAlgebra::one());
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (int k = 0; k < 2; ++k) {
      const AutMatrix next = multiply(aut.matrices[cur], gens[k]);
      const EndElement image = algebra.multiply(aut.end_image[cur], gen_images[k]);
      const int found = aut.find(next);
      if (found >= 0) {
        // alpha -> alpha* must be well defined
        ensure(aut.end_image[found] == image, "End image of Aut(C) is not well defined");
        continue;
      }
      aut.matrices.push_back(next);
      aut.words.push_back(cur == 0 ? std::string(gen_names[k]) : aut.words[cur] + gen_names[k]);
      aut.end_image.push_back(image);
      queue.push_back(static_cast<int>(aut.matrices.size()) - 1);
    }
  }
  ensure(static_cast<int>(aut.matrices.size()) == n, "Aut(C) has the wrong order");

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int c = aut.find(multiply(aut.matrices[a], aut.matrices[b]));
      ensure(c >= 0, "Aut(C) is not closed under multiplication");
      table[a][b] = c;
    }
  aut.group = FiniteGroup::from_table(std::move(table));
  aut.U = aut.find(U);
  aut.V = aut.find(V);
  aut.w = aut.find(minus_I);
  ensure(aut.w >= 0, "hyperelliptic involution missing");

  for (const auto& sigma : aut.field.galois_group()) {
    std::vector<int> action(n);
    for (int a = 0; a < n; ++a) {
      const int c = aut.find(conjugate(aut.matrices[a], aut.field, sigma));
      ensure(c >= 0, "Galois conjugate of an automorphism left the group");
      action[a] = c;
    }
    aut.galois_action.push_back(std::move(action));
  }
  // minimality of K: only the identity of Gal(K/Q) acts trivially
  for (std::size_t m = 1; m < aut.galois_action.size(); ++m)
    ensure(aut.galois_action[m] != aut.galois_action[0], "K is not the minimal field of definition");
  return aut;
}

int galois_action(const AutGroup& aut, GaloisElement sigma, int alpha) {
  return aut.galois_action.at(sigma.mask).at(alpha);
}

Matrix4 identity4() {
  Matrix4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  return m;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Rational trace(const Matrix4& m) { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }

Matrix4 theta_matrix(const TwistingGroup& g, TwistingGroupElement e) {
  const AutGroup& aut = g.aut();
  const EndAlgebra& alg = g.algebra();
  // images of the basis under sigma: 1, (^sigma U)*, (^sigma V)*, (^sigma U)*(^sigma V)*
  const EndElement su = aut.end_image[galois_action(aut, e.sigma, aut.U)];
  const EndElement sv = aut.end_image[galois_action(aut, e.sigma, aut.V)];
  const std::array<EndElement, 4> sigma_basis{EndAlgebra::one(), su, sv, alg.multiply(su, sv)};
  Matrix4 m{};
  for (int j = 0; j < 4; ++j) {
    const EndElement col = alg.multiply(aut.end_image[e.aut], sigma_basis[j]);
    for (int i = 0; i < 4; ++i) m[i][j] = col[i];
  }
  return m;
}

TwistingGroup::TwistingGroup(Family family, const Rational& u)
    : aut_(build_aut_group(family, u)), case_(arithmetic_case(family, u)), algebra_(family) {
  const int na = aut_.group.order();
  const int ng = galois_degree();
  const int n = na * ng;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    const auto [a1, s1] = element(x);
    for (int y = 0; y < n; ++y) {
      const auto [a2, s2] = element(y);
      // (a1, s1)(a2, s2) = (a1 * ^s1 a2, s1 s2)
      const int a = aut_.group.mul(a1, galois_action(aut_, s1, a2));
      table[x][y] = index({a, s1 * s2});
    }
  }
  group_ = FiniteGroup::from_table(std::move(table));
  theta_.reserve(n);
  for (int x = 0; x < n; ++x) theta_.push_back(theta_matrix(*this, element(x)));
}

ClassFunction TwistingGroup::theta_character() const {
  ClassFunction chi;
  for (const auto& cls : group_.classes) chi.values.emplace_back(trace(theta_[cls.front()]));
  return chi;
}

Rational inner_product(const FiniteGroup& g, const ClassFunction& a, const ClassFunction& b) {
  CyclotomicValue acc;
  for (int k = 0; k < g.class_count(); ++k) acc += a.values[k] * b.values[k].conj() * Rational(g.class_size(k));
  return acc.as_rational() / g.order();
}

std::vector<Rational> decompose(const FiniteGroup& g, const ClassFunction& chi, const CharacterTable& table) {
  std::vector<Rational> out;
  for (const auto& row : table.characters) out.push_back(inner_product(g, chi, row));
  return out;
}

ClassFunction regular_character(const FiniteGroup& g) {
  ClassFunction chi;
  for (int k = 0; k < g.class_count(); ++k) chi.values.emplace_back(k == 0 ? g.order() : 0);
  return chi;
}

ClassFunction restrict_character(const TwistingGroup& g, const ClassFunction& chi) {
  const FiniteGroup& h = g.subgroup();
  ClassFunction out;
  for (const auto& cls : h.classes) out.values.push_back(chi.values[g.group().class_of[g.embed(cls.front())]]);
  return out;
}

ClassFunction induce_character(const TwistingGroup& g, const ClassFunction& psi) {
  const FiniteGroup& G = g.group();
  const FiniteGroup& H = g.subgroup();
  // H_C = {(alpha, id)}: an element lies in H iff its Galois part is trivial
  std::vector<int> to_h(G.order(), -1);
  for (int a = 0; a < H.order(); ++a) to_h[g.embed(a)] = a;
  ClassFunction out;
  for (const auto& cls : G.classes) {
    const int x = cls.front();
    CyclotomicValue acc;
    for (int y = 0; y < G.order(); ++y) {
      const int c = G.mul(G.mul(y, x), G.inverse[y]);
      if (to_h[c] >= 0) acc += psi.values[H.class_of[to_h[c]]];
    }
    out.values.push_back(acc * Rational(1, H.order()));
  }
  return out;
}

ClassFunction scale(const ClassFunction& chi, const Rational& s) {
  ClassFunction out;
  for (const auto& v : chi.values) out.values.push_back(v * s);
  return out;
}

QuadraticCocycle lambda_phi_quadratic(const TwistingGroup& g, const Integer& d) {
  const auto& K = g.aut().field;
  if (d == 0) throw InputError("twist by zero");
  if (K.contains_sqrt(d))
    throw InputError("sqrt(" + d.get_str() + ") lies in K = " + K.describe() + "; the cocycle degenerates");
  QuadraticCocycle cocycle;
  cocycle.d = d;
  std::vector<Integer> gens = K.generators();
  gens.push_back(d);
  cocycle.field = MultiquadraticField(gens);
  ensure(cocycle.field.rank() == K.rank() + 1, "L = K(sqrt d) has unexpected degree");
  for (const auto& sigma : cocycle.field.galois_group()) {
    const GaloisElement on_k = K.restrict_from(cocycle.field, sigma);
    const bool moves_sqrt_d = cocycle.field.sign_on(sigma, d) < 0;
    cocycle.image.push_back(g.index({moves_sqrt_d ? g.aut().w : 0, on_k}));
  }
  const auto& G = g.group();
  const std::size_t n = cocycle.image.size();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      ensure(cocycle.image[a ^ b] == G.mul(cocycle.image[a], cocycle.image[b]), "lambda_phi is not a homomorphism");
  for (std::uint32_t a = 1; a < n; ++a) ensure(cocycle.image[a] != 0, "lambda_phi is not injective");
  return cocycle;
}

}  // namespace twistlab::groups
