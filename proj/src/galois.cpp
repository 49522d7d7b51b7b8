#include "twistlab/galois.hpp"

#include <algorithm>

#include "twistlab/modular.hpp"

namespace twistlab::galois {

GaloisElement FrobeniusClass::element() const {
  GaloisElement g;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i] < 0) g.mask |= 1U << i;
  return g;
}

std::vector<std::uint64_t> ramified_primes(const MultiquadraticField& field) {
  std::vector<std::uint64_t> out{2};
  for (const auto& m : field.generators())
    for (const auto& q : prime_divisors(m)) {
      const auto p = q.get_ui();
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_ramified(const MultiquadraticField& field, std::uint64_t p) {
  if (p == 2) return true;
  for (const auto& m : field.generators())
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) return true;
  return false;
}

FrobeniusClass frobenius(const MultiquadraticField& field, std::uint64_t p) {
  if (is_ramified(field, p)) throw InputError("frobenius: p = " + std::to_string(p) + " ramifies in " + field.describe());
  FrobeniusClass fc;
  for (const auto& m : field.generators())
    fc.signs.push_back(modular::legendre(static_cast<std::int64_t>(mpz_fdiv_ui(m.get_mpz_t(), p)), p));
  return fc;
}

int residue_degree(const FrobeniusClass& fc) {
  for (int s : fc.signs)
    if (s != 1) return 2;
  return 1;
}

IntPolynomial reciprocal_charpoly(const groups::Matrix4& m) {
  // Faddeev-LeVerrier: char poly x^4 + a1 x^3 + ... + a4; det(1 - MT) = 1 + a1 T + ... + a4 T^4
  std::vector<Rational> a{Rational(1)};
  using groups::operator*;
  groups::Matrix4 aux{};
  for (int k = 1; k <= 4; ++k) {
    // aux = M * (aux + a_{k-1} I)
    groups::Matrix4 t = aux;
    for (int i = 0; i < 4; ++i) t[i][i] += a.back();
    aux = m * t;
    a.push_back(-groups::trace(aux) / k);
  }
  std::vector<Integer> out;
  for (const auto& c : a) {
    ensure(c.get_den() == 1, "det(1 - MT) has a non-integral coefficient");
    out.push_back(c.get_num());
  }
  return IntPolynomial(std::move(out));
}

ThetaAtFrobenius theta_at_frobenius(const groups::TwistingGroup& g, const Integer& d, std::uint64_t p) {
  const auto& K = g.aut().field;
  ThetaAtFrobenius out;
  if (d == 1) {
    const FrobeniusClass fk = frobenius(K, p);
    out.group_element = g.index({0, fk.element()});
    out.residue_degree_in_k = residue_degree(fk);
  } else {
    const auto cocycle = groups::lambda_phi_quadratic(g, d);
    const FrobeniusClass fl = frobenius(cocycle.field, p);
    out.group_element = cocycle.image[fl.element().mask];
    out.residue_degree_in_k = residue_degree(frobenius(K, p));
  }
  out.matrix = g.theta(out.group_element);
  out.charpoly = reciprocal_charpoly(out.matrix);
  return out;
}

}  // namespace twistlab::galois
