#include "twistlab/radicals.hpp"

#include <bit>
#include <sstream>

namespace twistlab {

namespace galois {

MultiquadraticField::MultiquadraticField(const std::vector<Integer>& generators) {
  for (const auto& g : generators) {
    if (g == 0) throw InputError("multiquadratic field: zero generator");
    Integer s = squarefree_part(g);
    if (s == 1 || contains_sqrt(s)) continue;
    gens_.push_back(s);
  }
  if (gens_.size() > 16) throw InputError("multiquadratic field: too many generators");
}

std::optional<std::uint32_t> MultiquadraticField::exponents(const Integer& r) const {
  const Integer target = squarefree_part(r);
  const std::uint32_t n = static_cast<std::uint32_t>(gens_.size());
  for (std::uint32_t e = 0; e < (1U << n); ++e) {
    Integer prod = 1;
    for (std::uint32_t i = 0; i < n; ++i)
      if ((e >> i) & 1U) prod *= gens_[i];
    if (squarefree_part(prod) == target) return e;
  }
  return std::nullopt;
}

int MultiquadraticField::sign_on(GaloisElement g, const Integer& r) const {
  auto e = exponents(r);
  if (!e) throw InputError("sqrt(" + r.get_str() + ") is not in " + describe());
  return std::popcount(*e & g.mask) % 2 == 0 ? 1 : -1;
}

std::vector<GaloisElement> MultiquadraticField::galois_group() const {
  std::vector<GaloisElement> out;
  for (std::uint32_t m = 0; m < degree(); ++m) out.push_back({m});
  return out;
}

GaloisElement MultiquadraticField::restrict_from(const MultiquadraticField& larger, GaloisElement g) const {
  GaloisElement out;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (larger.sign_on(g, gens_[i]) < 0) out.mask |= 1U << i;
  return out;
}

std::string MultiquadraticField::describe() const {
  if (gens_.empty()) return "Q";
  std::string s = "Q(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i != 0) s += ",";
    s += "sqrt(" + gens_[i].get_str() + ")";
  }
  return s + ")";
}

}  // namespace galois

BiquadraticNumber::BiquadraticNumber(const Rational& q) { add_term(1, q); }

BiquadraticNumber BiquadraticNumber::surd(const Rational& c, const Integer& radicand) {
  if (radicand == 0) return {};
  // radicand = s * k^2 with s squarefree; sqrt(radicand) = k * sqrt(s) in the i-convention
  const Integer s = squarefree_part(radicand);
  Integer k2 = radicand / s;
  Integer k = sqrt(k2);
  BiquadraticNumber out;
  out.add_term(s, c * Rational(k));
  return out;
}

BiquadraticNumber BiquadraticNumber::sqrt_of(const Rational& q) {
  if (q == 0) return {};
  Rational c(q);
  c.canonicalize();
  // sqrt(n/d) = sqrt(n*d)/d
  return surd(Rational(1, 1) / Rational(c.get_den()), Integer(c.get_num() * c.get_den()));
}

void BiquadraticNumber::add_term(const Integer& r, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiquadraticNumber BiquadraticNumber::operator+(const BiquadraticNumber& o) const {
  BiquadraticNumber out = *this;
  for (const auto& [r, c] : o.terms_) out.add_term(r, c);
  return out;
}

BiquadraticNumber BiquadraticNumber::operator-() const {
  BiquadraticNumber out = *this;
  for (auto& [r, c] : out.terms_) c = -c;
  return out;
}

BiquadraticNumber BiquadraticNumber::operator-(const BiquadraticNumber& o) const { return *this + (-o); }

BiquadraticNumber BiquadraticNumber::operator*(const BiquadraticNumber& o) const {
  BiquadraticNumber out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      Integer g;
      Integer aa = abs(a), bb = abs(b);
      mpz_gcd(g.get_mpz_t(), aa.get_mpz_t(), bb.get_mpz_t());
      Integer r = (a / g) * (b / g);
      Rational c = ca * cb * Rational(g);
      if (a < 0 && b < 0) c = -c;
      out.add_term(r, c);
    }
  }
  return out;
}

Rational BiquadraticNumber::coefficient(const Integer& r) const {
  auto it = terms_.find(r);
  return it == terms_.end() ? Rational(0) : it->second;
}

BiquadraticNumber BiquadraticNumber::conjugate(const galois::MultiquadraticField& field,
                                               galois::GaloisElement g) const {
  BiquadraticNumber out;
  for (const auto& [r, c] : terms_) out.add_term(r, field.sign_on(g, r) > 0 ? c : Rational(-c));
  return out;
}

std::string BiquadraticNumber::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << twistlab::to_string(c);
    if (r != 1) os << "*sqrt(" << r.get_str() << ")";
  }
  return os.str();
}

}  // namespace twistlab
