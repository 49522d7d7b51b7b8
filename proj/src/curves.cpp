#include "twistlab/curves.hpp"

#include <cmath>

#include "twistlab/modular.hpp"

namespace twistlab::curves {

using modular::u64;

std::string to_string(Family f) { return f == Family::D8 ? "d8" : "d12"; }

std::string to_string(ModelTag t) {
  switch (t) {
    case ModelTag::D8Family: return "d8";
    case ModelTag::D12Family: return "d12";
    case ModelTag::D8Alt: return "d8alt";
    case ModelTag::D12Alt: return "d12alt";
    case ModelTag::Custom: return "custom";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "d8") return Family::D8;
  if (s == "d12") return Family::D12;
  throw InputError("unknown family '" + s + "' (expected d8 or d12)");
}

void check_parameter(Family family, const Rational& u) {
  if (u == 0) throw InputError("excluded parameter u = 0");
  if (u == Rational(1, 4)) throw InputError("excluded parameter u = 1/4 (degenerate curve)");
  if (family == Family::D8 && u == Rational(9, 100))
    throw InputError("excluded parameter u = 9/100 (automorphism group larger than D8)");
  if (family == Family::D12 && u == Rational(-1, 50))
    throw InputError("excluded parameter u = -1/50 (automorphism group larger than D12)");
}

GenusTwoCurve::GenusTwoCurve(RatPolynomial f, ModelTag tag, std::optional<Rational> u, Integer twist)
    : f_(std::move(f)), tag_(tag), u_(std::move(u)), twist_(std::move(twist)) {
  if (f_.degree() != 5 && f_.degree() != 6)
    throw InputError("not a genus 2 model: deg f = " + std::to_string(f_.degree()) + " (need 5 or 6)");
  c_ = 1;
  for (const auto& a : f_.coeffs()) mpz_lcm(c_.get_mpz_t(), c_.get_mpz_t(), a.get_den_mpz_t());
  std::vector<Integer> g;
  for (const auto& a : f_.coeffs()) g.push_back(a.get_num() * (c_ / a.get_den()) * c_);
  g_ = IntPolynomial(std::move(g));
  disc_ = twistlab::discriminant(g_);
  if (disc_ == 0) throw InputError("f is not squarefree (zero discriminant)");
}

std::string GenusTwoCurve::spec() const {
  std::string base;
  if (tag_ == ModelTag::Custom) {
    base = "custom:f=[";
    const Rational scale = Rational(1) / Rational(twist_);
    for (int k = 0; k <= f_.degree(); ++k) {
      if (k != 0) base += ",";
      base += twistlab::to_string(Rational(f_.coeff(static_cast<std::size_t>(k)) * scale));
    }
    base += "]";
  } else {
    base = to_string(tag_) + ":u=" + twistlab::to_string(*u_);
  }
  if (twist_ != 1) base += ";twist=" + twist_.get_str();
  return base;
}

namespace {

RatPolynomial from_coeffs(std::initializer_list<Rational> c) { return RatPolynomial(std::vector<Rational>(c)); }

}  // namespace

GenusTwoCurve d8_curve(const Rational& u) {
  check_parameter(Family::D8, u);
  const Rational v = 1 / u;
  // X^6 - 8X^5 + (3/u)X^4 + (3/u^2)X^2 + (8/u^2)X + 1/u^3
  return GenusTwoCurve(from_coeffs({v * v * v, 8 * v * v, 3 * v * v, 0, 3 * v, -8, 1}), ModelTag::D8Family, u);
}

GenusTwoCurve d12_curve(const Rational& u) {
  check_parameter(Family::D12, u);
  const Rational u2 = u * u, u3 = u2 * u, u4 = u3 * u;
  return GenusTwoCurve(
      from_coeffs({729 * u4, -26244 * u4, 729 * u3, 29160 * u3, 243 * u2, -2916 * u2, 27 * u}),
      ModelTag::D12Family, u);
}

GenusTwoCurve alt_model(Family family, const Rational& u) {
  check_parameter(family, u);
  if (family == Family::D8) return GenusTwoCurve(from_coeffs({0, u, 0, 1, 0, 1}), ModelTag::D8Alt, u);
  return GenusTwoCurve(from_coeffs({u, 0, 0, 1, 0, 0, 1}), ModelTag::D12Alt, u);
}

GenusTwoCurve custom_curve(const std::vector<Rational>& coeffs) {
  return GenusTwoCurve(RatPolynomial(coeffs), ModelTag::Custom);
}

GenusTwoCurve quadratic_twist(const GenusTwoCurve& c, const Integer& d) {
  if (d == 0) throw InputError("twist by zero");
  if (!is_squarefree(d)) throw InputError("twist parameter " + d.get_str() + " is not squarefree");
  if (d == 1) return c;
  // twisting twice by a common factor g is a twist by d/g^2 up to rescaling Y
  Integer g;
  mpz_gcd(g.get_mpz_t(), c.twist().get_mpz_t(), d.get_mpz_t());
  const Integer t = c.twist() * d / (g * g);
  return GenusTwoCurve(c.f() * (Rational(d) / Rational(g * g)), c.tag(), c.parameter(), t);
}

bool is_bad_prime(const GenusTwoCurve& c, std::uint64_t p) {
  if (p == 2) return true;
  auto divides = [p](const Integer& z) { return mpz_divisible_ui_p(z.get_mpz_t(), p) != 0; };
  return divides(c.denominator()) || divides(c.integral_model().leading()) || divides(c.discriminant());
}

std::vector<std::uint64_t> bad_primes(const GenusTwoCurve& c, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (auto p : primes_up_to(bound))
    if (is_bad_prime(c, p)) out.push_back(p);
  return out;
}

namespace {

std::vector<u64> reduce_model(const GenusTwoCurve& c, u64 p) {
  std::vector<u64> out;
  for (const auto& a : c.integral_model().coeffs()) out.push_back(mpz_fdiv_ui(a.get_mpz_t(), p));
  return out;
}

u64 count_fp(const std::vector<u64>& g, u64 p, const std::vector<signed char>& chi) {
  std::int64_t total = 0;
  for (u64 x = 0; x < p; ++x) {
    u64 acc = 0;
    for (std::size_t k = g.size(); k-- > 0;) acc = modular::add_mod(modular::mul_mod(acc, x, p), g[k], p);
    total += 1 + chi[acc];
  }
  if (g.size() == 7) total += 1 + chi[g.back()];
  else total += 1;
  return static_cast<u64>(total);
}

// F_{p^2} = F_p(w), w^2 = n. A value a + bw is a square iff its norm a^2 - n b^2 is a square in F_p.
u64 count_fp2(const std::vector<u64>& g, u64 p, const std::vector<signed char>& chi) {
  const u64 n = modular::find_nonresidue(p);
  std::int64_t total = 0;
  for (u64 xa = 0; xa < p; ++xa) {
    for (u64 xb = 0; xb < p; ++xb) {
      u64 ra = 0, rb = 0;
      for (std::size_t k = g.size(); k-- > 0;) {
        // (ra + rb w)(xa + xb w) + g_k
        const u64 na = modular::add_mod(modular::mul_mod(ra, xa, p),
                                        modular::mul_mod(n, modular::mul_mod(rb, xb, p), p), p);
        const u64 nb = modular::add_mod(modular::mul_mod(ra, xb, p), modular::mul_mod(rb, xa, p), p);
        ra = modular::add_mod(na, g[k], p);
        rb = nb;
      }
      const u64 norm = modular::sub_mod(modular::mul_mod(ra, ra, p), modular::mul_mod(n, modular::mul_mod(rb, rb, p), p), p);
      const bool zero = ra == 0 && rb == 0;
      total += zero ? 1 : 1 + chi[norm];
    }
  }
  total += g.size() == 7 ? 2 : 1;
  return static_cast<u64>(total);
}

}  // namespace

std::uint64_t count_points(const GenusTwoCurve& c, std::uint64_t p, int extension_degree) {
  if (extension_degree != 1 && extension_degree != 2)
    throw InputError("count_points: extension degree must be 1 or 2");
  if (is_bad_prime(c, p)) throw InputError("count_points: p = " + std::to_string(p) + " is a bad prime");
  if (p > 3000000000ULL) throw InputError("count_points: prime too large for naive counting");
  const auto g = reduce_model(c, p);
  const auto chi = modular::legendre_table(p);
  return extension_degree == 1 ? count_fp(g, p, chi) : count_fp2(g, p, chi);
}

IntPolynomial LocalFactor::polynomial() const {
  std::vector<Integer> v;
  for (auto x : c) v.emplace_back(static_cast<long>(x));
  return IntPolynomial(std::move(v));
}

std::string LocalFactor::validate() const {
  const auto pp = static_cast<std::int64_t>(p);
  if (c[0] != 1) return "constant term is not 1";
  if (c[3] != pp * c[1]) return "c3 != p*c1";
  if (c[4] != pp * pp) return "c4 != p^2";
  const std::int64_t s1 = -c[1];
  if (static_cast<unsigned __int128>(s1 * s1) > static_cast<unsigned __int128>(16) * p) return "Weil bound |s1| <= 4 sqrt(p) violated";
  const auto ceil_sqrt = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(p))));
  if (std::llabs(c[1]) > 4 * ceil_sqrt) return "|c1| > 4 ceil(sqrt(p))";
  // N1 = p + 1 - s1, N2 = p^2 + 1 - (s1^2 - 2 e2)
  if (static_cast<std::int64_t>(n1) != pp + 1 - s1) return "N1 round trip failed";
  if (static_cast<std::int64_t>(n2) != pp * pp + 1 - (s1 * s1 - 2 * c[2])) return "N2 round trip failed";
  return {};
}

LocalFactor local_factor_from_counts(std::uint64_t p, std::uint64_t n1, std::uint64_t n2) {
  const auto pp = static_cast<std::int64_t>(p);
  const std::int64_t s1 = pp + 1 - static_cast<std::int64_t>(n1);
  const std::int64_t s2 = pp * pp + 1 - static_cast<std::int64_t>(n2);
  const std::int64_t twice_e2 = s1 * s1 - s2;
  ensure(twice_e2 % 2 == 0, "local factor: (s1^2 - s2) is odd at p = " + std::to_string(p));
  LocalFactor lf;
  lf.p = p;
  lf.n1 = n1;
  lf.n2 = n2;
  lf.c = {1, -s1, twice_e2 / 2, -pp * s1, pp * pp};
  return lf;
}

LocalFactor local_factor(const GenusTwoCurve& c, std::uint64_t p) {
  return local_factor_from_counts(p, count_points(c, p, 1), count_points(c, p, 2));
}

}  // namespace twistlab::curves
