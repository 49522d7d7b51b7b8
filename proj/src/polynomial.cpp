#include "twistlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace twistlab {

template <class T>
std::string Poly<T>::to_string(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    T c = c_[k];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    first = false;
    if (k == 0 || c != 1) os << twistlab::to_string(c);
    if (k > 0) os << (k > 0 && c != 1 ? "*" : "") << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

template class Poly<Integer>;
template class Poly<Rational>;

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RatPolynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    const Rational q = rem[k] / b.leading();
    quot[k - db] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial monic_gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

bool divides(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient) {
  if (b.is_zero()) throw InputError("divisibility test by the zero polynomial");
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) return false;
  std::vector<Integer> qi;
  for (const auto& c : q.coeffs()) {
    if (c.get_den() != 1) return false;
    qi.push_back(c.get_num());
  }
  if (quotient != nullptr) *quotient = IntPolynomial(std::move(qi));
  return true;
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer z = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    v.push_back(z);
  }
  if (v.back() < 0) g = -g;
  for (auto& z : v) z /= g;
  return IntPolynomial(std::move(v));
}

namespace {

// Bareiss fraction-free determinant.
Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
  const int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return 0;
  const std::size_t size = static_cast<std::size_t>(m + n);
  if (size == 0) return 1;
  std::vector<std::vector<Integer>> syl(size, std::vector<Integer>(size, 0));
  // rows hold coefficients from the leading term down
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) syl[r][r + k] = f.coeff(static_cast<std::size_t>(m - k));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) syl[n + r][r + k] = g.coeff(static_cast<std::size_t>(n - k));
  return determinant(std::move(syl));
}

Integer discriminant(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 1) throw InputError("discriminant of a constant");
  Integer r = resultant(f, f.derivative());
  Integer d = r / f.leading();
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

namespace {

Integer eval_mod(const IntPolynomial& f, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    acc = acc * x + f.coeffs()[k];
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

std::uint64_t eval_mod_small(const std::vector<std::uint64_t>& f, std::uint64_t x, std::uint64_t p) {
  unsigned __int128 acc = 0;
  for (std::size_t k = f.size(); k-- > 0;) acc = (acc * x + f[k]) % p;
  return static_cast<std::uint64_t>(acc);
}

bool is_small_prime(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return n >= 2;
}

}  // namespace

// A rational root a/b of the primitive f has b | lc(f), so lc*a/b is an integer of size at most
// |lc| times the root bound. It is recovered from a simple root mod p lifted p-adically.
std::vector<Rational> rational_roots(const RatPolynomial& input) {
  std::vector<Rational> roots;
  if (input.degree() < 1) return roots;
  RatPolynomial g = monic_gcd(input, input.derivative());
  const RatPolynomial sq = g.degree() > 0 ? divmod(input, g).first : input;
  IntPolynomial f = primitive_part(sq);
  if (f.coeff(0) == 0) {
    roots.emplace_back(0);
    std::vector<Integer> c(f.coeffs().begin() + 1, f.coeffs().end());
    f = IntPolynomial(std::move(c));
  }
  if (f.degree() < 1) return roots;
  if (f.degree() == 1) {
    Rational r(-f.coeff(0), f.coeff(1));
    r.canonicalize();
    roots.push_back(r);
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  const Integer lc = abs(f.leading());
  Integer maxc = 0;
  for (int k = 0; k < f.degree(); ++k) maxc = std::max(maxc, Integer(abs(f.coeff(static_cast<std::size_t>(k)))));
  // |root| <= 1 + max|a_i| / |lc|, so |lc * root| < lc + maxc + 1
  const Integer target = 2 * (lc + maxc + 1) + 1;
  const IntPolynomial df = f.derivative();

  for (std::uint64_t p = 1009;; p += 2) {
    if (!is_small_prime(p) || mpz_divisible_ui_p(lc.get_mpz_t(), p) != 0) continue;
    std::vector<std::uint64_t> fp, dp;
    for (const auto& c : f.coeffs()) fp.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    for (const auto& c : df.coeffs()) dp.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    std::vector<std::uint64_t> small_roots;
    bool simple = true;
    for (std::uint64_t x = 0; x < p && simple; ++x) {
      if (eval_mod_small(fp, x, p) != 0) continue;
      if (eval_mod_small(dp, x, p) == 0) simple = false;
      small_roots.push_back(x);
    }
    if (!simple) continue;  // p divides the discriminant

    for (std::uint64_t r0 : small_roots) {
      Integer r = r0, m = p;
      while (m < target) {
        m *= m;
        // Newton step mod m
        Integer fr = eval_mod(f, r, m), dr = eval_mod(df, r, m), inv;
        ensure(mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), m.get_mpz_t()) != 0, "rational_roots: lost simplicity");
        r = r - fr * inv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
      }
      Integer s = lc * r;
      mpz_mod(s.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
      if (2 * s > m) s -= m;
      Rational cand(s, lc);
      cand.canonicalize();
      if (f.evaluate<Rational>(cand) == 0) roots.push_back(cand);
    }
    break;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace twistlab
