#include <doctest.h>

#include "twistlab/curves.hpp"
#include "twistlab/modular.hpp"

using namespace twistlab;
using namespace twistlab::curves;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// Exhaustive count over F_p: every (x, y) plus the points at infinity.
std::uint64_t brute_fp(const GenusTwoCurve& c, std::uint64_t p) {
  const auto& g = c.integral_model();
  auto mod = [p](const Integer& z) { return static_cast<std::int64_t>(mpz_fdiv_ui(z.get_mpz_t(), p)); };
  std::uint64_t n = 0;
  for (std::int64_t x = 0; x < static_cast<std::int64_t>(p); ++x) {
    std::int64_t v = 0;
    for (std::size_t k = g.coeffs().size(); k-- > 0;) v = (v * x + mod(g.coeffs()[k])) % static_cast<std::int64_t>(p);
    for (std::int64_t y = 0; y < static_cast<std::int64_t>(p); ++y)
      if ((y * y) % static_cast<std::int64_t>(p) == v) ++n;
  }
  if (g.degree() == 5) return n + 1;
  const std::int64_t lc = mod(g.leading());
  std::uint64_t inf = 0;
  for (std::int64_t y = 0; y < static_cast<std::int64_t>(p); ++y)
    if ((y * y) % static_cast<std::int64_t>(p) == lc) ++inf;
  return n + inf;
}

// F_49 = F_7[i], i^2 = -1, enumerated independently of the Fp2 class.
struct G49 {
  int a, b;
  G49 operator*(G49 o) const { return {((a * o.a - b * o.b) % 7 + 7) % 7, ((a * o.b + b * o.a) % 7 + 7) % 7}; }
  G49 operator+(G49 o) const { return {(a + o.a) % 7, (b + o.b) % 7}; }
  bool operator==(const G49&) const = default;
};

}  // namespace

TEST_CASE("D8 family model") {
  const auto c = d8_curve(1);
  CHECK(c.f() == RatPolynomial({1, 8, 3, 0, 3, -8, 1}));
  const auto c3 = d8_curve(3);
  CHECK(c3.f().coeff(4) == 1);
  CHECK(c3.f().coeff(2) == q(1, 3));
  CHECK(c3.f().coeff(1) == q(8, 9));
  CHECK(c3.f().coeff(0) == q(1, 27));
  CHECK_THROWS_AS(d8_curve(q(1, 4)), InputError);
  CHECK_THROWS_AS(d8_curve(q(9, 100)), InputError);
  CHECK_THROWS_AS(d8_curve(0), InputError);
}

TEST_CASE("D12 family model") {
  const auto c = d12_curve(1);
  CHECK(c.f().leading() == 27);
  CHECK(c.f().coeff(0) == 729);
  CHECK(d12_curve(2).f().coeff(5) == -11664);
  CHECK_THROWS_AS(d12_curve(q(-1, 50)), InputError);
  CHECK_THROWS_AS(d12_curve(q(1, 4)), InputError);
}

TEST_CASE("alternate models") {
  CHECK(alt_model(Family::D8, 1).f() == RatPolynomial({0, 1, 0, 1, 0, 1}));
  CHECK(alt_model(Family::D12, 1).f() == RatPolynomial({1, 0, 0, 1, 0, 0, 1}));
  CHECK(alt_model(Family::D8, 1).is_alternate_model());
  CHECK_THROWS_AS(alt_model(Family::D8, q(9, 100)), InputError);
}

TEST_CASE("genus-2 validation") {
  CHECK_THROWS_AS(custom_curve({1, 0, 1, 0, 1, 0}), InputError);  // degree 4 after trimming
  CHECK_THROWS_AS(custom_curve({0, 0, 1, 0, 0, 1}), InputError);  // X^2 | f
}

TEST_CASE("quadratic twists") {
  const auto c = custom_curve({1, -1, 0, 0, 0, 1});
  CHECK(quadratic_twist(c, 1).f() == c.f());
  CHECK(quadratic_twist(c, -1).f() == c.f() * Rational(-1));
  CHECK_THROWS_AS(quadratic_twist(c, 0), InputError);
  CHECK_THROWS_AS(quadratic_twist(c, 12), InputError);
  const auto twice = quadratic_twist(quadratic_twist(c, 5), 5);
  CHECK(twice.twist() == 1);
  for (auto p : primes_up_to(50)) {
    if (is_bad_prime(c, p) || p == 5) continue;
    CHECK(local_factor(twice, p) == local_factor(c, p));
    const auto t = quadratic_twist(c, 5);
    if (modular::legendre(5, p) == 1) CHECK(local_factor(t, p) == local_factor(c, p));
  }
  CHECK(quadratic_twist(d8_curve(3), -1).spec() == "d8:u=3;twist=-1");
}

TEST_CASE("bad primes") {
  const auto c = alt_model(Family::D8, 1);
  const auto bad = bad_primes(c, 50);
  CHECK(std::find(bad.begin(), bad.end(), 2) != bad.end());
  CHECK(std::find(bad.begin(), bad.end(), 3) != bad.end());
  const auto bad12 = bad_primes(alt_model(Family::D12, 1), 50);
  CHECK(std::find(bad12.begin(), bad12.end(), 3) != bad12.end());
  CHECK(is_bad_prime(d8_curve(3), 2));
  CHECK(is_bad_prime(d8_curve(3), 3));  // denominators
  CHECK_THROWS_AS(count_points(c, 3, 1), InputError);
}

TEST_CASE("point counts against exhaustive enumeration") {
  const auto c = alt_model(Family::D8, 1);
  CHECK(count_points(c, 7, 1) == 8);
  CHECK(brute_fp(c, 7) == 8);

  std::uint64_t n49 = 1;  // one point at infinity on the quintic
  for (int xa = 0; xa < 7; ++xa)
    for (int xb = 0; xb < 7; ++xb) {
      const G49 x{xa, xb};
      const G49 x2 = x * x, x3 = x2 * x, x5 = x3 * x2;
      const G49 v = x5 + x3 + x;
      for (int ya = 0; ya < 7; ++ya)
        for (int yb = 0; yb < 7; ++yb) {
          const G49 y{ya, yb};
          if (y * y == v) ++n49;
        }
    }
  CHECK(count_points(c, 7, 2) == n49);

  for (const auto& curve : {d8_curve(3), d12_curve(2), alt_model(Family::D12, 1), custom_curve({1, -1, 0, 0, 0, 1}),
                            quadratic_twist(d8_curve(make_rational(5, 7)), -3)})
    for (auto p : primes_up_to(60))
      if (!is_bad_prime(curve, p)) CHECK(count_points(curve, p, 1) == brute_fp(curve, p));
}

TEST_CASE("local factor assembly") {
  const auto trivial = local_factor_from_counts(11, 12, 122);
  CHECK(trivial.polynomial() == IntPolynomial({1, 0, 0, 0, 121}));
  const auto lf = local_factor(alt_model(Family::D8, 1), 7);
  CHECK(lf.trace() == 0);
  CHECK(lf.n1 == 8);
  CHECK(lf.c[3] == 7 * lf.c[1]);
  CHECK(lf.c[4] == 49);
  CHECK_THROWS_AS(local_factor_from_counts(7, 8, 47), InternalError);
}

TEST_CASE("local factor invariants") {
  for (const auto& curve : {d8_curve(3), d12_curve(2), custom_curve({1, -1, 0, 0, 0, 1}), alt_model(Family::D8, 1)})
    for (auto p : primes_up_to(300)) {
      if (is_bad_prime(curve, p)) continue;
      const auto lf = local_factor(curve, p);
      CHECK(lf.validate().empty());
      CHECK(lf.c[3] == static_cast<std::int64_t>(p) * lf.c[1]);
      CHECK(lf.c[4] == static_cast<std::int64_t>(p * p));
      CHECK(static_cast<double>(lf.c[1] * lf.c[1]) <= 16.0 * static_cast<double>(p));
      // functional equation: p^2 T^4 L(1/(pT)) = L(T)
      const auto poly = lf.polynomial();
      std::vector<Integer> refl(5);
      Integer pk = 1;  // p^(4-k)
      for (int k = 4; k >= 0; --k) {
        refl[4 - k] = poly.coeff(k) * pk;
        pk *= static_cast<unsigned long>(p);
      }
      for (auto& x : refl) x /= Integer(static_cast<unsigned long>(p * p));
      CHECK(IntPolynomial(refl) == poly);
      CHECK(lf.n1 == count_points(curve, p, 1));
      CHECK(lf.n2 == count_points(curve, p, 2));
    }
}

TEST_CASE("spec strings") {
  CHECK(d8_curve(3).spec() == "d8:u=3");
  CHECK(d12_curve(q(4, 25)).spec() == "d12:u=4/25");
  CHECK(custom_curve({1, -1, 0, 0, 0, 1}).spec() == "custom:f=[1,-1,0,0,0,1]");
  CHECK(quadratic_twist(custom_curve({1, -1, 0, 0, 0, 1}), 2).spec() == "custom:f=[1,-1,0,0,0,1];twist=2");
}
