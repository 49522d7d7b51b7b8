#include <doctest.h>

#include <map>

#include "twistlab/galois.hpp"
#include "twistlab/modular.hpp"

using namespace twistlab;
using namespace twistlab::galois;

TEST_CASE("ramified primes") {
  CHECK(ramified_primes(MultiquadraticField({3, 2})) == std::vector<std::uint64_t>{2, 3});
  CHECK(ramified_primes(MultiquadraticField({1})) == std::vector<std::uint64_t>{2});
  CHECK(ramified_primes(MultiquadraticField({6, 2})) == std::vector<std::uint64_t>{2, 3});
  CHECK(MultiquadraticField({6, 2, 3}).degree() == 4);  // 6 = 2*3 mod squares
}

TEST_CASE("Frobenius sign vectors") {
  const MultiquadraticField k({3, 2});
  CHECK(frobenius(k, 7).signs == std::vector<int>{-1, 1});
  CHECK(frobenius(k, 23).signs == std::vector<int>{1, 1});
  CHECK(residue_degree(frobenius(k, 23)) == 1);
  CHECK(residue_degree(frobenius(k, 7)) == 2);
  CHECK(residue_degree(FrobeniusClass{{-1, -1}}) == 2);
  CHECK_THROWS_AS(frobenius(k, 3), InputError);
  // multiplicative in the generators
  const MultiquadraticField k3({3, 2, 5});
  for (auto p : primes_up_to(200)) {
    if (is_ramified(k3, p)) continue;
    const auto s = frobenius(k3, p).signs;
    CHECK(modular::legendre(30, p) == s[0] * s[1] * s[2]);
  }
}

TEST_CASE("theta at Frobenius") {
  const groups::TwistingGroup tg(groups::Family::D8, 3);
  const IntPolynomial one_minus_t{Integer(1), Integer(-1)}, one_plus_t{Integer(1), Integer(1)};
  const IntPolynomial one_minus_t2{Integer(1), Integer(0), Integer(-1)};
  // 23: split in K, 5 is not a square mod 23
  REQUIRE(modular::legendre(5, 23) == -1);
  CHECK(theta_at_frobenius(tg, 1, 23).matrix == groups::identity4());
  CHECK(theta_at_frobenius(tg, 1, 23).charpoly == one_minus_t.pow(4));
  CHECK(theta_at_frobenius(tg, 5, 23).charpoly == one_plus_t.pow(4));
  // 7 is inert in Q(sqrt 3)
  const auto t7 = theta_at_frobenius(tg, 5, 7);
  CHECK(t7.residue_degree_in_k == 2);
  CHECK(groups::trace(t7.matrix) == 0);
  CHECK(t7.charpoly == one_minus_t2.pow(2));
  CHECK_THROWS_AS(theta_at_frobenius(tg, 5, 5), InputError);
  for (auto p : primes_up_to(500)) {
    if (p <= 7) continue;
    const auto t = theta_at_frobenius(tg, -7, p);
    CHECK(t.charpoly.coeff(0) == 1);
    CHECK(t.charpoly.degree() == 4);
    if (t.residue_degree_in_k == 1 && theta_at_frobenius(tg, 1, p).residue_degree_in_k == 1)
      CHECK(theta_at_frobenius(tg, 1, p).matrix == groups::identity4());
  }
}

TEST_CASE("Chebotarev sanity for Q(sqrt3, sqrt2)") {
  const MultiquadraticField k({3, 2});
  std::map<std::vector<int>, int> freq;
  int total = 0;
  for (auto p : primes_up_to(10000)) {
    if (is_ramified(k, p)) continue;
    ++freq[frobenius(k, p).signs];
    ++total;
  }
  CHECK(freq.size() == 4);
  for (const auto& [signs, n] : freq) {
    const double f = static_cast<double>(n) / total;
    CHECK(f > 0.20);
    CHECK(f < 0.30);
  }
}
