#include <doctest.h>

#include "twistlab/modular.hpp"
#include "twistlab/numbers.hpp"

using namespace twistlab::modular;

TEST_CASE("legendre examples") {
  CHECK(legendre(0, 7) == 0);
  CHECK(legendre(1, 11) == 1);
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(3, 7) == -1);
  CHECK(legendre(-1, 7) == -1);
  CHECK(legendre(-1, 13) == 1);
  CHECK_THROWS_AS(legendre(3, 2), twistlab::InputError);
  CHECK_THROWS_AS(legendre(2, 15), twistlab::InputError);
}

TEST_CASE("legendre is multiplicative and counts (p-1)/2 squares") {
  for (u64 p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    int squares = 0;
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(p); ++a) {
      if (legendre(a, p) == 1) ++squares;
      for (std::int64_t b = 0; b < static_cast<std::int64_t>(p); ++b)
        CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
    }
    CHECK(squares == static_cast<int>((p - 1) / 2));
  }
}

TEST_CASE("smallest non-residue") {
  CHECK(find_nonresidue(3) == 2);
  CHECK(find_nonresidue(7) == 3);
  CHECK(find_nonresidue(5) == 2);
  CHECK(find_nonresidue(23) == 5);
}

TEST_CASE("prime field operations") {
  const u64 p = 101;
  CHECK(Fp(1, p).inv() == Fp(1, p));
  CHECK(Fp(-3, p).value() == 98);
  CHECK_THROWS_AS(Fp(0, p).inv(), twistlab::InputError);
  for (std::int64_t a = 1; a < 101; ++a) CHECK(Fp(a, p) * Fp(a, p).inv() == Fp(1, p));
}

TEST_CASE("quadratic extension: norm, Lagrange, squares of F_p") {
  for (u64 p : {3, 5, 7, 11, 13}) {
    const auto one = Fp2(Fp(1, p));
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(p); ++a)
      for (std::int64_t b = 0; b < static_cast<std::int64_t>(p); ++b) {
        const Fp2 x(Fp(a, p), Fp(b, p));
        const Fp2 prod = x * x.conj();
        CHECK(prod.imag().is_zero());
        CHECK(prod.real() == x.norm());
        CHECK(x.norm() == Fp(a * a, p) - Fp(static_cast<std::int64_t>(x.nonresidue()), p) * Fp(b * b, p));
        if (x.is_zero()) continue;
        CHECK(x.pow(static_cast<unsigned __int128>(p) * p - 1) == one);
        CHECK(x * x.inv() == one);
      }
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(p); ++a)
      CHECK(Fp2(Fp(a, p)).pow((static_cast<unsigned __int128>(p) * p - 1) / 2) == one);
  }
}

TEST_CASE("legendre table") {
  const auto t = legendre_table(19);
  for (std::int64_t a = 0; a < 19; ++a) CHECK(t[a] == legendre(a, 19));
}
