#include "twistlab/modular.hpp"

#include "twistlab/numbers.hpp"

namespace twistlab::modular {

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp != 0) {
    if ((exp & 1U) != 0) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

u64 reduce(std::int64_t a, u64 p) {
  if (a >= 0) return static_cast<u64>(a) % p;
  // -(a+1) avoids overflow at INT64_MIN
  const u64 m = static_cast<u64>(-(a + 1)) % p;
  return p - 1 - m;
}

int legendre(std::int64_t a, u64 p) {
  if (p < 3 || p % 2 == 0) throw InputError("legendre: modulus must be an odd prime");
  const u64 r = reduce(a, p);
  if (r == 0) return 0;
  const u64 e = pow_mod(r, (p - 1) / 2, p);
  if (e == 1) return 1;
  if (e == p - 1) return -1;
  throw InputError("legendre: modulus is not prime");
}

u64 find_nonresidue(u64 p) {
  for (u64 n = 2;; ++n)
    if (legendre(static_cast<std::int64_t>(n), p) == -1) return n;
}

Fp::Fp(std::int64_t value, u64 p) : value_(reduce(value, p)), p_(p) {
  if (p < 3 || p % 2 == 0) throw InputError("Fp: modulus must be an odd prime");
}

void Fp::check(const Fp& o) const {
  if (p_ != o.p_) throw InputError("Fp: mismatched moduli");
}

Fp Fp::operator+(const Fp& o) const {
  check(o);
  return from_reduced(add_mod(value_, o.value_, p_), p_);
}
Fp Fp::operator-(const Fp& o) const {
  check(o);
  return from_reduced(sub_mod(value_, o.value_, p_), p_);
}
Fp Fp::operator*(const Fp& o) const {
  check(o);
  return from_reduced(mul_mod(value_, o.value_, p_), p_);
}
Fp Fp::inv() const {
  if (value_ == 0) throw InputError("Fp: inverse of zero");
  return pow(p_ - 2);
}

Fp2::Fp2(const Fp& a, const Fp& b) : a_(a), b_(b), n_(find_nonresidue(a.modulus())) {
  if (a.modulus() != b.modulus()) throw InputError("Fp2: mismatched moduli");
}

Fp2 Fp2::operator+(const Fp2& o) const { return Fp2(a_ + o.a_, b_ + o.b_, n_); }
Fp2 Fp2::operator-(const Fp2& o) const { return Fp2(a_ - o.a_, b_ - o.b_, n_); }
Fp2 Fp2::operator*(const Fp2& o) const {
  const Fp n = Fp::from_reduced(n_, modulus());
  return Fp2(a_ * o.a_ + n * b_ * o.b_, a_ * o.b_ + b_ * o.a_, n_);
}
Fp Fp2::norm() const {
  const Fp n = Fp::from_reduced(n_, modulus());
  return a_ * a_ - n * b_ * b_;
}
Fp2 Fp2::pow(unsigned __int128 e) const {
  Fp2 result(Fp::from_reduced(1, modulus()), Fp::from_reduced(0, modulus()), n_);
  Fp2 base = *this;
  while (e != 0) {
    if ((e & 1U) != 0) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}
Fp2 Fp2::inv() const {
  if (is_zero()) throw InputError("Fp2: inverse of zero");
  const Fp ninv = norm().inv();
  const Fp2 c = conj();
  return Fp2(c.a_ * ninv, c.b_ * ninv, n_);
}

std::vector<signed char> legendre_table(u64 p) {
  std::vector<signed char> table(p, -1);
  table[0] = 0;
  for (u64 x = 1; x <= (p - 1) / 2; ++x) table[mul_mod(x, x, p)] = 1;
  return table;
}

}  // namespace twistlab::modular
