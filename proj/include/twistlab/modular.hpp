#pragma once

// Prime fields F_p and their quadratic extensions F_{p^2}, for odd p < 2^63.
// Primality of p is the caller's responsibility (the CLI feeds primes from a sieve).

#include <cstdint>
#include <vector>

namespace twistlab::modular {

using u64 = std::uint64_t;

inline u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
inline u64 add_mod(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 pow_mod(u64 base, u64 exp, u64 p);

/// Reduces a signed integer into [0, p).
u64 reduce(std::int64_t a, u64 p);

/// Legendre symbol by Euler's criterion. Rejects p = 2 and even p.
int legendre(std::int64_t a, u64 p);

/// Smallest positive quadratic non-residue mod p.
u64 find_nonresidue(u64 p);

class Fp {
 public:
  Fp(std::int64_t value, u64 p);
  static Fp from_reduced(u64 value, u64 p) { return Fp(value, p, 0); }

  u64 value() const { return value_; }
  u64 modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator-() const { return from_reduced(value_ == 0 ? 0 : p_ - value_, p_); }
  Fp pow(u64 e) const { return from_reduced(pow_mod(value_, e, p_), p_); }
  /// Throws InputError on zero.
  Fp inv() const;

  bool operator==(const Fp&) const = default;

 private:
  Fp(u64 value, u64 p, int) : value_(value), p_(p) {}
  void check(const Fp& o) const;
  u64 value_;
  u64 p_;
};

/// a + b*w with w^2 = n, n the smallest non-residue mod p.
class Fp2 {
 public:
  Fp2(const Fp& a, const Fp& b);
  explicit Fp2(const Fp& a) : Fp2(a, Fp::from_reduced(0, a.modulus())) {}

  const Fp& real() const { return a_; }
  const Fp& imag() const { return b_; }
  u64 modulus() const { return a_.modulus(); }
  u64 nonresidue() const { return n_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  Fp2 operator+(const Fp2& o) const;
  Fp2 operator-(const Fp2& o) const;
  Fp2 operator*(const Fp2& o) const;
  Fp2 conj() const { return Fp2(a_, -b_, n_); }
  /// a^2 - n b^2, lands in F_p.
  Fp norm() const;
  Fp2 pow(unsigned __int128 e) const;
  Fp2 inv() const;

  bool operator==(const Fp2& o) const { return a_ == o.a_ && b_ == o.b_; }

 private:
  Fp2(const Fp& a, const Fp& b, u64 n) : a_(a), b_(b), n_(n) {}
  Fp a_;
  Fp b_;
  u64 n_;
};

/// Table of Legendre symbols for 0..p-1, for counting loops.
std::vector<signed char> legendre_table(u64 p);

}  // namespace twistlab::modular
