#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace twistlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed input or violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails (an arithmetic bug, not bad input).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

Rational make_rational(long num, long den = 1);

/// Parses "n" or "n/d" (optional sign on n). Result is canonicalized.
Rational parse_rational(std::string_view text);

/// "n/d" with d > 0 and gcd 1; integers print without "/1".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Signed squarefree kernel: n = s * k^2 with s squarefree and sign(s) = sign(n).
/// Throws InputError for n = 0 or when n has a cofactor too large to split.
Integer squarefree_part(const Integer& n);
/// Squarefree kernel of a nonzero rational, i.e. of num * den.
Integer squarefree_part(const Rational& q);

bool is_squarefree(const Integer& n);
bool is_rational_square(const Rational& q);

/// Distinct prime divisors by trial division (|n| must factor below 10^12 cofactor).
std::vector<Integer> prime_divisors(const Integer& n);

/// All primes <= bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

bool is_prime_u64(std::uint64_t n);

}  // namespace twistlab
