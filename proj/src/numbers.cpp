#include "twistlab/numbers.hpp"

#include <charconv>

namespace twistlab {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

// Returns (prime, exponent) pairs of |n|.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n) {
  if (n == 0) throw InputError("cannot factor zero");
  std::vector<std::pair<Integer, unsigned>> out;
  Integer m = abs(n);
  auto strip = [&](unsigned long p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) return;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    out.emplace_back(Integer(p), e);
  };
  strip(2);
  for (unsigned long p = 3; p <= kTrialLimit; p += 2) {
    if (Integer(p) * p > m) break;
    strip(p);
  }
  if (m == 1) return out;
  if (Integer(kTrialLimit) * kTrialLimit >= m) {
    out.emplace_back(m, 1);
    return out;
  }
  if (mpz_perfect_square_p(m.get_mpz_t()) != 0) {
    Integer r = sqrt(m);
    if (mpz_probab_prime_p(r.get_mpz_t(), 30) != 0) {
      out.emplace_back(r, 2);
      return out;
    }
  }
  if (mpz_probab_prime_p(m.get_mpz_t(), 30) != 0) {
    out.emplace_back(m, 1);
    return out;
  }
  throw InputError("integer too large to factor by trial division: " + m.get_str());
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false))
    throw InputError("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Integer zn(n), zd{std::string(den)};
  if (zd == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Integer squarefree_part(const Integer& n) {
  Integer s = 1;
  for (const auto& [p, e] : factor(n))
    if (e % 2 == 1) s *= p;
  return n < 0 ? Integer(-s) : s;
}

Integer squarefree_part(const Rational& q) {
  if (q == 0) throw InputError("squarefree part of zero");
  Rational c(q);
  c.canonicalize();
  return squarefree_part(Integer(c.get_num() * c.get_den()));
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factor(n))
    if (e > 1) return false;
  return true;
}

bool is_rational_square(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  if (c < 0) return false;
  return mpz_perfect_square_p(c.get_num_mpz_t()) != 0 && mpz_perfect_square_p(c.get_den_mpz_t()) != 0;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (const auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace twistlab
