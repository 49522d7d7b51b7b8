#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "twistlab/curves.hpp"
#include "twistlab/groups.hpp"
#include "twistlab/polynomial.hpp"

namespace twistlab::rankin {

/// p_k = sum alpha_i^k over the reciprocal roots of P (P(0) = 1), k = 1..k_max, by Newton's identities.
std::vector<Integer> power_sums(const IntPolynomial& p, int k_max);

/// Inverse Newton: the unique P with P(0) = 1 and deg <= degree having the given power sums.
/// Throws InternalError if a coefficient is not integral.
IntPolynomial from_power_sums(const std::vector<Integer>& sums, int degree);

/// Polynomial whose reciprocal roots are all products alpha_i beta_j.
IntPolynomial tensor_product(const IntPolynomial& p, const IntPolynomial& q);

/// P(-T).
IntPolynomial negate_variable(const IntPolynomial& p);

using FactorSource = std::function<curves::LocalFactor(const curves::GenusTwoCurve&, std::uint64_t)>;

struct VerifyOptions {
  std::uint64_t pmin = 3;
  std::uint64_t pmax = 100;
  unsigned threads = 1;
  /// Defaults to curves::local_factor; must be thread-safe when threads > 1.
  FactorSource factors;
};

struct Failure {
  std::uint64_t p = 0;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string check;
  std::map<std::string, std::string> params;
  std::vector<std::uint64_t> primes_tested;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  bool passed = false;
};

/// Runs `task` for every prime in [pmin, pmax] on `threads` workers; results come back in prime order.
template <class R>
std::vector<R> map_primes(const std::vector<std::uint64_t>& primes, unsigned threads,
                          const std::function<R(std::uint64_t)>& task) {
  std::vector<R> out(primes.size());
  if (threads <= 1 || primes.size() < 2) {
    for (std::size_t i = 0; i < primes.size(); ++i) out[i] = task(primes[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_lock;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < primes.size();) {
      try {
        out[i] = task(primes[i]);
      } catch (...) {
        std::lock_guard<std::mutex> hold(error_lock);
        if (!error) error = std::current_exception();
        next = primes.size();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(primes.size()));
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

/// Primes in [pmin, pmax].
std::vector<std::uint64_t> prime_range(std::uint64_t pmin, std::uint64_t pmax);

/// L_p(C^d, T) = L_p(C, chi_d(p) T) at good primes p not dividing 2d.
Report verify_gengen(const curves::GenusTwoCurve& c, const Integer& d, const VerifyOptions& opt);

/// Rankin-Selberg product of L_p(C_u, T) with det(1 - theta_C(lambda_phi(Frob_p)) T) against
/// L_p(C', T)^4 (f = 1) or L_p(C', T)^2 L_p(C', -T)^2 (f = 2), C' the quadratic twist by d.
/// This checks the displayed identity only; simplicity of V_l(C') is not certified.
Report verify_theorem2(curves::Family family, const Rational& u, const Integer& d, const VerifyOptions& opt);

/// L_p(C', T) divides the degree-16 tensor product (divisibility in Z[T]).
bool verify_inclusion(const IntPolynomial& lp_twist, const IntPolynomial& lp_base, const IntPolynomial& theta_poly);

/// Inclusion over a prime range for C_u against `other` with theta from the quadratic cocycle of d
/// (d = 1: trivial cocycle). `other` defaults to the twist of C_u by d.
Report inclusion_report(curves::Family family, const Rational& u, const Integer& d, const VerifyOptions& opt,
                        const curves::GenusTwoCurve* other = nullptr);

/// Trace of theta at Frobenius vanishes when f = 2 (gating); when f = 1 compares
/// sgn(a_p Tr theta) with sgn(a_p'), a_p read as -c1 of L_p (informational).
Report sign_check(curves::Family family, const Rational& u, const Integer& d, const VerifyOptions& opt);

/// Exploratory: C_u against its alternate model. Reports at how many primes the f-dependent
/// identity holds with the trivial cocycle and with some element of G_C over Frob_p.
/// Never fails.
Report explore_alternate_pair(curves::Family family, const Rational& u, const VerifyOptions& opt);

}  // namespace twistlab::rankin
