#pragma once

#include <cstdint>
#include <vector>

#include "twistlab/field.hpp"
#include "twistlab/groups.hpp"
#include "twistlab/polynomial.hpp"

namespace twistlab::galois {

/// Frob_p in a multiquadratic field: one Legendre symbol per generator.
struct FrobeniusClass {
  std::vector<int> signs;
  GaloisElement element() const;
};

/// 2 together with the primes dividing some generator.
std::vector<std::uint64_t> ramified_primes(const MultiquadraticField& field);
bool is_ramified(const MultiquadraticField& field, std::uint64_t p);

/// Rejects ramified p.
FrobeniusClass frobenius(const MultiquadraticField& field, std::uint64_t p);

/// 1 if every sign is +1, else 2.
int residue_degree(const FrobeniusClass& fc);

struct ThetaAtFrobenius {
  groups::Matrix4 matrix;
  IntPolynomial charpoly;  ///< det(1 - M T)
  int group_element = 0;   ///< lambda_phi(Frob_p) in G_C
  int residue_degree_in_k = 1;
};

/// det(1 - M T) of a rational 4x4 matrix; throws InternalError if not integral.
IntPolynomial reciprocal_charpoly(const groups::Matrix4& m);

/// theta_C(lambda_phi(Frob_p)) for the quadratic twist by d (d = 1 gives the trivial cocycle
/// sigma -> (1, sigma)). p must be unramified in L = K(sqrt d) and odd.
ThetaAtFrobenius theta_at_frobenius(const groups::TwistingGroup& g, const Integer& d, std::uint64_t p);

}  // namespace twistlab::galois
