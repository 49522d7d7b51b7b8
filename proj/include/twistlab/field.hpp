#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/numbers.hpp"

namespace twistlab::galois {

/// Element of Gal(K/Q) for multiquadratic K: bit i set means sqrt(m_i) -> -sqrt(m_i).
struct GaloisElement {
  std::uint32_t mask = 0;

  bool is_identity() const { return mask == 0; }
  GaloisElement operator*(GaloisElement o) const { return {mask ^ o.mask}; }
  bool operator==(const GaloisElement&) const = default;
  auto operator<=>(const GaloisElement&) const = default;
};

/// Q(sqrt m_1, ..., sqrt m_n) with the m_i squarefree and independent modulo squares.
class MultiquadraticField {
 public:
  MultiquadraticField() = default;
  /// Generators are reduced to squarefree parts; 1 and dependent ones are dropped,
  /// keeping first-occurrence order.
  explicit MultiquadraticField(const std::vector<Integer>& generators);

  const std::vector<Integer>& generators() const { return gens_; }
  std::size_t rank() const { return gens_.size(); }
  std::uint64_t degree() const { return std::uint64_t{1} << gens_.size(); }

  /// Exponent mask e with r = prod m_i^{e_i} modulo rational squares, if sqrt(r) lies in the field.
  std::optional<std::uint32_t> exponents(const Integer& r) const;
  bool contains_sqrt(const Integer& r) const { return exponents(r).has_value(); }

  /// Sign by which g moves sqrt(r). Throws InputError if sqrt(r) is not in the field.
  int sign_on(GaloisElement g, const Integer& r) const;

  std::vector<GaloisElement> galois_group() const;
  /// Restriction of an element of Gal(L/Q) to this subfield, L given by `larger`.
  GaloisElement restrict_from(const MultiquadraticField& larger, GaloisElement g) const;

  std::string describe() const;

 private:
  std::vector<Integer> gens_;
};

}  // namespace twistlab::galois
