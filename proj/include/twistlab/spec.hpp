#pragma once

#include <cstddef>
#include <string>

#include "twistlab/curves.hpp"

namespace twistlab::cli {

/// Malformed curve spec; `position` is the offset of the offending character.
class SpecError : public InputError {
 public:
  SpecError(const std::string& what, std::size_t position)
      : InputError(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// d8:u=<q> | d12:u=<q> | d8alt:u=<q> | d12alt:u=<q> | custom:f=[a0,...,an], then optionally ;twist=<d>.
curves::GenusTwoCurve parse_curve_spec(const std::string& text);

/// parse_curve_spec(text).spec()
std::string canonical_spec(const std::string& text);

}  // namespace twistlab::cli
