#include "twistlab/spec.hpp"

#include <optional>
#include <vector>

namespace twistlab::cli {

using curves::GenusTwoCurve;

namespace {

Rational rational_at(const std::string& text, std::size_t begin, std::size_t end) {
  try {
    return parse_rational(std::string_view(text).substr(begin, end - begin));
  } catch (const InputError& e) {
    throw SpecError(std::string("malformed rational: ") + e.what(), begin);
  }
}

std::vector<Rational> coefficient_list(const std::string& text, std::size_t begin, std::size_t end) {
  if (begin >= end || text[begin] != '[') throw SpecError("expected '['", begin);
  if (text[end - 1] != ']') throw SpecError("expected ']'", end - 1);
  std::vector<Rational> out;
  std::size_t pos = begin + 1;
  while (pos < end - 1) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos || comma > end - 1) comma = end - 1;
    out.push_back(rational_at(text, pos, comma));
    pos = comma + 1;
  }
  if (out.empty()) throw SpecError("empty coefficient list", begin);
  return out;
}

}  // namespace

GenusTwoCurve parse_curve_spec(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) throw SpecError("missing ':' after the curve tag", text.size());
  const std::string tag = text.substr(0, colon);
  const bool custom = tag == "custom";
  if (!custom && tag != "d8" && tag != "d12" && tag != "d8alt" && tag != "d12alt")
    throw SpecError("unknown curve tag '" + tag + "'", 0);

  std::optional<Rational> u;
  std::optional<std::vector<Rational>> f;
  std::optional<Integer> twist;
  std::size_t pos = colon + 1;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    if (semi == std::string::npos) semi = text.size();
    const std::size_t eq = text.find('=', pos);
    if (eq == std::string::npos || eq > semi) throw SpecError("expected key=value", pos);
    const std::string key = text.substr(pos, eq - pos);
    if (key == "u" && !custom) {
      if (u) throw SpecError("duplicate field 'u'", pos);
      u = rational_at(text, eq + 1, semi);
    } else if (key == "f" && custom) {
      if (f) throw SpecError("duplicate field 'f'", pos);
      f = coefficient_list(text, eq + 1, semi);
    } else if (key == "twist") {
      if (twist) throw SpecError("duplicate field 'twist'", pos);
      const Rational d = rational_at(text, eq + 1, semi);
      if (d.get_den() != 1) throw SpecError("twist must be an integer", eq + 1);
      twist = d.get_num();
    } else {
      throw SpecError("unexpected field '" + key + "' for tag " + tag, pos);
    }
    pos = semi + 1;
  }
  if (custom && !f) throw SpecError("custom curve needs f=[...]", text.size());
  if (!custom && !u) throw SpecError("missing field 'u'", text.size());

  std::optional<GenusTwoCurve> curve;
  if (tag == "d8") curve = curves::d8_curve(*u);
  if (tag == "d12") curve = curves::d12_curve(*u);
  if (tag == "d8alt") curve = curves::alt_model(curves::Family::D8, *u);
  if (tag == "d12alt") curve = curves::alt_model(curves::Family::D12, *u);
  if (custom) curve = curves::custom_curve(*f);
  if (twist) curve = curves::quadratic_twist(*curve, *twist);
  return *curve;
}

std::string canonical_spec(const std::string& text) { return parse_curve_spec(text).spec(); }

}  // namespace twistlab::cli
