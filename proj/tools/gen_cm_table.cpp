// Regenerates src/cm_table.cpp and data/cm_table_provenance.json:
//   gen_cm_table <src/cm_table.cpp> <data/cm_table_provenance.json>

#include <fstream>
#include <iostream>

#include "cm_oracle.hpp"

int main(int argc, char** argv) {
  using namespace twistlab::cm_oracle;
  if (argc != 3) {
    std::cerr << "usage: gen_cm_table SOURCE_OUT PROVENANCE_OUT\n";
    return 1;
  }
  std::ofstream src(argv[1]);
  std::ofstream prov(argv[2]);
  src << "// Generated by tools/gen_cm_table.cpp; do not edit by hand.\n"
         "#include \"twistlab/cm.hpp\"\n\n"
         "namespace twistlab::cm {\n\n"
         "const std::vector<RawHilbertEntry>& raw_hilbert_table() {\n"
         "  static const std::vector<RawHilbertEntry> table{\n";
  prov << "{\n  \"schema\": 1,\n  \"method\": \"reduced forms, j = E4^3/Delta q-series, 200-digit binary floats, "
          "nearest-integer rounding\",\n  \"entries\": [\n";
  const auto& ds = class_number_le2_discriminants();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto e = hilbert_class_polynomial(ds[i]);
    if (e.max_rounding_error > Real("1e-6")) {
      std::cerr << "rounding failure at D = " << ds[i] << "\n";
      return 2;
    }
    src << "      {" << e.d << ", {";
    prov << "    {\"discriminant\": " << e.d << ", \"class_number\": " << e.coefficients.size() - 1
         << ", \"coefficients\": [";
    for (std::size_t k = 0; k < e.coefficients.size(); ++k) {
      src << (k ? ", " : "") << "\"" << e.coefficients[k] << "\"";
      prov << (k ? ", " : "") << "\"" << e.coefficients[k] << "\"";
    }
    src << "}},\n";
    prov << "], \"max_abs_rounding_error\": \"" << e.max_rounding_error.str(3, std::ios_base::scientific)
         << "\", \"max_relative_error\": \"" << e.max_relative_error.str(3, std::ios_base::scientific) << "\"}"
         << (i + 1 < ds.size() ? "," : "") << "\n";
  }
  src << "  };\n  return table;\n}\n\n}  // namespace twistlab::cm\n";
  prov << "  ]\n}\n";
  return 0;
}
