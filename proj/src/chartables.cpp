#include "twistlab/groups.hpp"

#include <functional>
#include <mutex>
#include <sstream>

namespace twistlab::groups {

namespace {

struct RawTable {
  const char* caption;
  const char* gap_id;
  int order;
  const char* labels;
  std::vector<int> sizes;
  std::vector<const char*> rows;
};

// Entries: integers, "2i", "-2i", "s3" = sqrt(-3), "-s3", "z8" = the order-8 entry of GAP(16,7).
const RawTable kGap32_43{
    "D8 x| (C2 x C2)", "GAP(32,43)", 32, "1A 2A 2B 2C 2D 2E 4A 4B 4C 8A 8B",
    {1, 1, 2, 4, 4, 4, 2, 2, 4, 4, 4},
    {
        "1 1 1 1 1 1 1 1 1 1 1",
        "1 1 -1 1 -1 1 1 -1 -1 -1 1",
        "1 1 1 1 -1 -1 1 1 1 -1 -1",
        "1 1 -1 1 1 -1 1 -1 -1 1 -1",
        "1 1 -1 -1 1 -1 1 -1 1 -1 1",
        "1 1 1 -1 -1 -1 1 1 -1 1 1",
        "1 1 -1 -1 -1 1 1 -1 1 1 -1",
        "1 1 1 -1 1 1 1 1 -1 -1 -1",
        "2 2 2 0 0 0 -2 -2 0 0 0",
        "2 2 -2 0 0 0 -2 2 0 0 0",
        "4 -4 0 0 0 0 0 0 0 0 0",
    }};

const RawTable kGap16_13{
    "D8 x| C2", "GAP(16,13)", 16, "1A 2A 2B 2C 2D 4A 4B 4C 4D 4E",
    {1, 1, 2, 2, 2, 1, 1, 2, 2, 2},
    {
        "1 1 1 1 1 1 1 1 1 1",
        "1 1 -1 1 1 -1 -1 1 -1 -1",
        "1 1 -1 -1 -1 -1 -1 1 1 1",
        "1 1 1 -1 -1 1 1 1 -1 -1",
        "1 1 1 -1 1 -1 -1 -1 1 -1",
        "1 1 1 1 -1 -1 -1 -1 -1 1",
        "1 1 -1 -1 1 1 1 -1 -1 1",
        "1 1 -1 1 -1 1 1 -1 1 -1",
        "2 -2 0 0 0 2i -2i 0 0 0",
        "2 -2 0 0 0 -2i 2i 0 0 0",
    }};

const RawTable kGap16_7{
    "D8 x| C2", "GAP(16,7)", 16, "1A 2A 2B 2C 4A 8A 8B",
    {1, 1, 4, 4, 2, 2, 2},
    {
        "1 1 1 1 1 1 1",
        "1 1 -1 -1 1 1 1",
        "1 1 -1 1 1 -1 -1",
        "1 1 1 -1 1 -1 -1",
        "2 2 0 0 -2 0 0",
        "2 -2 0 0 0 z8 -z8",
        "2 -2 0 0 0 -z8 z8",
    }};

// The printed table labels its first eight rows all as chi_1; they are chi_1..chi_8 in order.
const RawTable kGap48_38{
    "D12 x| (C2 x C2)", "GAP(48,38)", 48, "1A 2A 2B 2C 2D 2E 2F 2G 3A 4A 4B 6A 6B 6C 12A",
    {1, 1, 2, 2, 3, 3, 6, 6, 2, 2, 6, 2, 4, 4, 4},
    {
        "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1",
        "1 1 1 -1 -1 -1 -1 1 1 -1 1 1 1 -1 -1",
        "1 1 -1 1 -1 -1 1 -1 1 -1 1 1 -1 1 -1",
        "1 1 -1 -1 1 1 -1 -1 1 1 1 1 -1 -1 1",
        "1 1 1 1 -1 -1 -1 -1 1 1 -1 1 1 1 1",
        "1 1 1 -1 1 1 1 -1 1 -1 -1 1 1 -1 -1",
        "1 1 -1 1 1 1 -1 1 1 -1 -1 1 -1 1 -1",
        "1 1 -1 -1 -1 -1 1 1 1 1 -1 1 -1 -1 1",
        "2 2 2 2 0 0 0 0 -1 2 0 -1 -1 -1 -1",
        "2 2 -2 -2 0 0 0 0 -1 2 0 -1 1 1 -1",
        "2 2 2 -2 0 0 0 0 -1 -2 0 -1 -1 1 1",
        "2 2 -2 2 0 0 0 0 -1 -2 0 -1 1 -1 1",
        "2 -2 0 0 -2 2 0 0 2 0 0 -2 0 0 0",
        "2 -2 0 0 2 -2 0 0 2 0 0 -2 0 0 0",
        "4 -4 0 0 0 0 0 0 -2 0 0 2 0 0 0",
    }};

const RawTable kGap24_14{
    "D12 x| C2", "GAP(24,14)", 24, "1A 2A 2B 2C 2D 2E 2F 2G 3A 6A 6B 6C",
    {1, 1, 1, 1, 3, 3, 3, 3, 2, 2, 2, 2},
    {
        "1 1 1 1 1 1 1 1 1 1 1 1",
        "1 -1 -1 1 1 -1 -1 1 1 -1 1 -1",
        "1 -1 1 -1 -1 -1 1 1 1 -1 -1 1",
        "1 1 -1 -1 -1 1 -1 1 1 1 -1 -1",
        "1 1 1 1 -1 -1 -1 -1 1 1 1 1",
        "1 -1 -1 1 -1 1 1 -1 1 -1 1 -1",
        "1 -1 1 -1 1 1 -1 -1 1 -1 -1 1",
        "1 1 -1 -1 1 -1 1 -1 1 1 -1 -1",
        "2 2 2 2 0 0 0 0 -1 -1 -1 -1",
        "2 -2 -2 2 0 0 0 0 -1 1 -1 1",
        "2 2 -2 -2 0 0 0 0 -1 -1 1 1",
        "2 -2 2 -2 0 0 0 0 -1 1 1 -1",
    }};

const RawTable kGap24_8{
    "D12 x| C2", "GAP(24,8)", 24, "1A 2A 2B 2C 3A 4A 6A 6B 6C",
    {1, 1, 2, 6, 2, 6, 2, 2, 2},
    {
        "1 1 1 1 1 1 1 1 1",
        "1 1 1 -1 1 -1 1 1 1",
        "1 1 -1 -1 1 1 -1 -1 1",
        "1 1 -1 1 1 -1 -1 -1 1",
        "2 2 -2 0 -1 0 1 1 -1",
        "2 -2 0 0 2 0 0 0 -2",
        "2 2 2 0 -1 0 -1 -1 -1",
        "2 -2 0 0 -1 0 -s3 s3 1",
        "2 -2 0 0 -1 0 s3 -s3 1",
    }};

CyclotomicValue parse_entry(const std::string& token, const CyclotomicValue& z8) {
  bool neg = !token.empty() && token[0] == '-';
  std::string body = neg ? token.substr(1) : token;
  CyclotomicValue v;
  if (body == "s3") v = CyclotomicValue::sqrt_minus3();
  else if (body == "z8") v = z8;
  else if (!body.empty() && body.back() == 'i') v = CyclotomicValue::i() * parse_rational(body.substr(0, body.size() - 1));
  else v = CyclotomicValue(parse_rational(body));
  return neg ? -v : v;
}

TableData build(const RawTable& raw, const CyclotomicValue& z8) {
  TableData t;
  t.caption = raw.caption;
  t.gap_id = raw.gap_id;
  t.order = raw.order;
  std::istringstream labels(raw.labels);
  for (std::string l; labels >> l;) t.class_labels.push_back(l);
  t.class_sizes = raw.sizes;
  for (std::size_t r = 0; r < raw.rows.size(); ++r) {
    t.character_labels.push_back("chi_" + std::to_string(r + 1));
    std::istringstream row(raw.rows[r]);
    std::vector<CyclotomicValue> values;
    for (std::string tok; row >> tok;) values.push_back(parse_entry(tok, z8));
    ensure(values.size() == t.class_labels.size(), std::string("ragged row in ") + raw.gap_id);
    t.rows.push_back(std::move(values));
  }
  ensure(t.class_sizes.size() == t.class_labels.size(), std::string("size row mismatch in ") + raw.gap_id);
  return t;
}

struct Tables {
  TableData gap32_43, gap16_13, gap16_7, gap48_38, gap24_14, gap24_8;
};

const Tables& tables() {
  static const Tables t = [] {
    const Zeta8Resolution z = resolve_gap16_7_entry();
    CyclotomicValue chosen;
    for (const auto& c : z.candidates)
      if (c.name == z.chosen) chosen = c.value;
    return Tables{build(kGap32_43, {}), build(kGap16_13, {}), build(kGap16_7, chosen),
                  build(kGap48_38, {}), build(kGap24_14, {}), build(kGap24_8, {})};
  }();
  return t;
}

}  // namespace

int TableData::class_order(int column) const {
  const std::string& l = class_labels[column];
  std::size_t k = 0;
  while (k < l.size() && l[k] >= '0' && l[k] <= '9') ++k;
  return std::stoi(l.substr(0, k));
}

TableCheck verify_table_data(const TableData& t) {
  TableCheck check;
  const int nc = static_cast<int>(t.class_labels.size());
  const int nr = static_cast<int>(t.rows.size());
  auto fail = [&](const std::string& s) { check.failures.push_back(t.gap_id + ": " + s); };

  int size_sum = 0;
  for (int s : t.class_sizes) size_sum += s;
  check.class_sizes_sum = size_sum == t.order;
  if (!check.class_sizes_sum) fail("class sizes sum to " + std::to_string(size_sum));

  check.degrees_match_identity_column = true;
  Rational deg_sq = 0;
  for (int r = 0; r < nr; ++r) {
    const auto& d = t.rows[r][0];
    if (!d.is_rational() || d.as_rational() <= 0 || d.as_rational().get_den() != 1) {
      check.degrees_match_identity_column = false;
      fail(t.character_labels[r] + " has a non-integral degree");
      continue;
    }
    deg_sq += d.as_rational() * d.as_rational();
  }
  check.degree_sum = deg_sq == t.order;
  if (!check.degree_sum) fail("sum of squared degrees is " + twistlab::to_string(deg_sq));
  if (nr != nc) {
    check.degrees_match_identity_column = false;
    fail("table is not square");
  }

  check.row_orthogonality = true;
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      CyclotomicValue acc;
      for (int k = 0; k < nc; ++k) acc += t.rows[a][k] * t.rows[b][k].conj() * Rational(t.class_sizes[k]);
      const CyclotomicValue expected(a == b ? t.order : 0);
      if (!(acc == expected)) {
        check.row_orthogonality = false;
        fail("rows " + t.character_labels[a] + ", " + t.character_labels[b] + " not orthogonal");
      }
    }

  check.column_orthogonality = true;
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j) {
      CyclotomicValue acc;
      for (int r = 0; r < nr; ++r) acc += t.rows[r][i] * t.rows[r][j].conj();
      const CyclotomicValue expected(i == j ? Rational(t.order) / t.class_sizes[i] : Rational(0));
      if (!(acc == expected)) {
        check.column_orthogonality = false;
        fail("columns " + t.class_labels[i] + ", " + t.class_labels[j] + " not orthogonal");
      }
    }
  return check;
}

Zeta8Resolution resolve_gap16_7_entry() {
  // Orthogonality alone cannot tell sqrt2 from i*sqrt2 (the latter gives SD16), so each
  // candidate is also matched against the computed group for (d8, u = 2).
  Zeta8Resolution res;
  const std::vector<std::pair<std::string, CyclotomicValue>> candidates{
      {"zeta8", CyclotomicValue::zeta8()},
      {"zeta8+zeta8^-1 (sqrt2)", CyclotomicValue::sqrt2()},
      {"zeta8-zeta8^5 (2*zeta8)", CyclotomicValue::zeta8() - CyclotomicValue::zeta_power(15)},
      {"zeta8+zeta8^3 (i*sqrt2)", CyclotomicValue::zeta8() + CyclotomicValue::zeta_power(9)},
  };
  const TwistingGroup tg(Family::D8, Rational(2));
  for (const auto& [name, value] : candidates) {
    const TableData t = build(kGap16_7, value);
    Zeta8Resolution::Candidate c{name, value, verify_table_data(t).ok(), false};
    if (c.orthogonal) {
      try {
        c.matches_group = match_table(tg, t).admissible_matchings > 0;
      } catch (const InternalError&) {
      }
    }
    res.candidates.push_back(c);
    if (c.orthogonal && c.matches_group) {
      ensure(res.chosen.empty(), "GAP(16,7): more than one order-8 entry is consistent");
      res.chosen = name;
    }
  }
  ensure(!res.chosen.empty(), "GAP(16,7): no candidate order-8 entry is consistent");
  return res;
}

const TableData& appendix_table(Family family, ArithmeticCase arith) {
  const Tables& t = tables();
  if (family == Family::D8) {
    switch (arith) {
      case ArithmeticCase::Generic: return t.gap32_43;
      case ArithmeticCase::USquare: return t.gap16_13;
      case ArithmeticCase::TwistSquare: return t.gap16_7;
    }
  }
  switch (arith) {
    case ArithmeticCase::Generic: return t.gap48_38;
    case ArithmeticCase::USquare: return t.gap24_14;
    case ArithmeticCase::TwistSquare: return t.gap24_8;
  }
  throw InternalError("unreachable");
}

std::vector<const TableData*> all_appendix_tables() {
  const Tables& t = tables();
  return {&t.gap32_43, &t.gap16_13, &t.gap16_7, &t.gap48_38, &t.gap24_14, &t.gap24_8};
}

CharacterTable character_table(const TwistingGroup& tg) {
  return match_table(tg, appendix_table(tg.family(), tg.arithmetic()));
}

CharacterTable match_table(const TwistingGroup& tg, const TableData& data) {
  const FiniteGroup& G = tg.group();
  const int nc = G.class_count();
  ensure(data.order == G.order(), data.gap_id + ": group order mismatch");
  ensure(static_cast<int>(data.class_labels.size()) == nc, data.gap_id + ": class count mismatch");

  // a[i][j][k] = #{(x, y) in K_i x K_j : xy = z_k} for a fixed z_k in K_k
  std::vector<std::vector<std::vector<long>>> a(nc, std::vector<std::vector<long>>(nc, std::vector<long>(nc, 0)));
  for (int k = 0; k < nc; ++k) {
    const int z = G.classes[k].front();
    for (int x = 0; x < G.order(); ++x) {
      const int y = G.mul(G.inverse[x], z);
      ++a[G.class_of[x]][G.class_of[y]][k];
    }
  }

  CharacterTable result;
  result.data = &data;
  std::vector<int> assign(nc, -1);
  std::vector<bool> used(nc, false);

  auto consistent = [&](const std::vector<int>& col_to_class) {
    for (const auto& row : data.rows) {
      std::vector<CyclotomicValue> omega(nc);
      const Rational inv_deg = Rational(1) / row[0].as_rational();
      for (int col = 0; col < nc; ++col) {
        const int k = col_to_class[col];
        omega[k] = row[col] * (Rational(G.class_size(k)) * inv_deg);
      }
      for (int i = 0; i < nc; ++i)
        for (int j = i; j < nc; ++j) {
          CyclotomicValue rhs;
          for (int k = 0; k < nc; ++k)
            if (a[i][j][k] != 0) rhs += omega[k] * Rational(a[i][j][k]);
          if (!(omega[i] * omega[j] == rhs)) return false;
        }
    }
    return true;
  };

  std::function<void(int)> search = [&](int col) {
    if (col == nc) {
      if (consistent(assign)) {
        if (result.admissible_matchings == 0) result.column_to_class = assign;
        ++result.admissible_matchings;
        result.admissible_maps.push_back(assign);
      }
      return;
    }
    for (int k = 0; k < nc; ++k) {
      if (used[k] || G.class_order(k) != data.class_order(col) || G.class_size(k) != data.class_sizes[col]) continue;
      used[k] = true;
      assign[col] = k;
      search(col + 1);
      used[k] = false;
    }
  };
  search(0);
  ensure(result.admissible_matchings > 0, data.gap_id + ": no column matching is consistent with the computed group");

  for (const auto& row : data.rows) {
    ClassFunction chi;
    chi.values.resize(nc);
    for (int col = 0; col < nc; ++col) chi.values[result.column_to_class[col]] = row[col];
    result.characters.push_back(std::move(chi));
  }
  return result;
}

}  // namespace twistlab::groups
