#include "twistlab/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <memory>
#include <json.hpp>
#include <sstream>

#include "twistlab/cache.hpp"
#include "twistlab/cm.hpp"
#include "twistlab/galois.hpp"
#include "twistlab/groups.hpp"
#include "twistlab/rankin.hpp"
#include "twistlab/spec.hpp"

namespace twistlab::cli {

using nlohmann::ordered_json;
using curves::Family;
using curves::GenusTwoCurve;

namespace {

struct Options {
  std::string curve;
  std::string partner;
  std::string twist = "1";
  std::uint64_t pmin = 3;
  std::uint64_t pmax = 100;
  bool json = false;
  std::string cache;
  unsigned threads = 1;
  std::string family;
  std::string check;
  std::string field;
  std::uint64_t prime = 0;
};

ordered_json envelope() {
  ordered_json j;
  j["schema"] = 1;
  return j;
}

ordered_json cyclotomic_json(const CyclotomicValue& v) {
  ordered_json coords = ordered_json::array();
  for (const auto& c : v.coordinates()) coords.push_back(to_string(c));
  return {{"coordinates", coords}, {"text", v.render()}};
}

ordered_json polynomial_json(const IntPolynomial& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

ordered_json report_json(const rankin::Report& r) {
  ordered_json j = envelope();
  j["check"] = r.check;
  j["params"] = r.params;
  j["primes_tested"] = r.primes_tested;
  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures) {
    ordered_json o;
    if (f.p != 0)
      o["p"] = f.p;
    else
      o["p"] = nullptr;
    o["lhs"] = f.lhs;
    o["rhs"] = f.rhs;
    failures.push_back(o);
  }
  j["failures"] = failures;
  j["notes"] = r.notes;
  j["passed"] = r.passed;
  return j;
}

void print_report(const rankin::Report& r, bool json, std::ostream& out) {
  if (json) {
    out << report_json(r).dump(2) << '\n';
    return;
  }
  out << r.check << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.primes_tested.size() << " primes tested, "
      << r.failures.size() << " failures)\n";
  for (const auto& [k, v] : r.params) out << "  " << k << " = " << v << '\n';
  for (const auto& f : r.failures) out << "  p=" << f.p << ": " << f.lhs << " != " << f.rhs << '\n';
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
}

std::pair<Family, Rational> family_parameter(const GenusTwoCurve& c) {
  if (c.tag() != curves::ModelTag::D8Family && c.tag() != curves::ModelTag::D12Family)
    throw InputError("this command needs a family curve (d8:u=... or d12:u=...), got " + c.spec());
  if (c.twist() != 1) throw InputError("pass the twist with --twist, not inside the curve spec");
  return {c.tag() == curves::ModelTag::D8Family ? Family::D8 : Family::D12, *c.parameter()};
}

Integer parse_twist(const std::string& s) {
  const Rational d = parse_rational(s);
  if (d.get_den() != 1) throw InputError("--twist must be an integer");
  return d.get_num();
}

GenusTwoCurve require_curve(const Options& o) {
  if (o.curve.empty()) throw InputError("--curve is required");
  return parse_curve_spec(o.curve);
}

class Session {
 public:
  explicit Session(const Options& o) : opt_(o) {
    std::string path = o.cache.empty() ? default_cache_path() : o.cache;
    if (!path.empty()) cache_ = std::make_unique<LocalFactorCache>(path);
  }
  ~Session() {
    if (cache_) cache_->flush();
  }
  rankin::VerifyOptions verify_options() const {
    rankin::VerifyOptions v;
    v.pmin = opt_.pmin;
    v.pmax = opt_.pmax;
    v.threads = std::max(1U, opt_.threads);
    if (cache_) v.factors = cache_->source();
    return v;
  }

 private:
  const Options& opt_;
  std::unique_ptr<LocalFactorCache> cache_;
};

int cmd_lfactor(const Options& o, std::ostream& out) {
  const GenusTwoCurve c = require_curve(o);
  Session session(o);
  auto v = session.verify_options();
  rankin::FactorSource src = v.factors ? v.factors : rankin::FactorSource([](const GenusTwoCurve& cc, std::uint64_t p) {
    return curves::local_factor(cc, p);
  });
  std::vector<std::uint64_t> primes;
  for (auto p : rankin::prime_range(o.pmin, o.pmax))
    if (!curves::is_bad_prime(c, p)) primes.push_back(p);
  const auto factors = rankin::map_primes<curves::LocalFactor>(primes, v.threads, [&](std::uint64_t p) {
    return src(c, p);
  });
  if (o.json) {
    ordered_json j = envelope();
    j["curve"] = c.spec();
    j["pmin"] = o.pmin;
    j["pmax"] = o.pmax;
    ordered_json records = ordered_json::array();
    for (const auto& f : factors)
      records.push_back({{"p", f.p}, {"N1", f.n1}, {"N2", f.n2}, {"coefficients", f.c}});
    j["records"] = records;
    out << j.dump(2) << '\n';
  } else {
    out << "curve " << c.spec() << '\n';
    for (const auto& f : factors)
      out << "p=" << f.p << " N1=" << f.n1 << " N2=" << f.n2 << " L=" << f.polynomial().to_string() << '\n';
  }
  return kOk;
}

int cmd_chartable(const Options& o, std::ostream& out) {
  const auto [family, u] = family_parameter(require_curve(o));
  const groups::TwistingGroup tg(family, u);
  const auto ct = groups::character_table(tg);
  const auto& t = *ct.data;
  const auto check = groups::verify_table_data(t);
  const auto& G = tg.group();
  const auto decomposition = groups::decompose(G, tg.theta_character(), ct);
  if (!o.json) {
    out << t.caption << " " << t.gap_id << " order " << t.order << " (" << groups::to_string(tg.arithmetic()) << ")\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      out << t.character_labels[r];
      for (const auto& v : t.rows[r]) out << '\t' << v.render();
      out << '\n';
    }
    out << "theta =";
    for (std::size_t i = 0; i < decomposition.size(); ++i)
      if (decomposition[i] != 0) out << " " << to_string(decomposition[i]) << "*" << t.character_labels[i];
    out << "\northogonality " << (check.ok() ? "ok" : "FAILED") << '\n';
    return check.ok() ? kOk : kVerificationFailed;
  }
  ordered_json j = envelope();
  j["curve"] = require_curve(o).spec();
  j["gap_id"] = t.gap_id;
  j["caption"] = t.caption;
  j["order"] = t.order;
  j["case"] = groups::to_string(tg.arithmetic());
  j["field_K"] = tg.aut().field.describe();
  ordered_json classes = ordered_json::array();
  for (std::size_t c = 0; c < t.class_labels.size(); ++c) {
    const int k = ct.column_to_class[c];
    classes.push_back({{"label", t.class_labels[c]},
                       {"order", G.class_order(k)},
                       {"size", G.class_size(k)},
                       {"computed_class", k},
                       {"theta_trace", to_string(groups::trace(tg.theta(G.classes[k].front())))}});
  }
  j["classes"] = classes;
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    ordered_json vals = ordered_json::array();
    for (const auto& v : t.rows[r]) vals.push_back(cyclotomic_json(v));
    rows.push_back({{"label", t.character_labels[r]}, {"values", vals}});
  }
  j["characters"] = rows;
  j["admissible_matchings"] = ct.admissible_matchings;
  ordered_json dec;
  for (std::size_t i = 0; i < decomposition.size(); ++i)
    if (decomposition[i] != 0) dec[t.character_labels[i]] = to_string(decomposition[i]);
  j["theta_decomposition"] = dec;
  j["table_checks"] = {{"row_orthogonality", check.row_orthogonality},
                       {"column_orthogonality", check.column_orthogonality},
                       {"degree_sum", check.degree_sum},
                       {"class_sizes_sum", check.class_sizes_sum}};
  out << j.dump(2) << '\n';
  return check.ok() ? kOk : kVerificationFailed;
}

ordered_json matrix_json(const groups::Matrix4& m) {
  ordered_json a = ordered_json::array();
  for (const auto& row : m) {
    ordered_json r = ordered_json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    a.push_back(r);
  }
  return a;
}

int cmd_theta(const Options& o, std::ostream& out) {
  const auto [family, u] = family_parameter(require_curve(o));
  const groups::TwistingGroup tg(family, u);
  ordered_json j = envelope();
  j["curve"] = require_curve(o).spec();
  j["field_K"] = tg.aut().field.describe();
  j["group_order"] = tg.group().order();
  if (o.prime != 0) {
    const Integer d = parse_twist(o.twist);
    const auto th = galois::theta_at_frobenius(tg, d, o.prime);
    const auto e = tg.element(th.group_element);
    j["twist"] = d.get_str();
    j["p"] = o.prime;
    j["element"] = {{"aut", tg.aut().words[e.aut]}, {"sigma_mask", e.sigma.mask}};
    j["f"] = th.residue_degree_in_k;
    j["matrix"] = matrix_json(th.matrix);
    j["charpoly"] = polynomial_json(th.charpoly);
  } else {
    const auto chi = tg.theta_character();
    ordered_json classes = ordered_json::array();
    const auto& G = tg.group();
    for (int k = 0; k < G.class_count(); ++k)
      classes.push_back({{"order", G.class_order(k)}, {"size", G.class_size(k)}, {"trace", chi.values[k].render()}});
    j["classes"] = classes;
    const auto ct = groups::character_table(tg);
    const auto dec = groups::decompose(G, chi, ct);
    ordered_json d;
    for (std::size_t i = 0; i < dec.size(); ++i)
      if (dec[i] != 0) d[ct.data->character_labels[i]] = to_string(dec[i]);
    j["decomposition"] = d;
  }
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    out << j.dump(1) << '\n';
  }
  return kOk;
}

int cmd_frobenius(const Options& o, std::ostream& out) {
  if (o.field.empty() || o.prime == 0) throw InputError("--field and --prime are required");
  std::vector<Integer> gens;
  std::stringstream ss(o.field);
  for (std::string item; std::getline(ss, item, ',');) {
    const Rational m = parse_rational(item);
    if (m.get_den() != 1) throw InputError("field generators must be integers");
    gens.push_back(m.get_num());
  }
  if (!is_prime_u64(o.prime)) throw InputError("--prime must be prime");
  const galois::MultiquadraticField field(gens);
  ordered_json j = envelope();
  j["field"] = field.describe();
  j["p"] = o.prime;
  if (galois::is_ramified(field, o.prime)) {
    j["ramified"] = true;
  } else {
    const auto fc = galois::frobenius(field, o.prime);
    j["signs"] = fc.signs;
    j["f"] = galois::residue_degree(fc);
    j["ramified"] = false;
  }
  out << (o.json ? j.dump(2) : j.dump()) << '\n';
  return kOk;
}

int cmd_cm_scan(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw InputError("--family is required");
  const Family family = curves::parse_family(o.family);
  const auto values = cm::cm_scan(family);
  if (o.json) {
    ordered_json j = envelope();
    j["family"] = curves::to_string(family);
    ordered_json a = ordered_json::array();
    for (const auto& u : values) a.push_back(to_string(u));
    j["values"] = a;
    j["count"] = values.size();
    out << j.dump(2) << '\n';
  } else {
    for (const auto& u : values) out << to_string(u) << '\n';
  }
  return kOk;
}

rankin::Report tables_report() {
  rankin::Report r;
  r.check = "tables";
  const std::vector<std::pair<Family, Rational>> reps{{Family::D8, 3},  {Family::D8, 4},  {Family::D8, 2},
                                                      {Family::D12, 2}, {Family::D12, 4}, {Family::D12, 3}};
  for (const auto& [family, u] : reps) {
    const groups::TwistingGroup tg(family, u);
    const auto& t = groups::appendix_table(family, tg.arithmetic());
    const auto check = groups::verify_table_data(t);
    for (const auto& f : check.failures) r.failures.push_back({0, t.gap_id, f});
    try {
      const auto ct = groups::character_table(tg);
      r.notes.push_back(t.gap_id + " (" + curves::to_string(family) + ", u=" + to_string(u) +
                        "): orthogonality ok, classes matched, admissible column matchings " +
                        std::to_string(ct.admissible_matchings));
    } catch (const InternalError& e) {
      r.failures.push_back({0, t.gap_id, e.what()});
    }
  }
  const auto z = groups::resolve_gap16_7_entry();
  r.notes.push_back("GAP(16,7) order-8 entry resolved to " + z.chosen);
  r.params = {{"tables", "6"}};
  r.passed = r.failures.empty();
  return r;
}

rankin::Report cm_lists_report(ordered_json* detail) {
  rankin::Report r;
  r.check = "cm-lists";
  bool ok = true;
  for (Family family : {Family::D8, Family::D12}) {
    const auto cmp = cm::compare_with_published(family);
    ok = ok && cmp.acceptable;
    ordered_json d;
    auto list = [](const std::vector<Rational>& v) {
      ordered_json a = ordered_json::array();
      for (const auto& q : v) a.push_back(to_string(q));
      return a;
    };
    d["scan"] = list(cmp.scan);
    d["published"] = cmp.published;
    d["missing_from_scan"] = list(cmp.missing_from_scan);
    d["extra_in_scan"] = list(cmp.extra_in_scan);
    d["exact"] = cmp.exact;
    d["acceptable"] = cmp.acceptable;
    (*detail)[curves::to_string(family)] = d;
    for (const auto& n : cmp.notes) r.notes.push_back(curves::to_string(family) + ": " + n);
    if (!cmp.acceptable)
      r.failures.push_back({0, curves::to_string(family) + " scan", "disagrees with the published list"});
  }
  r.passed = ok;
  return r;
}

int cmd_verify(const Options& o, std::ostream& out) {
  rankin::Report report;
  ordered_json extra;
  if (o.check == "tables") {
    report = tables_report();
  } else if (o.check == "cm-lists") {
    report = cm_lists_report(&extra);
  } else {
    Session session(o);
    const auto v = session.verify_options();
    const Integer d = parse_twist(o.twist);
    const GenusTwoCurve c = require_curve(o);
    if (o.check == "gengen") {
      report = rankin::verify_gengen(c, d, v);
    } else if (o.check == "theorem2") {
      const auto [family, u] = family_parameter(c);
      report = rankin::verify_theorem2(family, u, d, v);
    } else if (o.check == "inclusion") {
      const auto [family, u] = family_parameter(c);
      if (o.partner.empty()) {
        report = rankin::inclusion_report(family, u, d, v);
      } else {
        const GenusTwoCurve partner = parse_curve_spec(o.partner);
        report = rankin::inclusion_report(family, u, d, v, &partner);
      }
    } else if (o.check == "signe") {
      const auto [family, u] = family_parameter(c);
      report = rankin::sign_check(family, u, d, v);
    } else if (o.check == "explore-alt") {
      const auto [family, u] = family_parameter(c);
      report = rankin::explore_alternate_pair(family, u, v);
    } else {
      throw InputError("unknown check '" + o.check + "'");
    }
  }
  if (o.json) {
    ordered_json j = report_json(report);
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    out << j.dump(2) << '\n';
  } else {
    print_report(report, false, out);
  }
  return report.passed ? kOk : kVerificationFailed;
}

int cmd_cache_info(const Options& o, std::ostream& out) {
  const std::string path = o.cache.empty() ? default_cache_path() : o.cache;
  if (path.empty()) throw InputError("no cache path: pass --cache or set TWISTLAB_CACHE");
  const auto st = inspect_cache(path);
  ordered_json j = envelope();
  j["path"] = path;
  j["version"] = kCacheVersion;
  j["lines"] = st.lines;
  j["records"] = st.records;
  j["rejected"] = st.rejected;
  j["stale"] = st.stale;
  out << (o.json ? j.dump(2) : j.dump()) << '\n';
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"twistlab: twisting representations of D8/D12 genus-2 curves"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* s) {
    s->add_flag("--json", o.json, "machine-readable output");
    s->add_option("--threads", o.threads, "worker threads");
    s->add_option("--cache", o.cache, "local-factor cache (default $TWISTLAB_CACHE)");
  };
  auto ranged = [&](CLI::App* s) {
    s->add_option("--curve", o.curve, "curve spec, e.g. d8:u=3");
    s->add_option("--pmin", o.pmin, "smallest prime");
    s->add_option("--pmax", o.pmax, "prime bound (<= 10^6)");
  };
  auto* lfactor = app.add_subcommand("lfactor", "local factors at good primes");
  common(lfactor);
  ranged(lfactor);
  auto* chartable = app.add_subcommand("chartable", "character table of G_C with theta decomposition");
  common(chartable);
  chartable->add_option("--curve", o.curve)->required();
  auto* theta = app.add_subcommand("theta", "theta_C character, or theta at Frobenius with --prime");
  common(theta);
  theta->add_option("--curve", o.curve)->required();
  theta->add_option("--twist", o.twist);
  theta->add_option("--prime", o.prime);
  auto* frob = app.add_subcommand("frobenius", "Frobenius in a multiquadratic field");
  common(frob);
  frob->add_option("--field", o.field, "m1,m2[,d]")->required();
  frob->add_option("--prime", o.prime)->required();
  auto* scan = app.add_subcommand("cm-scan", "rational u with a CM elliptic quotient");
  common(scan);
  scan->add_option("--family", o.family)->required();
  auto* verify = app.add_subcommand("verify", "run a verification check");
  common(verify);
  ranged(verify);
  verify->add_option("--check", o.check, "gengen|theorem2|inclusion|signe|cm-lists|tables|explore-alt")->required();
  verify->add_option("--twist", o.twist, "squarefree d");
  verify->add_option("--partner", o.partner, "curve spec used in place of the twist (inclusion)");
  auto* info = app.add_subcommand("cache-info", "summarize a cache file");
  common(info);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  try {
    if (*lfactor) return cmd_lfactor(o, out);
    if (*chartable) return cmd_chartable(o, out);
    if (*theta) return cmd_theta(o, out);
    if (*frob) return cmd_frobenius(o, out);
    if (*scan) return cmd_cm_scan(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*info) return cmd_cache_info(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InternalError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInputError;
}

}  // namespace twistlab::cli
