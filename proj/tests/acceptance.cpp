// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <string>

#include "twistlab/cm.hpp"
#include "twistlab/galois.hpp"
#include "twistlab/groups.hpp"
#include "twistlab/rankin.hpp"

using namespace twistlab;
using curves::Family;
using groups::operator*;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<std::pair<Family, long>> kCases{{Family::D8, 3},  {Family::D8, 4},  {Family::D8, 2},
                                                  {Family::D12, 2}, {Family::D12, 4}, {Family::D12, 3}};

std::string name(Family f, long u) { return curves::to_string(f) + ",u=" + std::to_string(u); }

// every factor used by criteria 5-7 passes through here, for criterion 8
std::mutex g_seen_lock;
std::vector<std::pair<curves::GenusTwoCurve, curves::LocalFactor>> g_seen;

curves::LocalFactor recording_source(const curves::GenusTwoCurve& c, std::uint64_t p) {
  auto lf = curves::local_factor(c, p);
  std::lock_guard<std::mutex> hold(g_seen_lock);
  g_seen.emplace_back(c, lf);
  return lf;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& [family, u] : kCases) {
    const groups::TwistingGroup tg(family, u);
    const auto& t = groups::appendix_table(family, tg.arithmetic());
    const auto check = groups::verify_table_data(t);
    if (!check.ok()) o.fail(t.gap_id + ": " + (check.failures.empty() ? "check failed" : check.failures[0]));
    std::vector<int> computed, tabulated = t.class_sizes;
    for (int k = 0; k < tg.group().class_count(); ++k) computed.push_back(tg.group().class_size(k));
    std::sort(computed.begin(), computed.end());
    std::sort(tabulated.begin(), tabulated.end());
    if (computed != tabulated || t.order != tg.group().order()) o.fail(t.gap_id + ": class sizes differ from G_C");
    try {
      groups::character_table(tg);
    } catch (const InternalError& e) {
      o.fail(e.what());
    }
  }
  const double s = seconds_since(t0);
  if (s >= 5.0) o.fail("runtime " + std::to_string(s) + " s");
  if (o.ok) o.detail = "6 tables, " + std::to_string(s).substr(0, 5) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const std::vector<std::vector<int>> expected{{11}, {9, 10}, {6, 7}, {15}, {}, {8, 9}};
  std::string pair;
  for (std::size_t c = 0; c < kCases.size(); ++c) {
    const auto [family, u] = kCases[c];
    const groups::TwistingGroup tg(family, u);
    const auto m = groups::decompose(tg.group(), tg.theta_character(), groups::character_table(tg));
    std::vector<int> idx;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0 && m[i] != 1) o.fail(name(family, u) + ": multiplicity " + to_string(m[i]));
      if (m[i] != 0) idx.push_back(static_cast<int>(i) + 1);
    }
    if (family == Family::D12 && u == 4) {
      if (idx.size() != 2 || idx[0] < 10 || idx[1] > 12) o.fail("d12,u=4: not a pair in {10,11,12}");
      if (idx.size() == 2) pair = "chi_" + std::to_string(idx[0]) + "+chi_" + std::to_string(idx[1]);
    } else if (idx != expected[c]) {
      o.fail(name(family, u) + ": unexpected decomposition");
    }
  }
  if (o.ok) o.detail = "all six cases; d12 u-square case gives " + pair +
                        " (any pair from chi_10..chi_12, depending on the column matching)";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& [family, u] : kCases) {
    const groups::TwistingGroup tg(family, u);
    const auto& G = tg.group();
    const std::string tag = name(family, u);
    for (int a = 0; a < G.order(); ++a)
      for (int b = 0; b < G.order(); ++b)
        if (!(tg.theta(G.mul(a, b)) == tg.theta(a) * tg.theta(b))) o.fail(tag + ": not a homomorphism");
    for (int a = 1; a < G.order(); ++a)
      if (tg.theta(a) == groups::identity4()) o.fail(tag + ": not faithful");
    const auto theta = tg.theta_character();
    const auto res = groups::restrict_character(tg, theta);
    const auto rho = groups::scale(res, make_rational(1, 2));
    if (groups::inner_product(tg.subgroup(), rho, rho) != 1 || !(rho.values[0] == CyclotomicValue(2)))
      o.fail(tag + ": Res theta is not twice a 2-dimensional irreducible");
    const Rational deg(tg.galois_degree());
    if (!(groups::induce_character(tg, rho) == groups::scale(theta, deg / 2))) o.fail(tag + ": Ind rho");
    if (!(groups::induce_character(tg, res) == groups::scale(theta, deg))) o.fail(tag + ": Ind Res theta");
    if (groups::trace(tg.theta(tg.embed(tg.aut().w))) != -4) o.fail(tag + ": Tr theta(w) != -4");
    for (int a = 0; a < G.order(); ++a)
      if (!tg.element(a).sigma.is_identity() && groups::trace(tg.theta(a)) != 0) o.fail(tag + ": trace off H_C");
  }
  if (o.ok) o.detail = "homomorphism, faithfulness, Res, Ind, Ind Res, Tr w, Tr off H_C in six cases";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::string flagged, counts;
  for (Family f : {Family::D8, Family::D12}) {
    const auto cmp = cm::compare_with_published(f);
    counts += curves::to_string(f) + " " +
              std::to_string(cmp.published.size() - cmp.missing_from_scan.size()) + "/" +
              std::to_string(cmp.published.size()) + " found, ";
    if (!cmp.acceptable) o.fail(curves::to_string(f) + ": scan disagrees beyond the flagged entry");
    if (f == Family::D8 && !cmp.exact) {
      flagged = "published 6480/25920 (= 1/4, a pole) not found;";
      for (const auto& q : cmp.extra_in_scan) flagged += " scan has " + to_string(q) + " instead";
    }
    if (f == Family::D12 && !cmp.exact) o.fail("d12 list not reproduced exactly");
  }
  const double s = seconds_since(t0);
  if (s >= 60.0) o.fail("runtime " + std::to_string(s) + " s");
  if (o.ok) o.detail = counts + flagged;
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = curves::custom_curve({1, -1, 0, 0, 0, 1});
  rankin::VerifyOptions opt;
  opt.pmax = 500;
  opt.factors = recording_source;
  std::size_t primes = 0;
  for (long d : {-1, 2, 5}) {
    const auto r = rankin::verify_gengen(c, d, opt);
    primes += r.primes_tested.size();
    if (!r.passed) o.fail("d=" + std::to_string(d) + " fails at p=" + std::to_string(r.failures.at(0).p));
  }
  const double s = seconds_since(t0);
  if (s >= 120.0) o.fail("runtime " + std::to_string(s) + " s");
  if (o.ok) o.detail = std::to_string(primes) + " (d, p) pairs, " + std::to_string(s).substr(0, 5) + " s";
  return o;
}

Outcome criterion6() {
  Outcome o;
  rankin::VerifyOptions opt;
  opt.pmax = 200;
  opt.factors = recording_source;
  std::size_t primes = 0;
  for (auto [family, u] : {std::pair{Family::D8, 3L}, std::pair{Family::D12, 2L}})
    for (long d : {5, -1, 7}) {
      const auto r = rankin::verify_theorem2(family, u, d, opt);
      primes += r.primes_tested.size();
      if (!r.passed) o.fail(name(family, u) + ",d=" + std::to_string(d) + " fails");
    }
  if (o.ok) o.detail = std::to_string(primes) + " (pair, p) checks, exact";
  return o;
}

Outcome criterion7() {
  Outcome o;
  rankin::VerifyOptions opt;
  opt.pmax = 200;
  opt.factors = recording_source;
  for (auto [family, u] : {std::pair{Family::D8, 3L}, std::pair{Family::D12, 2L}})
    for (long d : {5, -1, 7})
      if (!rankin::inclusion_report(family, u, d, opt).passed) o.fail(name(family, u) + ",d=" + std::to_string(d));
  opt.pmax = 100;
  const auto fake = curves::d8_curve(5);
  const auto neg = rankin::inclusion_report(Family::D8, 3, 1, opt, &fake);
  if (neg.passed) o.fail("negative control C_3 / C_5 never fails");
  if (o.ok) o.detail = "6 pairs hold; negative control fails first at p=" + std::to_string(neg.failures.at(0).p);
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& [c, lf] : g_seen) {
    ++n;
    const auto p = static_cast<std::int64_t>(lf.p);
    if (lf.c[3] != p * lf.c[1] || lf.c[4] != p * p) o.fail("functional equation at p=" + std::to_string(p));
    if (std::abs(static_cast<double>(lf.c[1])) > 4.0 * std::sqrt(static_cast<double>(p))) o.fail("Weil bound");
    if (!lf.validate().empty()) o.fail(lf.validate());
    if (lf.n1 != curves::count_points(c, lf.p, 1) || lf.n2 != curves::count_points(c, lf.p, 2))
      o.fail("round trip at " + c.spec() + " p=" + std::to_string(p));
  }
  // exhaustive oracle for Y^2 = X^5 + X^3 + X over F_7
  const auto alt = curves::alt_model(Family::D8, 1);
  std::uint64_t brute = 1;
  for (long x = 0; x < 7; ++x) {
    const long v = (x * x * x * x * x + x * x * x + x) % 7;
    for (long y = 0; y < 7; ++y) brute += (y * y) % 7 == v ? 1 : 0;
  }
  if (brute != 8 || curves::count_points(alt, 7, 1) != 8 || curves::local_factor(alt, 7).n1 != 8)
    o.fail("d8-alt u=1 at p=7: N1 != 8");
  if (n == 0) o.fail("no factors recorded");
  if (o.ok) o.detail = std::to_string(n) + " factors; N1(d8alt u=1, p=7) = 8";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const galois::MultiquadraticField k({3, 2});
  std::map<std::vector<int>, int> freq;
  int total = 0;
  for (auto p : primes_up_to(10000)) {
    if (galois::is_ramified(k, p)) continue;
    ++freq[galois::frobenius(k, p).signs];
    ++total;
  }
  std::string d;
  for (const auto& [signs, count] : freq) {
    const double f = static_cast<double>(count) / total;
    if (std::fabs(f - 0.25) > 0.05) o.fail("frequency " + std::to_string(f));
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%+d,%+d): %.4f ", signs[0], signs[1], f);
    d += buf;
  }
  if (freq.size() != 4) o.fail("not all four sign vectors occur");
  if (o.ok) o.detail = d;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 character tables", criterion1},          {"2 theta decompositions", criterion2},
      {"3 structural identities", criterion3},     {"4 CM lists", criterion4},
      {"5 quadratic twist factors", criterion5},   {"6 twisted Rankin identity", criterion6},
      {"7 inclusion and negative control", criterion7}, {"8 local-factor invariants", criterion8},
      {"9 Chebotarev frequencies", criterion9}};
  int failed = 0;
  for (const auto& [label, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %s: %s\n", o.ok ? "PASS" : "FAIL", label.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
