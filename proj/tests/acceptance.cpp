// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bmoll/cli.hpp"
#include "bmoll/report.hpp"
#include "bmoll/verify.hpp"

using namespace bmoll;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string tally_summary(const ScanReport& r) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [id, t] : r.tallies) {
    s << (first ? "" : ", ") << check_name(id) << " " << t.passed << "/" << t.cells;
    if (t.vacuous) s << " (" << t.vacuous << " vacuous)";
    first = false;
  }
  s << ", failures " << r.failures.size();
  return s.str();
}

bool counts_consistent(const ScanReport& r) {
  long failed = 0;
  for (const auto& [id, t] : r.tallies) failed += t.cells - t.passed;
  return failed == static_cast<long>(r.failures.size());
}

Outcome scan(RowCache& cache, long m_min, long m_max, std::vector<CheckId> checks) {
  ScanConfig cfg;
  cfg.m_min = m_min;
  cfg.m_max = m_max;
  cfg.checks = std::move(checks);
  const ScanReport r = run_verify(cfg, cache);
  bool nonempty = r.tallies.size() == cfg.checks.size();
  for (const auto& [id, t] : r.tallies) nonempty = nonempty && t.cells > 0;
  return {r.all_pass() && nonempty && counts_consistent(r), tally_summary(r)};
}

Outcome criterion_1(RowCache& cache) {
  const Rational ratio = ratio_successive(2, 1, cache);
  const QuadSurd t = bound_T(2, 1);
  const bool ok = ratio == make_rational(43, 15) &&
                  t == QuadSurd::normalize(make_rational(31, 12), make_rational(1, 12), 13) &&
                  cmp(QuadSurd(ratio), t) == std::strong_ordering::less;
  return {ok, "d_1(3)/d_1(2) = " + exact_string(ratio) + " < T(2,1) = " + t.to_string()};
}

Outcome criterion_2(RowCache& cache) {
  const long expected[] = {956593, 969751, 978293, 983956, 987811, 990507, 992445};
  const auto rows = ratio_table(8, cache);
  bool ok = rows.size() == 7;
  int exact = 0;
  std::string shown;
  for (std::size_t k = 0; ok && k < rows.size(); ++k) {
    const std::string dec = to_decimal(rows[k].ratio, 6);
    const long got = std::stol(dec.substr(2));
    ok = ok && dec.rfind("0.", 0) == 0 && std::labs(got - expected[k]) <= 1;
    exact += got == expected[k];
    shown += (k ? " " : "") + dec;
  }
  return {ok, shown + " (" + std::to_string(exact) + "/7 exact, rest within 1 ulp)"};
}

Outcome criterion_5() {
  long cells = 0, passed = 0;
  for (long m = 2; m <= 100; ++m)
    for (const auto& v : verify_lemma_TF(m)) {
      ++cells;
      passed += v.pass;
    }
  return {cells == passed && cells == 4950, "tf " + std::to_string(passed) + "/" + std::to_string(cells)};
}

Outcome criterion_6(RowCache& cache) {
  long cells = 0, passed = 0;
  for (long m = 0; m <= 60; ++m)
    for (const auto& v : verify_recurrences(m, cache)) {
      ++cells;
      passed += v.pass;
    }
  return {cells == passed && cells > 0,
          "crosspath/rec22/rec23 " + std::to_string(passed) + "/" + std::to_string(cells) + " over 0 <= m <= 60"};
}

Outcome criterion_7(RowCache& cache) {
  return scan(cache, 2, 50,
              {CheckId::Delta, CheckId::SmallDelta, CheckId::XY, CheckId::GH, CheckId::FDen, CheckId::R, CheckId::UV,
               CheckId::X2T, CheckId::X2Q});
}

Outcome criterion_9(RowCache& cache) {
  const ScanReport r = scan_conjectures(6, 150, cache);
  bool vacuous = false;
  for (const auto& [id, t] : r.tallies) vacuous = vacuous || t.vacuous > 0;
  return {r.all_pass() && r.tallies.size() == 2 && !vacuous, tally_summary(r)};
}

Outcome criterion_10() {
  const ScanReport r = verify_bessel(50);
  return {r.all_pass() && r.tallies.at(CheckId::Bessel).cells == 49, tally_summary(r)};
}

Outcome criterion_11() {
  double worst = 0;
  bool ok = true;
  for (long m = 0; m <= 5; ++m)
    for (double a : {0.0, 0.5, 1.0, 2.0}) {
      const IntegralResult r = integral_residual(m, a);
      ok = ok && r.converged && r.relative_residual <= 1e-8;
      worst = std::max(worst, r.relative_residual);
    }
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst relative residual %.3e", worst);
  return {ok, buf};
}

Outcome criterion_12() {
  auto once = [] {
    const char* argv[] = {"bmoll", "verify", "--m-max", "50", "--format", "json"};
    std::ostringstream out, err;
    const int code = cli_main(6, argv, out, err);
    const std::string text = out.str();
    const bool parses = nlohmann::ordered_json::accept(text);
    return std::make_pair(parses ? code : -1, text.substr(0, text.find("\"footer\"")));
  };
  const auto a = once(), b = once();
  return {a.first == kExitPass && a == b,
          "report bodies " + std::string(a.second == b.second ? "identical" : "differ") + " (" +
              std::to_string(a.second.size()) + " bytes)"};
}

}  // namespace

int main() {
  RowCache cache;
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "golden base case 43/15 < T(2,1)", [&] { return criterion_1(cache); }},
      {2, "m = 8 table of c_i/u_i", [&] { return criterion_2(cache); }},
      {3, "reverse ULC and lower bound, 2 <= m <= 300",
       [&] { return scan(cache, 2, 300, {CheckId::Rulc, CheckId::Lower}); }},
      {4, "Q < ratio < T with edge equalities, 2 <= m <= 200",
       [&] { return scan(cache, 2, 200, {CheckId::T, CheckId::TEdge, CheckId::Q}); }},
      {5, "T < F lemma, 2 <= m <= 100", [] { return criterion_5(); }},
      {6, "closed form vs recurrences, m <= 60", [&] { return criterion_6(cache); }},
      {7, "proof identity grid, 2 <= m <= 50", [&] { return criterion_7(cache); }},
      {8, "i! d_i log-concavity and sandwich, 2 <= m <= 300",
       [&] { return scan(cache, 2, 300, {CheckId::Ilc, CheckId::Sandwich}); }},
      {9, "conjecture scan, 6 <= m <= 150, n = m - 4", [&] { return criterion_9(cache); }},
      {10, "Bessel rows, 2 <= n <= 50", [] { return criterion_10(); }},
      {11, "integral oracle, m <= 5, a in {0, 0.5, 1, 2}", [] { return criterion_11(); }},
      {12, "deterministic verify --m-max 50 JSON", [] { return criterion_12(); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << " -- " << o.detail << " [" << timing
              << "]\n";
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (criteria.size() - failed) << "/" << criteria.size() << '\n';
  return failed ? 1 : 0;
}
