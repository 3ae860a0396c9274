#include <algorithm>
#include <chrono>
#include <set>
#include <string>

#include "verdict.hpp"

namespace bmoll {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

CellVerdict vacuous_verdict(CheckId id, long m, std::string note) {
  CellVerdict v = detail::from_slack(id, m, std::nullopt, 0, true);
  v.vacuous = true;
  v.note = std::move(note);
  return v;
}

}  // namespace

ScanReport run_verify(const ScanConfig& config, RowCache& cache) {
  const auto start = Clock::now();
  const std::vector<CheckId>& ids = config.checks.empty() ? verify_suite_checks() : config.checks;
  const std::set<CheckId> want(ids.begin(), ids.end());
  auto on = [&](CheckId id) { return want.count(id) != 0; };
  auto on_any = [&](std::initializer_list<CheckId> l) { return std::any_of(l.begin(), l.end(), on); };
  const VerifyOptions& opt = config.options;

  ScanReport report;
  report.config = {{"command", "verify"},
                   {"m_min", std::to_string(config.m_min)},
                   {"m_max", std::to_string(config.m_max)},
                   {"float_digits", std::to_string(opt.float_digits)}};
  std::string names;
  for (CheckId id : ids) names += (names.empty() ? "" : ",") + std::string(check_name(id));
  report.config.emplace_back("checks", names);

  auto keep = [&](std::vector<CellVerdict> vs) {
    for (auto& v : vs)
      if (on(v.check)) report.add(std::move(v));
  };

  for (long m = std::max(2L, config.m_min); m <= config.m_max; ++m) {
    if (on_any({CheckId::Rulc, CheckId::Lower, CheckId::Ilc, CheckId::Sandwich}))
      keep(verify_row_inequalities(m, cache, opt));
    if (on_any({CheckId::T, CheckId::TEdge, CheckId::Q})) keep(verify_ratio_bounds(m, cache, opt));
    if (on(CheckId::Ulog)) keep(verify_ulog(m, cache, opt));
    if (on_any({CheckId::QuadRulc, CheckId::QuadLower})) keep(verify_quadratic_forms(m, cache, opt));
    if (on(CheckId::TF)) keep(verify_lemma_TF(m, opt));
    if (on_any({CheckId::Delta, CheckId::SmallDelta, CheckId::XY, CheckId::GH, CheckId::FDen, CheckId::R,
                CheckId::X2T, CheckId::X2Q}))
      for (long i = 1; i <= m - 1; ++i) keep(verify_proof_identities(m, i, opt));
    if (on(CheckId::UV)) keep({verify_step_inequality(m, opt)});
    if (on_any({CheckId::CrossPath, CheckId::Rec22, CheckId::Rec23})) keep(verify_recurrences(m, cache));
    if (on(CheckId::Classify)) keep({verify_row_class(m, cache)});
    if (on(CheckId::Monotone)) {
      ScanReport mono = monotonicity_report(m, cache, opt);
      mono.config.clear();
      mono.wall_ms = 0;
      report.merge(std::move(mono));
    }
  }
  report.sort();
  report.wall_ms = elapsed_ms(start);
  return report;
}

ScanReport scan_conjectures(long m_min, long m_max, RowCache& cache, long n_offset, const VerifyOptions& opt) {
  const auto start = Clock::now();
  ScanReport report;
  report.config = {{"command", "scan"},
                   {"m_min", std::to_string(m_min)},
                   {"m_max", std::to_string(m_max)},
                   {"n_convention", "n = m - " + std::to_string(n_offset)},
                   {"float_digits", std::to_string(opt.float_digits)}};

  for (long m = std::max(2L, m_min); m <= m_max; ++m) {
    // e_i for 2 <= i <= m-2, stored at k = i - 2.
    const long len = m - 3;
    const long n = m - n_offset;
    if (len < 3) {
      const std::string note = "vacuous: fewer than three terms for m=" + std::to_string(m);
      report.add(vacuous_verdict(CheckId::ConjLc, m, note));
      report.add(vacuous_verdict(CheckId::ConjRulc, m, note));
      continue;
    }
    const CoeffRow& r = cache.row(m);
    std::vector<Rational> e;
    for (long i = 2; i <= m - 2; ++i) e.emplace_back(r[i + 1] * r[i - 1] / (r[i] * r[i]));
    if (n != len - 1)
      throw UsageError("scan_conjectures: n = m - " + std::to_string(n_offset) + " does not match sequence length " +
                       std::to_string(len));
    const SequenceMargins mg = sequence_margins(e, n);
    for (long k = 1; k <= n - 1; ++k) {
      const long i = k + 2;
      const auto idx = static_cast<std::size_t>(k - 1);
      const auto& cur = e[static_cast<std::size_t>(k)];
      const auto& prev = e[static_cast<std::size_t>(k - 1)];
      const auto& next = e[static_cast<std::size_t>(k + 1)];

      CellVerdict lc = detail::from_slack(CheckId::ConjLc, m, i, sgn(mg.lc[idx]), false);
      lc.pass = mg.lc[idx] >= 0;
      lc.lhs_exact = exact_string(Rational(cur * cur));
      lc.rhs_exact = exact_string(Rational(prev * next));
      lc.lhs_display = to_decimal(Rational(cur * cur), opt.float_digits);
      lc.rhs_display = to_decimal(Rational(prev * next), opt.float_digits);
      report.add(std::move(lc));

      const Rational left = k * (n - k) * cur * cur;
      const Rational right = (n - k + 1) * (k + 1) * prev * next;
      CellVerdict ru = detail::from_slack(CheckId::ConjRulc, m, i, -sgn(mg.ulc[idx]), false);
      ru.pass = mg.ulc[idx] <= 0;
      ru.lhs_exact = exact_string(left);
      ru.rhs_exact = exact_string(right);
      ru.lhs_display = to_decimal(left, opt.float_digits);
      ru.rhs_display = to_decimal(right, opt.float_digits);
      ru.note = "n=" + std::to_string(n);
      report.add(std::move(ru));
    }
  }
  report.sort();
  report.wall_ms = elapsed_ms(start);
  return report;
}

ScanReport verify_bessel(long n_max, const VerifyOptions& opt) {
  if (n_max < 2) throw UsageError("verify_bessel: need n_max >= 2");
  const auto start = Clock::now();
  ScanReport report;
  report.config = {{"command", "bessel"}, {"n_max", std::to_string(n_max)},
                   {"float_digits", std::to_string(opt.float_digits)}};
  for (long n = 2; n <= n_max; ++n) {
    const SequenceClass cls = classify_sequence(bessel_row(n), n);
    const bool ok = cls.log_concave && cls.reverse_ultra_lc;
    CellVerdict v = detail::from_slack(CheckId::Bessel, n, std::nullopt, ok ? 1 : -1, false);
    v.lhs_exact = std::string("log_concave=") + (cls.log_concave ? "true" : "false") +
                  " reverse_ultra_lc=" + (cls.reverse_ultra_lc ? "true" : "false");
    v.rhs_exact = "log_concave=true reverse_ultra_lc=true";
    report.add(std::move(v));
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

ScanReport monotonicity_report(long m, RowCache& cache, const VerifyOptions& opt) {
  if (m < 2) throw UsageError("monotonicity_report: need m >= 2");
  const auto start = Clock::now();
  ScanReport report;
  report.config = {{"command", "monotone"}, {"m", std::to_string(m)}};
  if (m == 2) {
    report.add(vacuous_verdict(CheckId::Monotone, m, "vacuous: single value c_1/u_1"));
    report.wall_ms = elapsed_ms(start);
    return report;
  }
  Rational prev = ratio_c(m, 1, cache) / u_ref(m, 1);
  for (long i = 2; i <= m - 1; ++i) {
    const Rational cur = ratio_c(m, i, cache) / u_ref(m, i);
    report.add(detail::compare(CheckId::Monotone, m, i, cur, detail::Rel::Greater, prev, opt.float_digits));
    prev = cur;
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

}  // namespace bmoll
