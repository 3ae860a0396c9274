#include "bmoll/cli.hpp"

#include <chrono>
#include <exception>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

namespace bmoll {

namespace {

std::vector<CheckId> parse_check_list(const std::string& text) {
  std::vector<CheckId> out;
  std::stringstream ss(text);
  for (std::string name; std::getline(ss, name, ',');) {
    if (name.empty()) continue;
    auto id = parse_check(name);
    if (!id) throw UsageError("unknown check '" + name + "'");
    out.push_back(*id);
  }
  if (out.empty()) throw UsageError("empty --checks list");
  return out;
}

const std::map<std::string, Format> kFormats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

struct Flags {
  std::string format = "text";
  std::string checks;
  int digits = 6;
  std::string cache;
  std::string write_cache;
  bool no_timing = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--float-digits", f.digits, "Decimal places in rendered values");
  sub->add_option("--cache", f.cache, "Load coefficient rows from a row-cache file");
  sub->add_option("--write-cache", f.write_cache, "Write computed rows to a row-cache file");
  sub->add_flag("--no-timing", f.no_timing, "Omit the wall-time footer");
}

}  // namespace

ParseOutcome parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Boros-Moll coefficient inequalities", "bmoll"};
  app.require_subcommand(1);

  CliConfig cfg;
  Flags f;
  long row_m = 2, table_m = 8;
  long verify_min = 2, verify_max = 100;
  long scan_min = 6, scan_max = 150;
  long integral_max = 5;

  auto* row = app.add_subcommand("row", "Print d_0(m)..d_m(m)");
  row->add_option("--m", row_m, "Row index")->required();
  row->add_flag("--closed-form", cfg.closed_form, "Use the closed-form sum instead of the first-order recurrence");

  auto* verify = app.add_subcommand("verify", "Run the exact inequality and identity suite");
  verify->add_option("--m-min", verify_min, "Smallest m (at least 2)");
  verify->add_option("--m-max", verify_max, "Largest m");
  verify->add_option("--checks", f.checks, "Comma-separated check names");

  auto* scan = app.add_subcommand("scan", "Scan the two conjectures on d_{i+1}d_{i-1}/d_i^2");
  scan->add_option("--m-min", scan_min, "Smallest m");
  scan->add_option("--m-max", scan_max, "Largest m");
  scan->add_option("--conj-n-offset", cfg.n_offset, "Binomial parameter n = m - offset for the reverse ultra check");

  auto* table = app.add_subcommand("table", "Print c_i(m)/u_i(m) for 1 <= i <= m-1");
  table->add_option("--m", table_m, "Row index");

  auto* bessel = app.add_subcommand("bessel", "Classify Bessel polynomial coefficient rows");
  bessel->add_option("--n-max", cfg.n_max, "Largest n");

  auto* integral = app.add_subcommand("integral", "Quartic integral quadrature oracle");
  integral->add_option("--m-max", integral_max, "Largest m");
  integral->add_option("--a", cfg.a_values, "Parameter values a > -1")->delimiter(',');
  integral->add_option("--tolerance", cfg.tolerance, "Relative residual tolerance");
  integral->add_flag("--strict-integral", cfg.strict_integral, "Treat inconclusive quadrature as failure");

  for (auto* sub : {row, verify, scan, table, bessel, integral}) add_common(sub, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return {std::nullopt, kExitPass};
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return {std::nullopt, kExitUsage};
  }

  try {
    cfg.format = kFormats.at(f.format);
    cfg.float_digits = f.digits;
    cfg.timing = !f.no_timing;
    if (!f.cache.empty()) cfg.cache_path = f.cache;
    if (!f.write_cache.empty()) cfg.write_cache_path = f.write_cache;
    if (row->parsed()) {
      cfg.command = Command::Row;
      cfg.m = row_m;
    } else if (verify->parsed()) {
      cfg.command = Command::Verify;
      cfg.m_min = verify_min;
      cfg.m_max = verify_max;
      if (!f.checks.empty()) cfg.checks = parse_check_list(f.checks);
    } else if (scan->parsed()) {
      cfg.command = Command::Scan;
      cfg.m_min = scan_min;
      cfg.m_max = scan_max;
    } else if (table->parsed()) {
      cfg.command = Command::Table;
      cfg.m = table_m;
    } else if (bessel->parsed()) {
      cfg.command = Command::Bessel;
    } else {
      cfg.command = Command::Integral;
      cfg.m_min = 0;
      cfg.m_max = integral_max;
    }
    validate(cfg);
  } catch (const UsageError& e) {
    err << "bmoll: " << e.what() << '\n';
    return {std::nullopt, kExitUsage};
  }
  return {cfg, kExitPass};
}

void validate(const CliConfig& c) {
  if (c.float_digits < 1) throw UsageError("--float-digits must be at least 1");
  switch (c.command) {
    case Command::Row:
      if (c.m < 0) throw UsageError("--m must be nonnegative");
      break;
    case Command::Table:
      if (c.m < 2) throw UsageError("--m must be at least 2");
      break;
    case Command::Verify:
      if (c.m_min < 2) throw UsageError("--m-min must be at least 2");
      [[fallthrough]];
    case Command::Scan:
    case Command::Integral:
      if (c.m_min < 0 || c.m_max < c.m_min) throw UsageError("empty m range");
      break;
    case Command::Bessel:
      if (c.n_max < 2) throw UsageError("--n-max must be at least 2");
      break;
  }
  if (c.command == Command::Scan && c.n_offset != 4 && c.n_offset < 0)
    throw UsageError("--conj-n-offset must be nonnegative");
  if (c.command == Command::Integral) {
    for (double a : c.a_values)
      if (!(a > -1.0)) throw UsageError("--a values must exceed -1");
    if (!(c.tolerance > 0)) throw UsageError("--tolerance must be positive");
  }
}

namespace {

int exit_for(const ScanReport& r) { return r.all_pass() ? kExitPass : kExitFail; }

int run_integral(const CliConfig& c, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<IntegralCase> cases;
  bool failed = false;
  for (long m = c.m_min; m <= c.m_max; ++m)
    for (double a : c.a_values) {
      IntegralCase ic{m, a, integral_residual(m, a), false};
      ic.pass = ic.result.converged && ic.result.relative_residual <= c.tolerance;
      if (ic.result.converged ? !ic.pass : c.strict_integral) failed = true;
      cases.push_back(ic);
    }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  write_integral(out, cases, c.tolerance, c.format, c.timing, ms);
  return failed ? kExitFail : kExitPass;
}

}  // namespace

int run(const CliConfig& c, std::ostream& out, std::ostream& err) {
  validate(c);
  RowCache cache;
  if (c.cache_path) {
    try {
      cache.load(*c.cache_path);
    } catch (const CacheFormatError& e) {
      err << "bmoll: " << c.cache_path->string() << ": " << e.what() << '\n';
      return kExitUsage;
    }
  }

  int code = kExitPass;
  switch (c.command) {
    case Command::Row:
      write_row(out, c.closed_form ? closed_form_row(c.m) : cache.row(c.m), c.format, c.float_digits);
      break;
    case Command::Table:
      write_table(out, c.m, ratio_table(c.m, cache), c.format, c.float_digits);
      break;
    case Command::Verify: {
      ScanConfig sc;
      sc.m_min = c.m_min;
      sc.m_max = c.m_max;
      sc.checks = c.checks;
      sc.options.float_digits = c.float_digits;
      const ScanReport r = run_verify(sc, cache);
      write_report(out, r, c.format, c.timing);
      code = exit_for(r);
      break;
    }
    case Command::Scan: {
      const ScanReport r = scan_conjectures(c.m_min, c.m_max, cache, c.n_offset, {c.float_digits});
      write_report(out, r, c.format, c.timing);
      code = exit_for(r);
      break;
    }
    case Command::Bessel: {
      const ScanReport r = verify_bessel(c.n_max, {c.float_digits});
      write_report(out, r, c.format, c.timing);
      code = exit_for(r);
      break;
    }
    case Command::Integral:
      code = run_integral(c, out);
      break;
  }
  if (c.write_cache_path) cache.save(*c.write_cache_path);
  return code;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ParseOutcome parsed = parse_args(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  try {
    return run(*parsed.config, out, err);
  } catch (const UsageError& e) {
    err << "bmoll: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "bmoll: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace bmoll
