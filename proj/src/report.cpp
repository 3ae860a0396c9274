#include "bmoll/report.hpp"

#include <cstdio>
#include <iomanip>
#include <string>

namespace bmoll {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

ojson side_json(const std::string& exact, const std::string& decimal) {
  ojson j = ojson::object();
  j["exact"] = exact;
  const std::size_t slash = exact.find('/');
  const std::string num = exact.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : exact.substr(slash + 1);
  auto is_int = [](const std::string& t, bool allow_sign) {
    const std::size_t start = allow_sign && !t.empty() && t[0] == '-' ? 1 : 0;
    return t.size() > start && t.find_first_not_of("0123456789", start) == std::string::npos;
  };
  if (is_int(num, true) && is_int(den, false)) {
    j["numerator"] = num;
    j["denominator"] = den;
  }
  j["decimal"] = decimal;
  return j;
}

}  // namespace

ojson rational_json(const Rational& x, int digits) {
  ojson j = ojson::object();
  j["numerator"] = x.get_num().get_str();
  j["denominator"] = x.get_den().get_str();
  j["decimal"] = to_decimal(x, digits);
  return j;
}

ojson verdict_json(const CellVerdict& v) {
  ojson j = ojson::object();
  j["check"] = std::string(check_name(v.check));
  j["m"] = v.m;
  j["i"] = v.i ? ojson(*v.i) : ojson(nullptr);
  j["pass"] = v.pass;
  j["strict"] = v.strict;
  j["margin_sign"] = v.margin_sign;
  j["vacuous"] = v.vacuous;
  j["lhs"] = side_json(v.lhs_exact, v.lhs_display);
  j["rhs"] = side_json(v.rhs_exact, v.rhs_display);
  j["note"] = v.note;
  return j;
}

ojson report_json(const ScanReport& r) {
  ojson j = ojson::object();
  ojson cfg = ojson::object();
  for (const auto& [k, v] : r.config) cfg[k] = v;
  j["config"] = cfg;
  ojson checks = ojson::array();
  for (const auto& [id, t] : r.tallies) {
    ojson c = ojson::object();
    c["check"] = std::string(check_name(id));
    c["cells"] = t.cells;
    c["passed"] = t.passed;
    c["strict"] = t.strict;
    c["vacuous"] = t.vacuous;
    c["failed"] = is_observational(id) ? 0 : t.cells - t.passed;
    c["findings"] = is_observational(id) ? t.cells - t.passed : 0;
    checks.push_back(c);
  }
  j["checks"] = checks;
  ojson fails = ojson::array();
  for (const auto& v : r.failures) fails.push_back(verdict_json(v));
  j["failures"] = fails;
  ojson finds = ojson::array();
  for (const auto& v : r.findings) finds.push_back(verdict_json(v));
  j["findings"] = finds;
  j["all_pass"] = r.all_pass();
  return j;
}

void write_row(std::ostream& out, const CoeffRow& row, Format fmt, int digits) {
  switch (fmt) {
    case Format::Csv:
      for (long i = 0; i <= row.m; ++i)
        out << row.m << ',' << i << ',' << row[i].get_num().get_str() << ',' << row[i].get_den().get_str() << '\n';
      return;
    case Format::Json: {
      ojson j = ojson::object();
      j["command"] = "row";
      j["m"] = row.m;
      j["source"] = std::string(source_name(row.source));
      ojson cs = ojson::array();
      for (long i = 0; i <= row.m; ++i) {
        ojson c = ojson::object();
        c["i"] = i;
        const ojson value = rational_json(row[i], digits);
        for (auto it = value.begin(); it != value.end(); ++it) c[it.key()] = it.value();
        cs.push_back(c);
      }
      j["coefficients"] = cs;
      out << j.dump(2) << '\n';
      return;
    }
    case Format::Text:
      out << "d_i(" << row.m << "), source " << source_name(row.source) << '\n';
      for (long i = 0; i <= row.m; ++i)
        out << "  i=" << i << "  " << exact_string(row[i]) << "  " << to_decimal(row[i], digits) << '\n';
      return;
  }
}

std::vector<TableEntry> ratio_table(long m, RowCache& cache) {
  if (m < 2) throw UsageError("table: need m >= 2");
  std::vector<TableEntry> out;
  for (long i = 1; i <= m - 1; ++i) {
    TableEntry e;
    e.i = i;
    e.c = ratio_c(m, i, cache);
    e.u = u_ref(m, i);
    e.ratio = e.c / e.u;
    out.push_back(std::move(e));
  }
  return out;
}

void write_table(std::ostream& out, long m, const std::vector<TableEntry>& rows, Format fmt, int digits) {
  switch (fmt) {
    case Format::Csv:
      for (const auto& e : rows)
        out << m << ',' << e.i << ',' << e.ratio.get_num().get_str() << ',' << e.ratio.get_den().get_str() << ','
            << to_decimal(e.ratio, digits) << '\n';
      return;
    case Format::Json: {
      ojson j = ojson::object();
      j["command"] = "table";
      j["m"] = m;
      ojson rs = ojson::array();
      for (const auto& e : rows) {
        ojson r = ojson::object();
        r["i"] = e.i;
        r["c"] = rational_json(e.c, digits);
        r["u"] = rational_json(e.u, digits);
        r["ratio"] = rational_json(e.ratio, digits);
        rs.push_back(r);
      }
      j["rows"] = rs;
      out << j.dump(2) << '\n';
      return;
    }
    case Format::Text:
      out << "c_i(" << m << ")/u_i(" << m << ")\n";
      for (const auto& e : rows) out << e.i << '\t' << to_decimal(e.ratio, digits) << '\n';
      return;
  }
}

void write_report(std::ostream& out, const ScanReport& r, Format fmt, bool timing) {
  switch (fmt) {
    case Format::Csv:
      out << "check,cells,passed,strict,vacuous,failed\n";
      for (const auto& [id, t] : r.tallies)
        out << check_name(id) << ',' << t.cells << ',' << t.passed << ',' << t.strict << ',' << t.vacuous << ','
            << (is_observational(id) ? 0 : t.cells - t.passed) << '\n';
      return;
    case Format::Json: {
      ojson j = ojson::object();
      j["report"] = report_json(r);
      if (timing) j["footer"] = ojson{{"wall_time_ms", r.wall_ms}};
      out << j.dump(2) << '\n';
      return;
    }
    case Format::Text: {
      for (const auto& [k, v] : r.config) out << k << ": " << v << '\n';
      out << std::left << std::setw(12) << "check" << std::right << std::setw(10) << "cells" << std::setw(10)
          << "passed" << std::setw(10) << "strict" << std::setw(10) << "vacuous" << std::setw(10) << "failed" << '\n';
      for (const auto& [id, t] : r.tallies)
        out << std::left << std::setw(12) << check_name(id) << std::right << std::setw(10) << t.cells << std::setw(10)
            << t.passed << std::setw(10) << t.strict << std::setw(10) << t.vacuous << std::setw(10)
            << (is_observational(id) ? 0 : t.cells - t.passed) << '\n';
      auto list = [&](const char* title, const std::vector<CellVerdict>& vs) {
        if (vs.empty()) return;
        out << title << ":\n";
        for (const auto& v : vs) {
          out << "  " << check_name(v.check) << " m=" << v.m;
          if (v.i) out << " i=" << *v.i;
          out << " lhs=" << v.lhs_exact << " (" << v.lhs_display << ") rhs=" << v.rhs_exact << " (" << v.rhs_display
              << ")";
          if (!v.note.empty()) out << " [" << v.note << "]";
          out << '\n';
        }
      };
      list("failures", r.failures);
      list("findings", r.findings);
      out << (r.all_pass() ? "PASS" : "FAIL") << '\n';
      if (timing) out << "wall_time_ms: " << std::fixed << std::setprecision(1) << r.wall_ms << '\n';
      return;
    }
  }
}

void write_integral(std::ostream& out, const std::vector<IntegralCase>& cases, double tolerance, Format fmt,
                    bool timing, double wall_ms) {
  auto status = [](const IntegralCase& c) {
    if (!c.result.converged) return "inconclusive";
    return c.pass ? "pass" : "fail";
  };
  switch (fmt) {
    case Format::Csv:
      out << "m,a,quadrature,closed_form,relative_residual,status\n";
      for (const auto& c : cases)
        out << c.m << ',' << c.a << ',' << fmt_double(c.result.quadrature) << ',' << fmt_double(c.result.closed_form)
            << ',' << fmt_double(c.result.relative_residual) << ',' << status(c) << '\n';
      return;
    case Format::Json: {
      ojson body = ojson::object();
      body["command"] = "integral";
      body["tolerance"] = tolerance;
      ojson cs = ojson::array();
      for (const auto& c : cases) {
        ojson e = ojson::object();
        e["m"] = c.m;
        e["a"] = c.a;
        e["quadrature"] = c.result.quadrature;
        e["closed_form"] = c.result.closed_form;
        e["relative_residual"] = c.result.relative_residual;
        e["error_estimate"] = c.result.error_estimate;
        e["status"] = status(c);
        cs.push_back(e);
      }
      body["cases"] = cs;
      ojson j = ojson::object();
      j["report"] = body;
      if (timing) j["footer"] = ojson{{"wall_time_ms", wall_ms}};
      out << j.dump(2) << '\n';
      return;
    }
    case Format::Text:
      out << "tolerance: " << fmt_double(tolerance) << '\n';
      for (const auto& c : cases)
        out << "m=" << c.m << " a=" << c.a << " quadrature=" << fmt_double(c.result.quadrature)
            << " closed_form=" << fmt_double(c.result.closed_form)
            << " relative_residual=" << fmt_double(c.result.relative_residual) << ' ' << status(c) << '\n';
      if (timing) out << "wall_time_ms: " << std::fixed << std::setprecision(1) << wall_ms << '\n';
      return;
  }
}

}  // namespace bmoll
