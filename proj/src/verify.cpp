#include <string>

#include "verdict.hpp"

namespace bmoll {

namespace detail {

CellVerdict from_slack(CheckId id, long m, std::optional<long> i, int slack, bool equality) {
  CellVerdict v;
  v.check = id;
  v.m = m;
  v.i = i;
  v.margin_sign = slack;
  v.pass = equality ? slack == 0 : slack > 0;
  v.strict = !equality && slack > 0;
  return v;
}

CellVerdict compare(CheckId id, long m, std::optional<long> i, const QuadSurd& lhs, Rel rel, const QuadSurd& rhs,
                    int digits) {
  const int diff = (lhs - rhs).sign();
  CellVerdict v;
  v.check = id;
  v.m = m;
  v.i = i;
  switch (rel) {
    case Rel::Less:
    case Rel::LessEq:
      v.margin_sign = -diff;
      break;
    case Rel::Greater:
    case Rel::GreaterEq:
    case Rel::Equal:
      v.margin_sign = diff;
      break;
  }
  switch (rel) {
    case Rel::Less:
    case Rel::Greater:
      v.pass = v.strict = v.margin_sign > 0;
      break;
    case Rel::LessEq:
    case Rel::GreaterEq:
      v.pass = v.margin_sign >= 0;
      v.strict = v.margin_sign > 0;
      break;
    case Rel::Equal:
      v.pass = diff == 0;
      v.strict = false;
      break;
  }
  v.lhs_display = to_decimal(lhs, digits);
  v.rhs_display = to_decimal(rhs, digits);
  v.lhs_exact = lhs.to_string();
  v.rhs_exact = rhs.to_string();
  return v;
}

}  // namespace detail

using detail::compare;
using detail::Rel;

namespace {

void require_m(long m, long min, const char* op) {
  if (m < min) throw UsageError(std::string(op) + ": need m >= " + std::to_string(min) + ", got " + std::to_string(m));
}

}  // namespace

std::vector<CellVerdict> verify_row_inequalities(long m, RowCache& cache, const VerifyOptions& opt) {
  require_m(m, 2, "verify_row_inequalities");
  std::vector<CellVerdict> out;
  const int dg = opt.float_digits;
  for (long i = 1; i <= m - 1; ++i) {
    const Rational c = ratio_c(m, i, cache);
    const Rational u = u_ref(m, i);
    out.push_back(compare(CheckId::Rulc, m, i, c, Rel::Less, ulc_upper(m, i), dg));
    out.push_back(compare(CheckId::Lower, m, i, c, Rel::Greater, rulc_lower(m, i), dg));
    out.push_back(compare(CheckId::Ilc, m, i, c, Rel::Greater, make_rational(i + 1, i), dg));

    const Rational cu = c / u;
    const Rational lo = make_rational(m + i, m + i + 1);
    const int slack = std::min(sgn(Rational(cu - lo)), sgn(Rational(1 - cu)));
    CellVerdict v = detail::from_slack(CheckId::Sandwich, m, i, slack, false);
    v.lhs_display = to_decimal(cu, dg);
    v.rhs_display = "(" + to_decimal(lo, dg) + ", 1)";
    v.lhs_exact = exact_string(cu);
    v.rhs_exact = "(" + exact_string(lo) + ", 1)";
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<CellVerdict> verify_ratio_bounds(long m, RowCache& cache, const VerifyOptions& opt) {
  require_m(m, 2, "verify_ratio_bounds");
  std::vector<CellVerdict> out;
  const int dg = opt.float_digits;
  for (long i = 0; i <= m; ++i) {
    const Rational ratio = ratio_successive(m, i, cache);
    if (i == 0 || i == m) {
      out.push_back(compare(CheckId::TEdge, m, i, ratio, Rel::Equal, bound_T(m, i), dg));
      continue;
    }
    out.push_back(compare(CheckId::T, m, i, ratio, Rel::Less, bound_T(m, i), dg));
    out.push_back(compare(CheckId::Q, m, i, ratio, Rel::Greater, bound_Q(m, i), dg));
  }
  return out;
}

std::vector<CellVerdict> verify_ulog(long m, RowCache& cache, const VerifyOptions& opt) {
  require_m(m, 2, "verify_ulog");
  const CoeffRow& r = cache.row(m);
  auto scaled = [&](long k) { return Rational(r[k] / Rational(binomial(m, k))); };
  std::vector<CellVerdict> out;
  for (long i = 1; i <= m - 1; ++i) {
    const Rational lhs = scaled(i - 1) * scaled(i + 1);
    const Rational mid = scaled(i);
    out.push_back(compare(CheckId::Ulog, m, i, lhs, Rel::Greater, Rational(mid * mid), opt.float_digits));
  }
  return out;
}

std::vector<CellVerdict> verify_quadratic_forms(long m, RowCache& cache, const VerifyOptions& opt) {
  require_m(m, 2, "verify_quadratic_forms");
  std::vector<CellVerdict> out;
  const Integer M = m;
  for (long i = 1; i <= m - 1; ++i) {
    const Integer I = i;
    const Rational r = ratio_successive(m, i, cache);
    const Integer a = 4 * (M - I + 1) * (M - I + 1) * (M + 1) * (M + 1);
    const Integer b = -4 * (M - I + 1) * (M + 1) * (4 * M * M - 2 * I * I + 7 * M + 3);
    const Integer c_rulc =
        -(32 * M * I * I - 56 * M * M * M - 73 * M * M - 42 * M + 13 * I * I - 9 - 16 * M * M * M * M + 16 * I * I * M * M);
    const Integer c_lower = (4 * M * M + 7 * M + I + 3) * (4 * M + 3 - 4 * I) * (M + I + 1);
    const Rational base = a * r * r + b * r;
    out.push_back(compare(CheckId::QuadRulc, m, i, Rational(base + c_rulc), Rel::Less, 0, opt.float_digits));
    out.push_back(compare(CheckId::QuadLower, m, i, Rational(base + c_lower), Rel::Greater, 0, opt.float_digits));
  }
  return out;
}

std::vector<CellVerdict> verify_recurrences(long m, RowCache& cache) {
  require_m(m, 0, "verify_recurrences");
  std::vector<CellVerdict> out;
  const CoeffRow& r0 = cache.row(m);
  const CoeffRow& r1 = cache.row(m + 1);
  const CoeffRow& r2 = cache.row(m + 2);

  const CoeffRow closed = closed_form_row(m);
  long first_bad = -1;
  for (long i = 0; i <= m && first_bad < 0; ++i)
    if (closed[i] != r0[i]) first_bad = i;
  CellVerdict cross = detail::from_slack(CheckId::CrossPath, m, std::nullopt, first_bad < 0 ? 0 : 1, true);
  if (first_bad >= 0) {
    cross.i = first_bad;
    cross.lhs_exact = exact_string(closed[first_bad]);
    cross.rhs_exact = exact_string(r0[first_bad]);
    cross.note = std::string("closed form vs ") + std::string(source_name(r0.source));
  }
  out.push_back(std::move(cross));

  auto residual_verdict = [&](CheckId id, long i, const Rational& res) {
    CellVerdict v = detail::from_slack(id, m, i, sgn(res), true);
    v.lhs_exact = exact_string(res);
    v.rhs_exact = "0";
    return v;
  };
  for (long i = 0; i <= m + 1; ++i) out.push_back(residual_verdict(CheckId::Rec22, i, residual_rec22(r0, r1, i)));
  for (long i = 0; i <= m + 2; ++i) out.push_back(residual_verdict(CheckId::Rec23, i, residual_rec23(r0, r1, r2, i)));
  return out;
}

CellVerdict verify_row_class(long m, RowCache& cache) {
  require_m(m, 2, "verify_row_class");
  const CoeffRow& r = cache.row(m);
  const SequenceClass cls = classify_sequence(r.coeffs, m);
  const bool ok = cls.log_concave && !cls.ultra_lc && cls.reverse_ultra_lc;
  CellVerdict v = detail::from_slack(CheckId::Classify, m, std::nullopt, ok ? 1 : -1, false);
  v.lhs_exact = std::string("log_concave=") + (cls.log_concave ? "true" : "false") +
                " ultra_lc=" + (cls.ultra_lc ? "true" : "false") +
                " reverse_ultra_lc=" + (cls.reverse_ultra_lc ? "true" : "false");
  v.rhs_exact = "log_concave=true ultra_lc=false reverse_ultra_lc=true";
  return v;
}

}  // namespace bmoll
