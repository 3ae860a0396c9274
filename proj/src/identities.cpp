#include <string>

#include "verdict.hpp"

namespace bmoll {

using detail::compare;
using detail::Rel;

namespace {

void require_interior(long m, long i, const char* op) {
  if (m < 2 || i < 1 || i > m - 1)
    throw UsageError(std::string(op) + ": need m >= 2 and 1 <= i <= m-1, got (" + std::to_string(m) + "," +
                     std::to_string(i) + ")");
}

// Pieces of the T < F reduction at one (m,i). A = sqrt(a2), B = sqrt(b2).
struct LemmaTerms {
  Integer a2, b2, ab2;  // A^2, B^2, (AB)^2
  Integer c1, c2;       // Y = c1*A - c2*B
  QuadSurd x;           // (i - 4i^3) + i*AB
  Rational xy_rational; // X^2 - Y^2 = xy_rational + xy_radical*AB
  Rational xy_radical;
};

LemmaTerms lemma_terms(long m, long i) {
  const Integer M = m, I = i;
  LemmaTerms t;
  t.a2 = 4 * M + 4 * I * I + 1;
  t.b2 = t.a2 + 4;
  t.ab2 = t.a2 * t.b2;
  t.c1 = 4 * M * M + 9 * M + 5 - 2 * I * I;
  t.c2 = 4 * M * M + 7 * M + 3 - 2 * I * I;
  const Integer x0 = I - 4 * I * I * I;
  t.x = QuadSurd::normalize(x0, I, t.ab2);
  t.xy_rational = x0 * x0 + I * I * t.ab2 - t.c1 * t.c1 * t.a2 - t.c2 * t.c2 * t.b2;
  t.xy_radical = 2 * I * x0 + 2 * t.c1 * t.c2;
  return t;
}

}  // namespace

std::vector<CellVerdict> verify_lemma_TF(long m, const VerifyOptions& opt) {
  if (m < 2) throw UsageError("verify_lemma_TF: need m >= 2");
  std::vector<CellVerdict> out;
  for (long i = 1; i <= m - 1; ++i) {
    const LemmaTerms t = lemma_terms(m, i);
    // F - T = i(X - Y) / (2(m+1)(m-i+1)(c1 - iB)); the denominator is
    // positive when c1 > 0 and c1^2 > i^2 B^2.
    const bool den_pos = t.c1 > 0 && t.c1 * t.c1 - Integer(i) * i * t.b2 > 0;
    const int x_sign = t.x.sign();
    const int xy_sign = QuadSurd::normalize(t.xy_rational, t.xy_radical, t.ab2).sign();
    const bool ok = den_pos && x_sign > 0 && xy_sign > 0;

    CellVerdict v = detail::from_slack(CheckId::TF, m, i, ok ? 1 : -1, false);
    const QuadSurd T = bound_T(m, i);
    const QuadSurd F = bound_F(m, i);
    v.lhs_display = to_decimal(T, opt.float_digits);
    v.rhs_display = to_decimal(F, opt.float_digits);
    v.lhs_exact = T.to_string();
    v.rhs_exact = F.to_string();
    v.note = "sign(X)=" + std::to_string(x_sign) + " sign(X^2-Y^2)=" + std::to_string(xy_sign) +
             (den_pos ? "" : " denominator not positive");
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<CellVerdict> verify_proof_identities(long m, long i, const VerifyOptions& opt) {
  require_interior(m, i, "verify_proof_identities");
  const int dg = opt.float_digits;
  const Integer M = m, I = i;
  std::vector<CellVerdict> out;

  // Both quadratics share the leading and linear coefficients.
  const Integer a = 4 * (M - I + 1) * (M - I + 1) * (M + 1) * (M + 1);
  const Integer b = -4 * (M - I + 1) * (M + 1) * (4 * M * M - 2 * I * I + 7 * M + 3);
  const Integer c_rulc =
      -(32 * M * I * I - 56 * M * M * M - 73 * M * M - 42 * M + 13 * I * I - 9 - 16 * M * M * M * M + 16 * I * I * M * M);
  const Integer c_lower = (4 * M * M + 7 * M + I + 3) * (4 * M + 3 - 4 * I) * (M + I + 1);

  const Integer disc = b * b - 4 * a * c_rulc;
  const Integer disc_formula = 16 * I * I * (M + 1) * (M + 1) * (4 * I * I + 4 * M + 1) * (M - I + 1) * (M - I + 1);
  out.push_back(compare(CheckId::Delta, m, i, disc, Rel::Equal, disc_formula, dg));

  const Integer small = b * b - 4 * a * c_lower;
  const Integer small_formula = 16 * I * I * (2 * I + 1) * (2 * I + 1) * (M + 1) * (M + 1) * (M - I + 1) * (M - I + 1);
  out.push_back(compare(CheckId::SmallDelta, m, i, small, Rel::Equal, small_formula, dg));

  const LemmaTerms t = lemma_terms(m, i);
  const Integer g = 32 * M * M * M * M - 32 * M * M * I * I + 128 * M * M * M - 64 * M * I * I + 190 * M * M -
                    30 * I * I + 124 * M + 30;
  const Integer I2 = I * I, I4 = I2 * I2, M2 = M * M, M3 = M2 * M, M4 = M3 * M, M5 = M4 * M;
  const Integer h = 128 * M5 + 608 * M4 + 1128 * M3 + 1014 * M2 + 436 * M + 128 * M4 * I2 + 384 * M3 * I2 +
                    408 * M2 * I2 - 128 * M2 * I4 + 200 * M * I2 - 256 * M * I4 - 120 * I4 + 50 * I2 + 70;
  out.push_back(compare(CheckId::XY, m, i, QuadSurd::normalize(t.xy_rational, t.xy_radical, t.ab2), Rel::Equal,
                        QuadSurd::normalize(Rational(-h), Rational(g), t.ab2), dg));

  const Integer gh = g * g * t.ab2 - h * h;
  const Integer gh_formula = 16 * (4 * M + 5) * (4 * M + 5) * (16 * M * I2 + 12 * I2 - 1) * (M + I + 1) * (M + I + 1) *
                             (M - I + 1) * (M - I + 1);
  out.push_back(compare(CheckId::GH, m, i, gh, Rel::Equal, gh_formula, dg));

  const Integer fden = t.c1 * t.c1 - I2 * t.b2;
  const Integer fden_formula = (4 * M + 5) * (4 * M + 5) * (M + I + 1) * (M - I + 1);
  out.push_back(compare(CheckId::FDen, m, i, fden, Rel::Equal, fden_formula, dg));

  {
    const Integer den = 2 * (M - I + 2) * (M + 2);
    const QuadSurd r = QuadSurd(make_rational(-4 * I2 + 8 * M2 + 24 * M + 19, den)) - bound_T(m + 1, i);
    const QuadSurd closed = QuadSurd::normalize(make_rational(t.c1, den), make_rational(-I, den), t.b2);
    CellVerdict v = compare(CheckId::R, m, i, r, Rel::Greater, 0, dg);
    if (r != closed) {
      v.pass = v.strict = false;
      v.note = "R(m,i) differs from (4m^2+9m+5-2i^2-i*sqrt(4m+4i^2+5))/(2(m-i+2)(m+2)) = " + closed.to_string();
    }
    out.push_back(std::move(v));
  }

  const Rational two_a = Rational(2 * a);
  const QuadSurd x2_rulc = QuadSurd::normalize(Rational(-b / two_a), Rational(1 / two_a), disc);
  out.push_back(compare(CheckId::X2T, m, i, x2_rulc, Rel::Equal, bound_T(m, i), dg));
  const QuadSurd x2_lower = QuadSurd::normalize(Rational(-b / two_a), Rational(1 / two_a), small);
  out.push_back(compare(CheckId::X2Q, m, i, x2_lower, Rel::Equal, bound_Q(m, i), dg));
  return out;
}

CellVerdict verify_step_inequality(long m, const VerifyOptions& opt) {
  if (m < 1) throw UsageError("verify_step_inequality: need m >= 1");
  const Integer M = m;
  const Integer radicand = 4 * M * M + 4 * M + 5;
  const Integer coeff = 2 * M * M + 3 * M;
  const QuadSurd U = QuadSurd::normalize(0, coeff, radicand);
  const Integer V = 4 * M * M * M + 8 * M * M + 5 * M;
  CellVerdict v = compare(CheckId::UV, m, std::nullopt, U, Rel::Greater, V, opt.float_digits);
  const Integer diff = coeff * coeff * radicand - V * V;
  if (diff != 4 * M * M * (4 * M + 5)) {
    v.pass = v.strict = false;
    v.note = "U^2 - V^2 = " + diff.get_str() + ", expected 4m^2(4m+5)";
  }
  return v;
}

}  // namespace bmoll
