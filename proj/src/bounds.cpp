#include "bmoll/bounds.hpp"

#include <string>

namespace bmoll {

namespace {

void require(bool ok, const char* op, long m, long i) {
  if (!ok) throw UsageError(std::string(op) + ": (m,i)=(" + std::to_string(m) + "," + std::to_string(i) + ") out of range");
}

}  // namespace

QuadSurd bound_T(long m, long i) {
  require(m >= 1 && i >= 0 && i <= m, "bound_T", m, i);
  const Integer M = m, I = i;
  const Integer den = 2 * (M - I + 1) * (M + 1);
  return QuadSurd::normalize(make_rational(4 * M * M + 7 * M + 3 - 2 * I * I, den), make_rational(I, den),
                             4 * M + 4 * I * I + 1);
}

Rational bound_Q(long m, long i) {
  require(m >= 0 && i >= 0 && i <= m, "bound_Q", m, i);
  const Integer M = m, I = i;
  return make_rational(4 * M * M + 7 * M + I + 3, 2 * (M + 1 - I) * (M + 1));
}

QuadSurd bound_F(long m, long i) {
  require(i >= 1 && i <= m - 1, "bound_F", m, i);
  const Integer M = m, I = i;
  const Integer base = 4 * M * M + 9 * M + 5 - 2 * I * I;
  const Integer radicand = 4 * M + 4 * I * I + 5;
  // (base - i*sqrt(D)) * (base + i*sqrt(D)) = (4m+5)^2 (m+i+1)(m-i+1)
  const Integer norm = base * base - I * I * radicand;
  if (norm != (4 * M + 5) * (4 * M + 5) * (M + I + 1) * (M - I + 1))
    throw std::logic_error("bound_F: rationalization identity failed at (" + std::to_string(m) + "," +
                           std::to_string(i) + ")");
  const Integer den = 2 * (M + 1) * (4 * M + 5) * (M - I + 1);
  const Integer lead = 4 * M + 3;
  return QuadSurd::normalize(make_rational(lead * base, den), make_rational(lead * I, den), radicand);
}

Rational ulc_upper(long m, long i) {
  require(i >= 1 && i <= m - 1, "ulc_upper", m, i);
  return make_rational(Integer(m - i + 1) * (i + 1), Integer(m - i) * i);
}

Rational rulc_lower(long m, long i) {
  return ulc_upper(m, i) * make_rational(m + i, m + i + 1);
}

Rational u_ref(long m, long i) {
  require(i >= 1 && i <= m - 1, "u_ref", m, i);
  return (1 + make_rational(1, i)) * (1 + make_rational(1, m - i));
}

BoundSet reference_ratios(long m, long i) {
  require(i >= 1 && i <= m - 1, "reference_ratios", m, i);
  BoundSet b;
  b.m = m;
  b.i = i;
  b.T = bound_T(m, i);
  b.Q = bound_Q(m, i);
  b.F = bound_F(m, i);
  b.u = u_ref(m, i);
  b.ulc_upper = ulc_upper(m, i);
  b.rulc_lower = rulc_lower(m, i);
  return b;
}

}  // namespace bmoll
