#include "bmoll/coeffs.hpp"

#include <gmp.h>

#include <string>

namespace bmoll {

std::string_view source_name(RowSource s) {
  switch (s) {
    case RowSource::ClosedForm: return "closed_form";
    case RowSource::Recurrence21: return "recurrence21";
    case RowSource::CacheFile: return "cache_file";
  }
  return "unknown";
}

Rational CoeffRow::at_or_zero(long i) const {
  if (i < 0 || i > m) return 0;
  return coeffs[static_cast<std::size_t>(i)];
}

void validate_row(const CoeffRow& row) {
  const std::string where = "row m=" + std::to_string(row.m);
  if (row.m < 0) throw InvalidRow(where + ": negative m");
  if (row.coeffs.size() != static_cast<std::size_t>(row.m) + 1)
    throw InvalidRow(where + ": expected " + std::to_string(row.m + 1) + " coefficients, got " +
                     std::to_string(row.coeffs.size()));
  for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
    const Rational& c = row.coeffs[i];
    if (c.get_den() <= 0 || gcd(c.get_num(), c.get_den()) != 1)
      throw InvalidRow(where + ": coefficient " + std::to_string(i) + " not in canonical form");
    if (c <= 0) throw InvalidRow(where + ": coefficient " + std::to_string(i) + " is not positive");
  }
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer acc = 1;
  for (long j = 1; j <= k; ++j) {
    acc *= n - k + j;
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(j));
  }
  return acc;
}

CoeffRow closed_form_row(long m) {
  if (m < 0) throw UsageError("closed_form_row: m must be nonnegative");
  const auto n = static_cast<std::size_t>(m) + 1;
  std::vector<Integer> sums(n, 0);
  // pascal holds C(k, 0..k) for the current k.
  std::vector<Integer> pascal{1};
  pascal.reserve(n);
  for (long k = 0; k <= m; ++k) {
    if (k > 0) {
      pascal.emplace_back(1);
      for (long j = k - 1; j >= 1; --j) pascal[static_cast<std::size_t>(j)] += pascal[static_cast<std::size_t>(j - 1)];
    }
    Integer term = binomial(2 * m - 2 * k, m - k) * binomial(m + k, m);
    term <<= static_cast<mp_bitcnt_t>(k);
    for (long i = 0; i <= k; ++i) sums[static_cast<std::size_t>(i)] += term * pascal[static_cast<std::size_t>(i)];
  }
  Integer scale = Integer(1) << static_cast<mp_bitcnt_t>(2 * m);
  CoeffRow row{m, {}, RowSource::ClosedForm};
  row.coeffs.reserve(n);
  for (auto& s : sums) row.coeffs.push_back(make_rational(s, scale));
  return row;
}

CoeffRow next_row_rec21(const CoeffRow& row) {
  const long m = row.m;
  CoeffRow out{m + 1, {}, RowSource::Recurrence21};
  out.coeffs.reserve(static_cast<std::size_t>(m) + 2);
  const Rational inv = make_rational(1, 2 * (m + 1));
  for (long i = 0; i <= m + 1; ++i) {
    Rational v = 2 * (m + i) * row.at_or_zero(i - 1) + (4 * m + 2 * i + 3) * row.at_or_zero(i);
    out.coeffs.push_back(Rational(v * inv));
  }
  return out;
}

namespace {

void require_consecutive(const CoeffRow& a, const CoeffRow& b, const char* op) {
  if (b.m != a.m + 1)
    throw UsageError(std::string(op) + ": rows m=" + std::to_string(a.m) + " and m=" + std::to_string(b.m) +
                     " are not consecutive");
}

}  // namespace

Rational residual_rec22(const CoeffRow& rowm, const CoeffRow& rowm1, long i) {
  require_consecutive(rowm, rowm1, "residual_rec22");
  const long m = rowm.m;
  if (i < 0 || i > m + 1) throw UsageError("residual_rec22: index out of range");
  Rational lhs = 2 * (m + 1) * (m + 1 - i) * rowm1.at_or_zero(i);
  Rational rhs = (4 * m - 2 * i + 3) * (m + i + 1) * rowm.at_or_zero(i) - 2 * i * (i + 1) * rowm.at_or_zero(i + 1);
  return lhs - rhs;
}

Rational residual_rec23(const CoeffRow& rowm, const CoeffRow& rowm1, const CoeffRow& rowm2, long i) {
  require_consecutive(rowm, rowm1, "residual_rec23");
  require_consecutive(rowm1, rowm2, "residual_rec23");
  const long m = rowm.m;
  if (i < 0 || i > m + 2) throw UsageError("residual_rec23: index out of range");
  const Integer M = m, I = i;
  Rational lhs = 4 * (M + 2 - I) * (M + 1) * (M + 2) * rowm2.at_or_zero(i);
  Rational rhs = 2 * (M + 1) * (-4 * I * I + 8 * M * M + 24 * M + 19) * rowm1.at_or_zero(i) -
                 (M + I + 1) * (4 * M + 3) * (4 * M + 5) * rowm.at_or_zero(i);
  return lhs - rhs;
}

Rational ratio_successive(long m, long i, RowCache& cache) {
  if (m < 0 || i < 0 || i > m) throw UsageError("ratio_successive: need 0 <= i <= m");
  const CoeffRow& lo = cache.row(m);
  const CoeffRow& hi = cache.row(m + 1);
  return hi[i] / lo[i];
}

Rational ratio_c(long m, long i, RowCache& cache) {
  if (i < 1 || i > m - 1) throw UsageError("ratio_c: need 1 <= i <= m-1");
  const CoeffRow& r = cache.row(m);
  return r[i] * r[i] / (r[i - 1] * r[i + 1]);
}

}  // namespace bmoll
