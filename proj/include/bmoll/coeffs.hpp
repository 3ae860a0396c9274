#pragma once

// Boros-Moll coefficient rows d_0(m)..d_m(m), computed by the closed-form
// sum or by stepping the first-order recurrence in m, plus residual checks
// for the two other Kauers-Paule recurrences.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmoll/exactnum.hpp"

namespace bmoll {

enum class RowSource { ClosedForm, Recurrence21, CacheFile };

std::string_view source_name(RowSource s);

struct CoeffRow {
  long m = 0;
  std::vector<Rational> coeffs;
  RowSource source = RowSource::ClosedForm;

  const Rational& operator[](long i) const { return coeffs.at(static_cast<std::size_t>(i)); }

  /// d_i(m), with d_i(m) = 0 for i < 0 or i > m.
  Rational at_or_zero(long i) const;
};

/// Raised when a row breaks the length/positivity/canonical-form invariants.
class InvalidRow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void validate_row(const CoeffRow& row);

/// C(n, k) by running product with exact division; 0 when k < 0 or k > n.
Integer binomial(long n, long k);

/// d_i(m) = 2^{-2m} sum_k 2^k C(2m-2k, m-k) C(m+k, m) C(k, i).
CoeffRow closed_form_row(long m);

/// Row m+1 from row m via 2(m+1)d_i(m+1) = 2(m+i)d_{i-1}(m) + (4m+2i+3)d_i(m).
CoeffRow next_row_rec21(const CoeffRow& row);

/// LHS - RHS of
///   2(m+1)(m+1-i)d_i(m+1) = (4m-2i+3)(m+i+1)d_i(m) - 2i(i+1)d_{i+1}(m)
/// at index i; zero on genuine rows.
Rational residual_rec22(const CoeffRow& rowm, const CoeffRow& rowm1, long i);

/// LHS - RHS of
///   4(m+2-i)(m+1)(m+2)d_i(m+2) = 2(m+1)(8m^2+24m+19-4i^2)d_i(m+1)
///                                - (m+i+1)(4m+3)(4m+5)d_i(m)
/// at index i; zero on genuine rows.
Rational residual_rec23(const CoeffRow& rowm, const CoeffRow& rowm1, const CoeffRow& rowm2, long i);

/// Raised by RowCache::load for malformed cache files; carries the 1-based line.
class CacheFormatError : public std::runtime_error {
 public:
  CacheFormatError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Rows keyed by m. Missing rows are produced by stepping next_row_rec21
/// forward from the nearest stored row below (or from m = 0).
///
/// Safe for concurrent readers; extension takes an exclusive lock. Stored
/// rows are never erased, so returned references stay valid.
class RowCache {
 public:
  RowCache() = default;

  const CoeffRow& row(long m);

  /// Stores a validated row. A second row for the same m must be identical.
  void insert(CoeffRow row);

  bool contains(long m) const;
  std::size_t size() const;

  /// Text format: one line per coefficient, `m<TAB>i<TAB>numerator<TAB>denominator`.
  /// Blank lines and lines starting with '#' are skipped.
  void load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

 private:
  mutable std::shared_mutex mu_;
  std::map<long, CoeffRow> rows_;
};

/// d_i(m+1) / d_i(m) for 0 <= i <= m.
Rational ratio_successive(long m, long i, RowCache& cache);

/// c_i(m) = d_i(m)^2 / (d_{i-1}(m) d_{i+1}(m)) for 1 <= i <= m-1.
Rational ratio_c(long m, long i, RowCache& cache);

// -- floating-point oracle for the defining quartic integral --

struct QuadratureConfig {
  double abs_tol = 1e-14;
  double rel_tol = 1e-10;
  unsigned max_depth = 20;
};

struct IntegralResult {
  double quadrature = 0;
  double closed_form = 0;
  double relative_residual = 0;
  double error_estimate = 0;
  bool converged = false;
};

/// Compares adaptive quadrature of int_0^inf dx/(x^4+2ax^2+1)^{m+1}
/// (substituting x = t/(1-t)) against pi*P_m(a)/(2^{m+3/2}(a+1)^{m+1/2})
/// evaluated from the exact row. Requires a > -1.
IntegralResult integral_residual(long m, double a, const QuadratureConfig& config = {});

/// P_m(a) from the exact row, evaluated in long double.
long double evaluate_row(const CoeffRow& row, long double a);

}  // namespace bmoll
