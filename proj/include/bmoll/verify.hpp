#pragma once

// Pointwise exact verification of the inequalities, identities and
// conjectures on Boros-Moll coefficients, with aggregate scan reports.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmoll/bounds.hpp"
#include "bmoll/coeffs.hpp"
#include "bmoll/exactnum.hpp"

namespace bmoll {

enum class CheckId {
  // c_i(m) bracket and corollaries
  Rulc,      // c_i(m) < (m-i+1)(i+1)/((m-i)i)
  Lower,     // c_i(m) > rulc_lower(m,i)
  Ilc,       // c_i(m) > (i+1)/i, i.e. {i! d_i(m)} log-concave
  Sandwich,  // (m+i)/(m+i+1) < c_i/u_i < 1
  Ulog,      // (d_{i-1}/C(m,i-1))(d_{i+1}/C(m,i+1)) > (d_i/C(m,i))^2, straight from the row
  QuadRulc,  // quadratic in d_i(m+1)/d_i(m) equivalent to Rulc is negative at the ratio
  QuadLower, // quadratic equivalent to Lower is positive at the ratio
  // successive ratio d_i(m+1)/d_i(m)
  T,         // ratio < T(m,i), 1 <= i <= m-1
  TEdge,     // ratio == T(m,i) at i = 0 and i = m
  Q,         // ratio > Q(m,i), 1 <= i <= m-1
  TF,        // T(m,i) < F(m,i)
  // proof identities
  Delta,       // discriminant of the reverse-ULC quadratic
  SmallDelta,  // discriminant of the lower-bound quadratic
  XY,          // X^2 - Y^2 = G - H
  GH,          // G^2 - H^2 factorization
  FDen,        // (4m^2+9m+5-2i^2)^2 - i^2(4m+4i^2+5) factorization
  R,           // R(m,i) closed form and R(m,i) > 0
  UV,          // U > V with U^2 - V^2 = 4m^2(4m+5)
  X2T,         // larger root of the reverse-ULC quadratic equals T(m,i)
  X2Q,         // larger root of the lower-bound quadratic equals Q(m,i)
  // coefficient routes
  CrossPath,   // closed form row == next_row_rec21 row
  Rec22,
  Rec23,
  Classify,    // row m is log-concave, not ultra-LC, reverse ultra-LC (n = m)
  // scans
  ConjLc,
  ConjRulc,
  Bessel,
  Monotone,    // c_i/u_i increasing in i (observation only)
};

std::string_view check_name(CheckId id);
std::optional<CheckId> parse_check(std::string_view name);
const std::vector<CheckId>& all_checks();

/// Checks run by the per-m verify suite, in emission order.
const std::vector<CheckId>& verify_suite_checks();

/// Findings for observational checks never count as failures.
bool is_observational(CheckId id);

struct CellVerdict {
  CheckId check = CheckId::Rulc;
  long m = 0;
  std::optional<long> i;
  bool pass = false;
  bool strict = false;
  int margin_sign = 0;  // sign of the slack; > 0 means satisfied with room
  bool vacuous = false;
  std::string lhs_display;
  std::string rhs_display;
  std::string lhs_exact;
  std::string rhs_exact;
  std::string note;
};

struct CheckTally {
  long cells = 0;
  long passed = 0;
  long strict = 0;
  long vacuous = 0;
};

struct ScanReport {
  std::vector<std::pair<std::string, std::string>> config;
  std::map<CheckId, CheckTally> tallies;
  std::vector<CellVerdict> failures;
  std::vector<CellVerdict> findings;
  double wall_ms = 0;

  void add(CellVerdict v);
  void add_all(std::vector<CellVerdict> vs);
  void merge(ScanReport other);

  /// Orders failures and findings by (check, m, i).
  void sort();
  bool all_pass() const { return failures.empty(); }
};

struct VerifyOptions {
  int float_digits = 6;
};

// -- sequence classification --

struct SequenceClass {
  bool log_concave = false;
  bool ultra_lc = false;
  bool reverse_ultra_lc = false;
  long n = 0;
};

/// Per-index quantities behind the classification, for 1 <= k <= n-1.
struct SequenceMargins {
  std::vector<Rational> lc;   // a_k^2 - a_{k+1} a_{k-1}
  std::vector<Rational> ulc;  // k(n-k) a_k^2 - (n-k+1)(k+1) a_{k-1} a_{k+1}
};

SequenceMargins sequence_margins(const std::vector<Rational>& a, long n);
SequenceClass classify_sequence(const std::vector<Rational>& a, long n);

/// Coefficients of the Bessel polynomial y_n(x).
std::vector<Rational> bessel_row(long n);

// -- per-m suites --

/// Rulc, Lower, Ilc and Sandwich for 1 <= i <= m-1. m >= 2.
std::vector<CellVerdict> verify_row_inequalities(long m, RowCache& cache, const VerifyOptions& opt = {});

/// Q < ratio < T for interior i, ratio == T at i = 0 and i = m. m >= 2.
std::vector<CellVerdict> verify_ratio_bounds(long m, RowCache& cache, const VerifyOptions& opt = {});

/// T(m,i) < F(m,i) through the single-radicand reduction (sign of X, then X^2 vs Y^2).
std::vector<CellVerdict> verify_lemma_TF(long m, const VerifyOptions& opt = {});

/// Proof identities at one interior point (m,i).
std::vector<CellVerdict> verify_proof_identities(long m, long i, const VerifyOptions& opt = {});

/// The step inequality (2m^2+3m)sqrt(4m^2+4m+5) > 4m^3+8m^2+5m. m >= 1.
CellVerdict verify_step_inequality(long m, const VerifyOptions& opt = {});

/// Brute-force binomial form of the reverse-ULC inequality, directly from the row.
std::vector<CellVerdict> verify_ulog(long m, RowCache& cache, const VerifyOptions& opt = {});

/// The two quadratics in d_i(m+1)/d_i(m) evaluated at the exact ratio.
std::vector<CellVerdict> verify_quadratic_forms(long m, RowCache& cache, const VerifyOptions& opt = {});

/// Closed form vs next_row_rec21, and zero rec22/rec23 residuals on rows m..m+2.
std::vector<CellVerdict> verify_recurrences(long m, RowCache& cache);

/// classify_sequence(row m, n = m): log-concave, not ultra-LC, reverse ultra-LC.
CellVerdict verify_row_class(long m, RowCache& cache);

// -- scans --

struct ScanConfig {
  long m_min = 2;
  long m_max = 100;
  std::vector<CheckId> checks;  // empty means verify_suite_checks()
  VerifyOptions options;
};

ScanReport run_verify(const ScanConfig& config, RowCache& cache);

/// Conjectures on e_i = d_{i+1}d_{i-1}/d_i^2 over 2 <= i <= m-2, reindexed
/// k = i-2 and classified with binomial parameter n = m - n_offset.
ScanReport scan_conjectures(long m_min, long m_max, RowCache& cache, long n_offset = 4,
                            const VerifyOptions& opt = {});

ScanReport verify_bessel(long n_max, const VerifyOptions& opt = {});

/// Whether c_i(m)/u_i(m) strictly increases in i. Violations are findings.
ScanReport monotonicity_report(long m, RowCache& cache, const VerifyOptions& opt = {});

}  // namespace bmoll
