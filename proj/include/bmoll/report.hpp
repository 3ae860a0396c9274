#pragma once

// Text / JSON / CSV renderings of rows, tables and scan reports. JSON keeps
// exact values as decimal-digit strings; wall time only appears in a
// separate footer so report bodies are reproducible byte for byte.

#include <ostream>
#include <vector>

#include <json.hpp>

#include "bmoll/coeffs.hpp"
#include "bmoll/verify.hpp"

namespace bmoll {

enum class Format { Text, Json, Csv };

using ojson = nlohmann::ordered_json;

ojson rational_json(const Rational& x, int digits);
ojson verdict_json(const CellVerdict& v);
ojson report_json(const ScanReport& r);

/// One line per coefficient: m,i,numerator,denominator (same column order as the cache file).
void write_row(std::ostream& out, const CoeffRow& row, Format fmt, int digits);

struct TableEntry {
  long i = 0;
  Rational c;
  Rational u;
  Rational ratio;
};

/// c_i(m)/u_i(m) for 1 <= i <= m-1.
std::vector<TableEntry> ratio_table(long m, RowCache& cache);
void write_table(std::ostream& out, long m, const std::vector<TableEntry>& rows, Format fmt, int digits);

void write_report(std::ostream& out, const ScanReport& r, Format fmt, bool timing);

struct IntegralCase {
  long m = 0;
  double a = 0;
  IntegralResult result;
  bool pass = false;
};

void write_integral(std::ostream& out, const std::vector<IntegralCase>& cases, double tolerance, Format fmt,
                    bool timing, double wall_ms);

}  // namespace bmoll
