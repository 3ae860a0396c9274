#include <fstream>
#include <mutex>
#include <sstream>

#include "bmoll/coeffs.hpp"

namespace bmoll {

CacheFormatError::CacheFormatError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

const CoeffRow& RowCache::row(long m) {
  if (m < 0) throw UsageError("RowCache::row: negative m");
  {
    std::shared_lock lock(mu_);
    if (auto it = rows_.find(m); it != rows_.end()) return it->second;
  }
  std::unique_lock lock(mu_);
  if (auto it = rows_.find(m); it != rows_.end()) return it->second;
  auto it = rows_.upper_bound(m);
  if (it == rows_.begin()) {
    it = rows_.emplace(0, CoeffRow{0, {Rational(1)}, RowSource::Recurrence21}).first;
  } else {
    --it;
  }
  while (it->first < m) {
    CoeffRow next = next_row_rec21(it->second);
    it = rows_.emplace_hint(std::next(it), next.m, std::move(next));
  }
  return it->second;
}

void RowCache::insert(CoeffRow row) {
  validate_row(row);
  std::unique_lock lock(mu_);
  auto [it, fresh] = rows_.try_emplace(row.m, row);
  if (!fresh && it->second.coeffs != row.coeffs)
    throw InvalidRow("row m=" + std::to_string(row.m) + " conflicts with the stored row");
}

bool RowCache::contains(long m) const {
  std::shared_lock lock(mu_);
  return rows_.count(m) != 0;
}

std::size_t RowCache::size() const {
  std::shared_lock lock(mu_);
  return rows_.size();
}

namespace {

Integer parse_integer(const std::string& field, std::size_t line, const char* what) {
  std::size_t start = (!field.empty() && field[0] == '-') ? 1 : 0;
  if (field.size() == start || field.find_first_not_of("0123456789", start) != std::string::npos)
    throw CacheFormatError(line, std::string("malformed ") + what + " '" + field + "'");
  return Integer(field, 10);
}

}  // namespace

void RowCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CacheFormatError(0, "cannot open " + path.string());

  struct Pending {
    std::map<long, Rational> coeffs;
    std::size_t first_line = 0;
  };
  std::map<long, Pending> pending;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, '\t');) fields.push_back(f);
    if (fields.size() != 4) throw CacheFormatError(lineno, "expected 4 tab-separated fields, got " + std::to_string(fields.size()));
    const Integer m = parse_integer(fields[0], lineno, "m");
    const Integer i = parse_integer(fields[1], lineno, "index");
    const Integer num = parse_integer(fields[2], lineno, "numerator");
    const Integer den = parse_integer(fields[3], lineno, "denominator");
    if (m < 0 || !m.fits_slong_p()) throw CacheFormatError(lineno, "m out of range");
    if (i < 0 || i > m) throw CacheFormatError(lineno, "index out of range 0..m");
    if (den <= 0) throw CacheFormatError(lineno, "denominator must be positive");
    if (gcd(num, den) != 1) throw CacheFormatError(lineno, "fraction not in lowest terms");
    if (num <= 0) throw CacheFormatError(lineno, "coefficient must be positive");
    Pending& p = pending[m.get_si()];
    if (p.first_line == 0) p.first_line = lineno;
    if (!p.coeffs.emplace(i.get_si(), Rational(num, den)).second)
      throw CacheFormatError(lineno, "duplicate entry for m=" + m.get_str() + " i=" + i.get_str());
  }

  for (auto& [m, p] : pending) {
    if (p.coeffs.size() != static_cast<std::size_t>(m) + 1)
      throw CacheFormatError(p.first_line, "row m=" + std::to_string(m) + " is incomplete");
    CoeffRow r{m, {}, RowSource::CacheFile};
    for (auto& [i, c] : p.coeffs) r.coeffs.push_back(c);
    try {
      insert(std::move(r));
    } catch (const InvalidRow& e) {
      throw CacheFormatError(p.first_line, e.what());
    }
  }
}

void RowCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  std::shared_lock lock(mu_);
  for (const auto& [m, r] : rows_)
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
      out << m << '\t' << i << '\t' << r.coeffs[i].get_num().get_str() << '\t' << r.coeffs[i].get_den().get_str()
          << '\n';
}

}  // namespace bmoll
