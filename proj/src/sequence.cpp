#include <algorithm>
#include <array>
#include <tuple>

#include "bmoll/verify.hpp"

namespace bmoll {

namespace {

struct CheckInfo {
  CheckId id;
  std::string_view name;
};

constexpr std::array kChecks{
    CheckInfo{CheckId::Rulc, "rulc"},           CheckInfo{CheckId::Lower, "lower"},
    CheckInfo{CheckId::Ilc, "ilc"},             CheckInfo{CheckId::Sandwich, "sandwich"},
    CheckInfo{CheckId::Ulog, "ulog"},           CheckInfo{CheckId::QuadRulc, "quad_rulc"},
    CheckInfo{CheckId::QuadLower, "quad_lower"}, CheckInfo{CheckId::T, "t"},
    CheckInfo{CheckId::TEdge, "tedge"},         CheckInfo{CheckId::Q, "q"},
    CheckInfo{CheckId::TF, "tf"},               CheckInfo{CheckId::Delta, "delta"},
    CheckInfo{CheckId::SmallDelta, "small_delta"}, CheckInfo{CheckId::XY, "xy"},
    CheckInfo{CheckId::GH, "gh"},               CheckInfo{CheckId::FDen, "fden"},
    CheckInfo{CheckId::R, "r"},                 CheckInfo{CheckId::UV, "uv"},
    CheckInfo{CheckId::X2T, "x2t"},             CheckInfo{CheckId::X2Q, "x2q"},
    CheckInfo{CheckId::CrossPath, "crosspath"}, CheckInfo{CheckId::Rec22, "rec22"},
    CheckInfo{CheckId::Rec23, "rec23"},         CheckInfo{CheckId::Classify, "classify"},
    CheckInfo{CheckId::ConjLc, "conj_lc"},      CheckInfo{CheckId::ConjRulc, "conj_rulc"},
    CheckInfo{CheckId::Bessel, "bessel"},       CheckInfo{CheckId::Monotone, "monotone"},
};

}  // namespace

std::string_view check_name(CheckId id) {
  for (const auto& c : kChecks)
    if (c.id == id) return c.name;
  return "unknown";
}

std::optional<CheckId> parse_check(std::string_view name) {
  for (const auto& c : kChecks)
    if (c.name == name) return c.id;
  return std::nullopt;
}

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> v;
    for (const auto& c : kChecks) v.push_back(c.id);
    return v;
  }();
  return ids;
}

const std::vector<CheckId>& verify_suite_checks() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> v;
    for (const auto& c : kChecks)
      if (c.id != CheckId::ConjLc && c.id != CheckId::ConjRulc && c.id != CheckId::Bessel) v.push_back(c.id);
    return v;
  }();
  return ids;
}

bool is_observational(CheckId id) { return id == CheckId::Monotone; }

void ScanReport::add(CellVerdict v) {
  CheckTally& t = tallies[v.check];
  ++t.cells;
  if (v.pass) ++t.passed;
  if (v.strict) ++t.strict;
  if (v.vacuous) ++t.vacuous;
  if (v.pass) return;
  if (is_observational(v.check))
    findings.push_back(std::move(v));
  else
    failures.push_back(std::move(v));
}

void ScanReport::add_all(std::vector<CellVerdict> vs) {
  for (auto& v : vs) add(std::move(v));
}

void ScanReport::merge(ScanReport other) {
  for (const auto& [id, t] : other.tallies) {
    CheckTally& mine = tallies[id];
    mine.cells += t.cells;
    mine.passed += t.passed;
    mine.strict += t.strict;
    mine.vacuous += t.vacuous;
  }
  for (auto& v : other.failures) failures.push_back(std::move(v));
  for (auto& v : other.findings) findings.push_back(std::move(v));
  wall_ms += other.wall_ms;
}

void ScanReport::sort() {
  auto key = [](const CellVerdict& v) { return std::tuple(static_cast<int>(v.check), v.m, v.i.value_or(-1)); };
  auto by_key = [&](const CellVerdict& a, const CellVerdict& b) { return key(a) < key(b); };
  std::stable_sort(failures.begin(), failures.end(), by_key);
  std::stable_sort(findings.begin(), findings.end(), by_key);
}

SequenceMargins sequence_margins(const std::vector<Rational>& a, long n) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) + 1)
    throw UsageError("classify_sequence: expected n+1 = " + std::to_string(n + 1) + " entries, got " +
                     std::to_string(a.size()));
  for (const auto& x : a)
    if (x < 0) throw UsageError("classify_sequence: entries must be nonnegative");
  SequenceMargins out;
  for (long k = 1; k <= n - 1; ++k) {
    const auto& prev = a[static_cast<std::size_t>(k - 1)];
    const auto& cur = a[static_cast<std::size_t>(k)];
    const auto& next = a[static_cast<std::size_t>(k + 1)];
    out.lc.emplace_back(cur * cur - next * prev);
    out.ulc.emplace_back(k * (n - k) * cur * cur - (n - k + 1) * (k + 1) * prev * next);
  }
  return out;
}

SequenceClass classify_sequence(const std::vector<Rational>& a, long n) {
  const SequenceMargins mg = sequence_margins(a, n);
  SequenceClass out;
  out.n = n;
  out.log_concave = std::all_of(mg.lc.begin(), mg.lc.end(), [](const Rational& x) { return x >= 0; });
  out.ultra_lc = std::all_of(mg.ulc.begin(), mg.ulc.end(), [](const Rational& x) { return x >= 0; });
  out.reverse_ultra_lc = std::all_of(mg.ulc.begin(), mg.ulc.end(), [](const Rational& x) { return x <= 0; });
  return out;
}

std::vector<Rational> bessel_row(long n) {
  if (n < 0) throw UsageError("bessel_row: n must be nonnegative");
  // y_n coefficient k: (n+k)! / (2^k k! (n-k)!), built as a running ratio in k.
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  Rational c = 1;
  for (long k = 0; k <= n; ++k) {
    out.push_back(c);
    c *= make_rational(Integer(n + k + 1) * (n - k), Integer(2) * (k + 1));
  }
  return out;
}

}  // namespace bmoll
