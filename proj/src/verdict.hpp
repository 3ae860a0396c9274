#pragma once

// Helpers shared by the verify translation units.

#include <optional>

#include "bmoll/verify.hpp"

namespace bmoll::detail {

enum class Rel { Less, Greater, Equal, GreaterEq, LessEq };

/// Verdict for `lhs rel rhs`. Operands must share a radicand (or be rational).
CellVerdict compare(CheckId id, long m, std::optional<long> i, const QuadSurd& lhs, Rel rel, const QuadSurd& rhs,
                    int digits);

/// Verdict from a precomputed slack sign (> 0 means satisfied strictly).
CellVerdict from_slack(CheckId id, long m, std::optional<long> i, int slack, bool equality);

}  // namespace bmoll::detail
