#pragma once

// Exact reference quantities bracketing d_i(m+1)/d_i(m) and c_i(m).

#include "bmoll/exactnum.hpp"

namespace bmoll {

/// Upper bound on d_i(m+1)/d_i(m):
///   T(m,i) = (4m^2+7m+3 - 2i^2 + i*sqrt(4m+4i^2+1)) / (2(m-i+1)(m+1)),
/// for m >= 1, 0 <= i <= m. Folds to a rational at i = 0 and i = m.
QuadSurd bound_T(long m, long i);

/// Kauers-Paule lower bound Q(m,i) = (4m^2+7m+i+3) / (2(m+1-i)(m+1)), 0 <= i <= m.
Rational bound_Q(long m, long i);

/// Auxiliary bound
///   F(m,i) = (m+i+1)(4m+3)(4m+5) / (2(m+1)(4m^2-2i^2+9m+5 - i*sqrt(4m+4i^2+5)))
/// held with the radical moved to the numerator. 1 <= i <= m-1.
QuadSurd bound_F(long m, long i);

/// Reference values for c_i(m), 1 <= i <= m-1.
struct BoundSet {
  long m = 0;
  long i = 0;
  QuadSurd T;
  Rational Q;
  QuadSurd F;
  Rational u;           // (1+1/i)(1+1/(m-i))
  Rational ulc_upper;   // (m-i+1)(i+1)/((m-i)i)
  Rational rulc_lower;  // ulc_upper * (m+i)/(m+i+1)
};

BoundSet reference_ratios(long m, long i);

Rational ulc_upper(long m, long i);
Rational rulc_lower(long m, long i);
Rational u_ref(long m, long i);

}  // namespace bmoll
