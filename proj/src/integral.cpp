#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bmoll/coeffs.hpp"

namespace bmoll {

long double evaluate_row(const CoeffRow& row, long double a) {
  long double acc = 0;
  for (auto it = row.coeffs.rbegin(); it != row.coeffs.rend(); ++it) acc = acc * a + static_cast<long double>(it->get_d());
  return acc;
}

IntegralResult integral_residual(long m, double a, const QuadratureConfig& config) {
  if (m < 0) throw UsageError("integral_residual: m must be nonnegative");
  if (!(a > -1.0)) throw UsageError("integral_residual: need a > -1");

  using boost::math::quadrature::gauss_kronrod;
  const long double al = a;
  const long double power = static_cast<long double>(m + 1);
  auto integrand = [&](long double t) -> long double {
    if (t >= 1) return 0;
    const long double s = 1 - t;
    const long double x = t / s;
    const long double x2 = x * x;
    return std::pow(x2 * x2 + 2 * al * x2 + 1, -power) / (s * s);
  };

  IntegralResult out;
  long double err = 0;
  const long double value =
      gauss_kronrod<long double, 15>::integrate(integrand, 0.0L, 1.0L, config.max_depth, config.rel_tol, &err);

  const CoeffRow row = closed_form_row(m);
  const long double closed = std::numbers::pi_v<long double> * evaluate_row(row, al) /
                             (std::pow(2.0L, m + 1.5L) * std::pow(al + 1, m + 0.5L));

  out.quadrature = static_cast<double>(value);
  out.closed_form = static_cast<double>(closed);
  out.error_estimate = static_cast<double>(err);
  out.relative_residual = static_cast<double>(std::fabs(value - closed) / std::fabs(closed));
  out.converged = err <= std::max<long double>(config.abs_tol, config.rel_tol * std::fabs(value));
  return out;
}

}  // namespace bmoll
