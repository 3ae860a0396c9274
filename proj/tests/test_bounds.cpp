#include <doctest.h>

#include "bmoll/bounds.hpp"
#include "oracle.hpp"

using namespace bmoll;

namespace {

// T(m,i) evaluated directly in MPFR from the unsimplified formula.
oracle::Big mpfr_T(long m, long i) {
  oracle::Big num, den, r;
  mpfr_set_si(r.get(), 4 * m + 4 * i * i + 1, MPFR_RNDN);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
  mpfr_mul_si(r.get(), r.get(), i, MPFR_RNDN);
  mpfr_set_si(num.get(), 4 * m * m + 7 * m + 3 - 2 * i * i, MPFR_RNDN);
  mpfr_add(num.get(), num.get(), r.get(), MPFR_RNDN);
  mpfr_set_si(den.get(), 2 * (m - i + 1) * (m + 1), MPFR_RNDN);
  mpfr_div(num.get(), num.get(), den.get(), MPFR_RNDN);
  return num;
}

// F(m,i) evaluated directly in MPFR, radical left in the denominator.
oracle::Big mpfr_F(long m, long i) {
  oracle::Big num, den, r;
  mpfr_set_si(r.get(), 4 * m + 4 * i * i + 5, MPFR_RNDN);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
  mpfr_mul_si(r.get(), r.get(), i, MPFR_RNDN);
  mpfr_set_si(den.get(), 4 * m * m - 2 * i * i + 9 * m + 5, MPFR_RNDN);
  mpfr_sub(den.get(), den.get(), r.get(), MPFR_RNDN);
  mpfr_mul_si(den.get(), den.get(), 2 * (m + 1), MPFR_RNDN);
  mpfr_set_si(num.get(), (m + i + 1) * (4 * m + 3) * (4 * m + 5), MPFR_RNDN);
  mpfr_div(num.get(), num.get(), den.get(), MPFR_RNDN);
  return num;
}

bool close(const oracle::Big& a, const QuadSurd& b) {
  oracle::Big diff;
  mpfr_sub(diff.get(), a.get(), oracle::eval(b).get(), MPFR_RNDN);
  return !oracle::magnitude_exceeds(diff, -60);
}

}  // namespace

TEST_CASE("bound_T examples") {
  CHECK(bound_T(2, 1) == QuadSurd::normalize(make_rational(31, 12), make_rational(1, 12), 13));
  for (long m = 1; m <= 40; ++m) {
    const QuadSurd t0 = bound_T(m, 0);
    CHECK(t0.is_rational());
    CHECK(t0.as_rational() == make_rational(4 * m + 3, 2 * (m + 1)));
    const QuadSurd tm = bound_T(m, m);
    CHECK(tm.is_rational());
    CHECK(tm.as_rational() == make_rational((2 * m + 1) * (2 * m + 3), 2 * (m + 1)));
  }
  CHECK_THROWS_AS(bound_T(0, 0), UsageError);
  CHECK_THROWS_AS(bound_T(3, 4), UsageError);
  CHECK_THROWS_AS(bound_T(3, -1), UsageError);
}

TEST_CASE("bound_T agrees with MPFR") {
  for (long m = 1; m <= 40; ++m)
    for (long i = 0; i <= m; ++i) CHECK_MESSAGE(close(mpfr_T(m, i), bound_T(m, i)), "m=" << m << " i=" << i);
}

TEST_CASE("bound_Q examples") {
  CHECK(bound_Q(2, 1) == make_rational(17, 6));
  CHECK(bound_Q(8, 4) == make_rational(319, 90));
  CHECK_THROWS_AS(bound_Q(2, 3), UsageError);
}

TEST_CASE("bound_F examples and MPFR agreement") {
  const QuadSurd f = bound_F(2, 1);
  CHECK(f == QuadSurd::normalize(make_rational(11 * 37, 156), make_rational(11, 156), 17));
  CHECK(f.to_double() == doctest::Approx(2.8997).epsilon(1e-4));
  for (long m = 2; m <= 40; ++m)
    for (long i = 1; i <= m - 1; ++i) CHECK_MESSAGE(close(mpfr_F(m, i), bound_F(m, i)), "m=" << m << " i=" << i);
  CHECK_THROWS_AS(bound_F(2, 0), UsageError);
  CHECK_THROWS_AS(bound_F(2, 2), UsageError);
}

TEST_CASE("reference_ratios") {
  const BoundSet b = reference_ratios(2, 1);
  CHECK(b.u == 4);
  CHECK(b.ulc_upper == 4);
  CHECK(b.rulc_lower == 3);
  CHECK(b.T == bound_T(2, 1));
  CHECK(b.Q == bound_Q(2, 1));
  CHECK(reference_ratios(8, 4).u == make_rational(25, 16));
  CHECK_THROWS_AS(reference_ratios(2, 2), UsageError);
}

TEST_CASE("bound invariants") {
  for (long m = 2; m <= 60; ++m) {
    for (long i = 1; i <= m - 1; ++i) {
      CHECK((cmp(QuadSurd(bound_Q(m, i)), bound_T(m, i)) == std::strong_ordering::less));
      CHECK(ulc_upper(m, i) == u_ref(m, i));
      CHECK(rulc_lower(m, i) > make_rational(i + 1, i));
      CHECK(rulc_lower(m, i) < ulc_upper(m, i));
    }
  }
}
