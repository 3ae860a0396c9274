#pragma once

// Exact numeric substrate: arbitrary-precision rationals and quadratic surds
// p + q*sqrt(D) with exact sign and ordering.

#include <compare>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace bmoll {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for values outside the real quadratic-surd domain (negative radicand).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when two irrational surds with different radicands are combined or compared.
class MixedRadicandError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised for calls outside an operation's documented index range.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical num/den. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

/// Splits n > 0 into n = square^2 * core with core squarefree.
struct SquareSplit {
  Integer square;
  Integer core;
};
SquareSplit split_square(const Integer& n);

/// Exact real number p + q*sqrt(D).
///
/// Always held in canonical form: D is squarefree and > 1, or D == 0 and
/// q == 0 (a pure rational). Values are immutable once built.
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(const Rational& r) : p_(r) {}  // NOLINT(google-explicit-constructor)
  QuadSurd(const Integer& z) : p_(z) {}   // NOLINT(google-explicit-constructor)
  QuadSurd(long v) : p_(v) {}             // NOLINT(google-explicit-constructor)

  /// Canonicalizes p + q*sqrt(D): square factors of D move into q and a
  /// perfect-square radicand folds into p. Throws DomainError when D < 0.
  static QuadSurd normalize(const Rational& p, const Rational& q, const Integer& D);

  const Rational& rational_part() const { return p_; }
  const Rational& radical_coeff() const { return q_; }
  const Integer& radicand() const { return d_; }

  bool is_rational() const { return d_ == 0; }

  /// Only valid when is_rational().
  const Rational& as_rational() const;

  /// -1, 0 or +1, decided without floating point.
  int sign() const;

  QuadSurd conjugate() const;

  QuadSurd operator-() const;
  friend QuadSurd operator+(const QuadSurd& a, const QuadSurd& b);
  friend QuadSurd operator-(const QuadSurd& a, const QuadSurd& b);
  friend QuadSurd operator*(const QuadSurd& a, const QuadSurd& b);
  /// Division by a nonzero rational only.
  friend QuadSurd operator/(const QuadSurd& a, const Rational& b);

  friend bool operator==(const QuadSurd& a, const QuadSurd& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_;
  }

  /// e.g. "31/12 + 1/12*sqrt(13)"; plain rational text when D == 0.
  std::string to_string() const;

  /// Approximation for reports and oracles; never used for verdicts.
  double to_double() const;

 private:
  Rational p_;
  Rational q_;
  Integer d_;
};

inline int surd_sign(const QuadSurd& x) { return x.sign(); }

/// Exact ordering. Throws MixedRadicandError when both operands are
/// irrational with different radicands.
std::strong_ordering cmp(const QuadSurd& x, const QuadSurd& y);

inline int sgn(const Rational& r) { return ::sgn(r); }
inline int sgn(const Integer& z) { return ::sgn(z); }

/// Decimal rendering with round-half-even at `digits` places after the point.
std::string to_decimal(const Rational& x, int digits);
std::string to_decimal(const QuadSurd& x, int digits);

/// "num/den", or just "num" for integers.
std::string exact_string(const Rational& x);

}  // namespace bmoll
