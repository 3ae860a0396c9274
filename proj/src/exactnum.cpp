#include "bmoll/exactnum.hpp"

#include <gmp.h>

#include <string>
#include <utility>

namespace bmoll {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of a negative integer");
  if (n == 0) return 0;
  // Newton iteration from above; converges monotonically to floor(sqrt(n)).
  Integer x = Integer(1) << ((mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2 + 1);
  for (;;) {
    Integer y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  return r * r == n;
}

SquareSplit split_square(const Integer& n) {
  if (n <= 0) throw DomainError("split_square needs a positive integer");
  SquareSplit out{1, 1};
  Integer rest = n;
  auto strip = [&](unsigned long p) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned long k = 0; k < e / 2; ++k) out.square *= p;
    if (e % 2) out.core *= p;
  };
  // Once every prime p with p^3 <= rest is removed, rest has at most two
  // prime factors: it is 1, a prime, a product of two primes, or a square.
  for (unsigned long p = 2; Integer(p) * p * p <= rest; p += (p == 2 ? 1 : 2)) strip(p);
  if (rest > 1) {
    Integer r = isqrt(rest);
    if (r * r == rest)
      out.square *= r;
    else
      out.core *= rest;
  }
  return out;
}

QuadSurd QuadSurd::normalize(const Rational& p, const Rational& q, const Integer& D) {
  if (D < 0) throw DomainError("negative radicand " + D.get_str());
  QuadSurd out;
  out.p_ = p;
  if (q == 0 || D == 0) return out;
  SquareSplit s = split_square(D);
  if (s.core == 1) {
    out.p_ = Rational(p + q * s.square);
    return out;
  }
  out.q_ = q * s.square;
  out.d_ = s.core;
  return out;
}

const Rational& QuadSurd::as_rational() const {
  if (!is_rational()) throw DomainError("surd " + to_string() + " is irrational");
  return p_;
}

int QuadSurd::sign() const {
  const int sp = ::sgn(p_);
  const int sq = ::sgn(q_);
  if (sq == 0 || d_ == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: the larger of p^2 and q^2*D wins.
  const Rational lhs = p_ * p_;
  const Rational rhs = q_ * q_ * d_;
  const int c = ::cmp(lhs, rhs);
  if (c > 0) return sp;
  if (c < 0) return sq;
  return 0;
}

QuadSurd QuadSurd::conjugate() const {
  QuadSurd out = *this;
  out.q_ = -q_;
  return out;
}

QuadSurd QuadSurd::operator-() const {
  QuadSurd out = *this;
  out.p_ = -p_;
  out.q_ = -q_;
  return out;
}

namespace {

const Integer& common_radicand(const QuadSurd& a, const QuadSurd& b) {
  if (a.is_rational()) return b.radicand();
  if (b.is_rational() || a.radicand() == b.radicand()) return a.radicand();
  throw MixedRadicandError("radicands " + a.radicand().get_str() + " and " +
                           b.radicand().get_str() + " differ");
}

}  // namespace

QuadSurd operator+(const QuadSurd& a, const QuadSurd& b) {
  const Integer d = common_radicand(a, b);
  return QuadSurd::normalize(a.p_ + b.p_, a.q_ + b.q_, d);
}

QuadSurd operator-(const QuadSurd& a, const QuadSurd& b) {
  const Integer d = common_radicand(a, b);
  return QuadSurd::normalize(a.p_ - b.p_, a.q_ - b.q_, d);
}

QuadSurd operator*(const QuadSurd& a, const QuadSurd& b) {
  const Integer d = common_radicand(a, b);
  Rational p = a.p_ * b.p_ + a.q_ * b.q_ * d;
  Rational q = a.p_ * b.q_ + a.q_ * b.p_;
  return QuadSurd::normalize(p, q, d);
}

QuadSurd operator/(const QuadSurd& a, const Rational& b) {
  if (b == 0) throw DomainError("division of a surd by zero");
  QuadSurd out = a;
  out.p_ /= b;
  out.q_ /= b;
  return out;
}

std::string exact_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string QuadSurd::to_string() const {
  if (is_rational()) return exact_string(p_);
  std::string out;
  if (p_ != 0) out = exact_string(p_) + (q_ < 0 ? " - " : " + ");
  else if (q_ < 0) out = "-";
  out += exact_string(Rational(abs(q_))) + "*sqrt(" + d_.get_str() + ")";
  return out;
}

double QuadSurd::to_double() const {
  if (is_rational()) return p_.get_d();
  mpf_class p(p_, 256), q(q_, 256), d(d_, 256);
  return mpf_class(p + q * sqrt(d)).get_d();
}

std::strong_ordering cmp(const QuadSurd& x, const QuadSurd& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

Integer pow10(int digits) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return out;
}

// floor(y) for a surd, decided exactly after a high-precision first guess.
Integer floor_of(const QuadSurd& y) {
  if (y.is_rational()) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), y.as_rational().get_num_mpz_t(), y.as_rational().get_den_mpz_t());
    return out;
  }
  const mpf_class p(y.rational_part(), 512), q(y.radical_coeff(), 512), d(y.radicand(), 512);
  const mpf_class approx = floor(mpf_class(p + q * sqrt(d), 512));
  Integer n(approx);
  while ((y - QuadSurd(n)).sign() < 0) --n;
  while ((y - QuadSurd(Integer(n + 1))).sign() >= 0) ++n;
  return n;
}

std::string place_point(const Integer& scaled, int digits) {
  const bool neg = scaled < 0;
  std::string s = Integer(abs(scaled)).get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  return (neg && scaled != 0 ? "-" : "") + s;
}

}  // namespace

std::string to_decimal(const QuadSurd& x, int digits) {
  if (digits < 0) throw UsageError("negative digit count");
  const QuadSurd y = x * QuadSurd(pow10(digits));
  Integer n = floor_of(y);
  const int half = (y - QuadSurd(make_rational(Integer(2 * n + 1), Integer(2)))).sign();
  if (half > 0 || (half == 0 && mpz_odd_p(n.get_mpz_t()))) ++n;
  return place_point(n, digits);
}

std::string to_decimal(const Rational& x, int digits) { return to_decimal(QuadSurd(x), digits); }

}  // namespace bmoll
