#pragma once

#include <gmpxx.h>

#include <string>

#include "precalc/error.hpp"

namespace precalc {

/// Exact rational scalar. Thin value wrapper over GMP's mpq_class that
/// keeps every value canonical (gcd(num,den)=1, den>0).
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(long n, long d) : q_(n, d) {
    require(d != 0, "Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw error("Rational: cannot parse '" + s + "'");
    require(q.get_den() != 0, "Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
  }

  bool is_zero() const { return q_ == 0; }
  int sgn() const { return ::sgn(q_); }

  std::string str() const { return q_.get_str(); }

  const mpq_class& raw() const { return q_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    require(b.q_ != 0, "Rational: division by zero");
    return wrap(a.q_ / b.q_);
  }
  Rational operator-() const { return wrap(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

 private:
  static Rational wrap(const mpq_class& q) {
    Rational r;
    r.q_ = q;  // arithmetic on canonical operands stays canonical
    return r;
  }
  mpq_class q_;
};

inline Rational pow(const Rational& a, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= a;
  return r;
}

}  // namespace precalc
