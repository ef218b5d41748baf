#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "precalc/error.hpp"
#include "precalc/rational.hpp"

namespace precalc {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial over Rational, keyed by exponent vectors.
/// Canonical form never stores zero coefficients.
class Poly {
 public:
  Poly() : nvars_(0) {}
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  Poly(std::size_t nvars, const Rational& c) : nvars_(nvars) {
    if (!c.is_zero()) terms_[Exponents(nvars, 0)] = c;
  }

  static Poly constant(std::size_t nvars, const Rational& c) { return Poly(nvars, c); }
  static Poly variable(std::size_t nvars, std::size_t j, unsigned power = 1) {
    require(j < nvars, "Poly: variable index out of range");
    Poly p(nvars);
    Exponents e(nvars, 0);
    e[j] = power;
    p.terms_[e] = Rational(1);
    return p;
  }
  static Poly monomial(std::size_t nvars, const Exponents& e, const Rational& c) {
    require(e.size() == nvars, "Poly: exponent vector has wrong length");
    Poly p(nvars);
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c) {
    require(e.size() == nvars_, "Poly: exponent vector has wrong length");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coeff(Exponents(nvars_, 0)); }

  unsigned total_degree() const {  // 0 for the zero polynomial
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      if (s > d) d = s;
    }
    return d;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check_compat(b);
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    a.check_compat(b);
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  Poly operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_compat(b);
    Poly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend Poly operator*(const Rational& c, const Poly& p) {
    Poly r(p.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
    return r;
  }
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const auto& x, const auto& y) {
          if (x.first != y.first) return x.first < y.first;
          return x.second < y.second;
        });
  }

  /// Partial derivative with respect to variable j.
  Poly derive(std::size_t j) const {
    require(j < nvars_, "poly_derive: variable index out of range");
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[j] == 0) continue;
      Exponents e2 = e;
      e2[j] -= 1;
      r.add_term(e2, Rational(long(e[j])) * c);
    }
    return r;
  }

  /// Discard all terms of total degree > bound.
  Poly truncated(unsigned bound) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      if (s <= bound) r.terms_[e] = c;
    }
    return r;
  }

  /// Substitute rational values for all variables.
  Rational eval(const std::vector<Rational>& vals) const {
    require(vals.size() == nvars_, "Poly::eval: wrong number of values");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < nvars_; ++i) t *= pow(vals[i], e[i]);
      acc += t;
    }
    return acc;
  }

  std::string str(const std::string& var = "y") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.str();
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        os << "*" << var << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  void check_compat(const Poly& o) const {
    require(nvars_ == o.nvars_, "Poly: mixed variable counts");
  }
  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

/// Truncation context: operations on truncated values discard terms of
/// total degree above the bound.
struct Truncation {
  unsigned max_degree = 0;
  Poly apply(const Poly& p) const { return p.truncated(max_degree); }
  Poly mul(const Poly& a, const Poly& b) const { return (a * b).truncated(max_degree); }
};

}  // namespace precalc
