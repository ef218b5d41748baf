#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "precalc/koszul.hpp"
#include "precalc/poly.hpp"

namespace precalc {

using GenMask = std::uint64_t;

inline std::vector<unsigned> mask_to_indices(GenMask m) {
  std::vector<unsigned> v;
  for (unsigned i = 0; m; ++i, m >>= 1)
    if (m & 1) v.push_back(i);
  return v;
}

inline GenMask indices_to_mask(const std::vector<unsigned>& idx) {
  GenMask m = 0;
  for (unsigned i : idx) {
    require(i < 64, "generator index out of range");
    GenMask bit = GenMask(1) << i;
    require(!(m & bit), "repeated generator index");
    m |= bit;
  }
  return m;
}

/// Element of a graded-commutative algebra: polynomial coefficients times
/// words in up to 64 odd (degree-1) generators.  The generator word is a
/// bitmask; coefficients with intersecting words multiply to zero, and
/// reordering signs come from merge_sign.  This one engine backs the super
/// coefficient algebra, poly-vector fields, forms, and their mixed
/// variants; callers fix the meaning of the generator ranges.
class ExtElem {
 public:
  ExtElem() : ngens_(0), nvars_(0) {}
  ExtElem(unsigned ngens, std::size_t nvars) : ngens_(ngens), nvars_(nvars) {
    require(ngens <= 64, "ExtElem: too many odd generators");
  }

  static ExtElem scalar(unsigned ngens, const Poly& p) {
    ExtElem e(ngens, p.nvars());
    e.add_term(0, p);
    return e;
  }
  static ExtElem generator(unsigned ngens, std::size_t nvars, unsigned g) {
    require(g < ngens, "ExtElem: generator out of range");
    ExtElem e(ngens, nvars);
    e.add_term(GenMask(1) << g, Poly(nvars, Rational(1)));
    return e;
  }

  unsigned ngens() const { return ngens_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<GenMask, Poly>& terms() const { return terms_; }

  void add_term(GenMask m, const Poly& p) {
    require(p.nvars() == nvars_, "ExtElem: coefficient variable count mismatch");
    if (p.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly coeff(GenMask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Poly(nvars_) : it->second;
  }

  friend ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    a.check_compat(b);
    ExtElem r = a;
    for (const auto& [m, p] : b.terms_) r.add_term(m, p);
    return r;
  }
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b) {
    a.check_compat(b);
    ExtElem r = a;
    for (const auto& [m, p] : b.terms_) r.add_term(m, -p);
    return r;
  }
  ExtElem operator-() const {
    ExtElem r(ngens_, nvars_);
    for (const auto& [m, p] : terms_) r.terms_[m] = -p;
    return r;
  }
  ExtElem& operator+=(const ExtElem& o) { *this = *this + o; return *this; }
  ExtElem& operator-=(const ExtElem& o) { *this = *this - o; return *this; }

  friend ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    a.check_compat(b);
    ExtElem r(a.ngens_, a.nvars_);
    for (const auto& [ma, pa] : a.terms_)
      for (const auto& [mb, pb] : b.terms_) {
        if (ma & mb) continue;
        int s = merge_sign(ma, mb);
        Poly c = pa * pb;
        if (s < 0) c = -c;
        r.add_term(ma | mb, c);
      }
    return r;
  }
  friend ExtElem operator*(const Rational& c, const ExtElem& e) {
    ExtElem r(e.ngens_, e.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, p] : e.terms_) r.terms_[m] = c * p;
    return r;
  }
  friend ExtElem operator*(const Poly& c, const ExtElem& e) {
    ExtElem r(e.ngens_, e.nvars_);
    for (const auto& [m, p] : e.terms_) r.add_term(m, c * p);
    return r;
  }

  friend bool operator==(const ExtElem& a, const ExtElem& b) {
    return a.ngens_ == b.ngens_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

  /// Left odd derivative with respect to generator g.
  ExtElem derive_gen(unsigned g) const {
    require(g < ngens_, "ExtElem: generator out of range");
    GenMask bit = GenMask(1) << g;
    ExtElem r(ngens_, nvars_);
    for (const auto& [m, p] : terms_) {
      if (!(m & bit)) continue;
      int s = left_derivative_sign(m, g);
      r.add_term(m & ~bit, s < 0 ? -p : p);
    }
    return r;
  }

  /// Derivative of all polynomial coefficients w.r.t. base variable j.
  ExtElem derive_var(std::size_t j) const {
    ExtElem r(ngens_, nvars_);
    for (const auto& [m, p] : terms_) r.add_term(m, p.derive(j));
    return r;
  }

  ExtElem truncated(unsigned bound) const {
    ExtElem r(ngens_, nvars_);
    for (const auto& [m, p] : terms_) r.add_term(m, p.truncated(bound));
    return r;
  }

  /// Keep only terms whose generator word has the given popcount.
  ExtElem word_length_part(unsigned k) const {
    ExtElem r(ngens_, nvars_);
    for (const auto& [m, p] : terms_)
      if (unsigned(__builtin_popcountll(m)) == k) r.add_term(m, p);
    return r;
  }

  /// Keep terms whose word restricted to [lo, hi) has popcount k.
  ExtElem range_length_part(unsigned lo, unsigned hi, unsigned k) const {
    ExtElem r(ngens_, nvars_);
    GenMask range = (hi >= 64 ? ~GenMask(0) : ((GenMask(1) << hi) - 1)) & ~((GenMask(1) << lo) - 1);
    for (const auto& [m, p] : terms_)
      if (unsigned(__builtin_popcountll(m & range)) == k) r.add_term(m, p);
    return r;
  }

  bool homogeneous_word_length(unsigned* out = nullptr) const {
    bool first = true;
    unsigned k = 0;
    for (const auto& [m, p] : terms_) {
      unsigned c = __builtin_popcountll(m);
      if (first) { k = c; first = false; }
      else if (c != k) return false;
    }
    if (out && !first) *out = k;
    return !first;
  }

  std::string str(const std::string& gen = "g", const std::string& var = "y") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, p] : terms_) {
      if (!first) os << "  +  ";
      first = false;
      os << "(" << p.str(var) << ")";
      for (unsigned i : mask_to_indices(m)) os << " " << gen << (i + 1);
    }
    return os.str();
  }

 private:
  void check_compat(const ExtElem& o) const {
    require(ngens_ == o.ngens_ && nvars_ == o.nvars_, "ExtElem: incompatible operands");
  }
  unsigned ngens_;
  std::size_t nvars_;
  std::map<GenMask, Poly> terms_;
};

}  // namespace precalc
