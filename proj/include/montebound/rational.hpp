#ifndef MONTEBOUND_RATIONAL_HPP
#define MONTEBOUND_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "montebound/error.hpp"

namespace montebound {

// Extended rational slope p/q in lowest terms.  den >= 0, and (1, 0) is the
// unique representation of the point at infinity.  Arithmetic is checked
// 64-bit; anything that would wrap throws Errc::overflow.
struct Slope {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Slope() = default;
  Slope(std::int64_t p, std::int64_t q);  // normalizes sign and gcd

  static Slope infinity() { return Slope(1, 0, unchecked{}); }

  bool is_infinite() const { return den == 0; }
  bool is_integer() const { return den == 1; }

  Slope operator-() const;
  Slope operator+(const Slope& o) const;
  Slope operator-(const Slope& o) const;
  Slope reciprocal() const;

  // value in [0, 1): this minus floor(this); requires a finite slope.
  Slope mod_one() const;

  bool operator==(const Slope& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Slope& o) const { return !(*this == o); }
  // order with infinity greater than every finite slope; used for canonical forms
  bool operator<(const Slope& o) const;

  std::string str() const;

private:
  struct unchecked {};
  Slope(std::int64_t p, std::int64_t q, unchecked) : num(p), den(q) {}
};

// Continued fraction [a_n, ..., a_1]; entries listed with a_n first.  a_n is a
// horizontal band of crossings in the tangle it describes, so a canonical
// expansion of a slope with |s| < 1 starts with a_n = 0.
using ContinuedFraction = std::vector<std::int64_t>;

// Right-to-left fold a + 1/x in exact rational arithmetic, with 1/0 = inf,
// a + inf = inf and 1/inf = 0.  The empty fraction evaluates to 0.
Slope cf_eval(const ContinuedFraction& cf);

// Sign-uniform expansion by repeated truncation toward zero: all entries carry
// the sign of the slope, a_i != 0 for i < n, and a_n = 0 exactly when |s| < 1.
// Throws Errc::infinite_slope on the infinite slope.
ContinuedFraction slope_to_canonical_cf(const Slope& s);

// Tangle equivalence: true iff both fractions evaluate to the same slope.
bool cf_equivalent(const ContinuedFraction& a, const ContinuedFraction& b);

// True when cf is sign-uniform with no interior zeros (the form
// slope_to_canonical_cf produces, plus the empty fraction for slope 0).
bool cf_is_canonical(const ContinuedFraction& cf);

int cf_crossing_count(const ContinuedFraction& cf);

}  // namespace montebound

#endif
