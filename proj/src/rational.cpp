#include "montebound/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace montebound {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::infinite_slope: return "InfiniteSlope";
    case Errc::integer_slope: return "IntegerSlope";
    case Errc::too_few_tangles: return "TooFewTangles";
    case Errc::unnormalizable: return "Unnormalizable";
    case Errc::wrong_class: return "WrongClass";
    case Errc::non_canonical_cf: return "NonCanonicalCF";
    case Errc::not_reduced: return "NotReduced";
    case Errc::not_applicable: return "NotApplicable";
    case Errc::overflow: return "Overflow";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in slope arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in slope arithmetic");
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) throw Error(Errc::overflow, "integer overflow in slope arithmetic");
  return -a;
}

}  // namespace

Slope::Slope(std::int64_t p, std::int64_t q) {
  if (q == 0) {
    num = 1;
    den = 0;
    return;
  }
  if (q < 0) {
    p = checked_neg(p);
    q = checked_neg(q);
  }
  std::int64_t g = std::gcd(p < 0 ? checked_neg(p) : p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  num = p;
  den = q;
}

Slope Slope::operator-() const {
  if (is_infinite()) return *this;
  Slope r;
  r.num = checked_neg(num);
  r.den = den;
  return r;
}

Slope Slope::operator+(const Slope& o) const {
  if (is_infinite() || o.is_infinite()) return infinity();
  return Slope(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)), checked_mul(den, o.den));
}

Slope Slope::operator-(const Slope& o) const { return *this + (-o); }

Slope Slope::reciprocal() const {
  if (is_infinite()) return Slope(0, 1);
  return Slope(den, num);
}

Slope Slope::mod_one() const {
  if (is_infinite()) throw Error(Errc::infinite_slope, "mod_one of infinite slope");
  std::int64_t r = num % den;
  if (r < 0) r += den;
  return Slope(r, den);
}

bool Slope::operator<(const Slope& o) const {
  if (is_infinite()) return false;
  if (o.is_infinite()) return true;
  // denominators are positive and small enough that the cross product is checked anyway
  return checked_mul(num, o.den) < checked_mul(o.num, den);
}

std::string Slope::str() const {
  if (is_infinite()) return "inf";
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Slope cf_eval(const ContinuedFraction& cf) {
  Slope x(0, 1);
  bool first = true;
  for (auto it = cf.rbegin(); it != cf.rend(); ++it) {
    Slope a(*it, 1);
    x = first ? a : a + x.reciprocal();
    first = false;
  }
  return x;
}

ContinuedFraction slope_to_canonical_cf(const Slope& s) {
  if (s.is_infinite()) throw Error(Errc::infinite_slope, "no canonical expansion of the infinite slope");
  ContinuedFraction cf;
  if (s.num == 0) return cf;
  std::int64_t p = s.num;
  std::int64_t q = s.den;
  while (q != 0) {
    std::int64_t a = p / q;  // truncation toward zero keeps every quotient on the slope's sign
    cf.push_back(a);
    std::int64_t r = p - a * q;
    p = q;
    q = r;
  }
  return cf;
}

bool cf_equivalent(const ContinuedFraction& a, const ContinuedFraction& b) {
  return cf_eval(a) == cf_eval(b);
}

bool cf_is_canonical(const ContinuedFraction& cf) {
  bool pos = false;
  bool neg = false;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    if (cf[i] > 0) pos = true;
    if (cf[i] < 0) neg = true;
    if (cf[i] == 0 && i != 0) return false;  // only a_n may vanish
  }
  return !(pos && neg);
}

int cf_crossing_count(const ContinuedFraction& cf) {
  int n = 0;
  for (std::int64_t a : cf) n += static_cast<int>(a < 0 ? -a : a);
  return n;
}

}  // namespace montebound
