#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "qsdisc/errors.hpp"

namespace qsdisc {

// All arithmetic in the library is exact. Floating point shows up only in
// optional human-readable annotations.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Int>;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec negated(Vec v) {
  for (Int& x : v) x = -x;
  return v;
}

inline bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct LexLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

// b^e for integer e of either sign; b must be nonzero when e < 0.
inline Rat pow_exact(const Rat& base, const Int& exp) {
  if (exp == 0) return Rat(1);
  if (base == 0) {
    if (exp < 0) raise(Errc::ZeroRational, "0 raised to a negative power");
    return Rat(0);
  }
  Int e = abs(exp);
  unsigned long ue = e.convert_to<unsigned long>();
  Int num = boost::multiprecision::pow(numerator(base), ue);
  Int den = boost::multiprecision::pow(denominator(base), ue);
  if (exp > 0) return Rat(num, den);
  // the two-argument constructor rejects a negative second argument
  return num < 0 ? Rat(-den, -num) : Rat(den, num);
}

// Canonical textual form "p/q", q > 0, reduced.
inline std::string rat_string(const Rat& q) {
  std::ostringstream os;
  os << numerator(q) << "/" << denominator(q);
  return os.str();
}

inline Rat parse_rat(const std::string& s) {
  auto bad = [&] { raise(Errc::InvalidInput, "malformed rational '" + s + "'"); };
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
  }
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) bad();
  Int d(den);
  if (d == 0) bad();
  Int n(num);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rat(n, d);
}

inline double approx(const Rat& q) { return q.convert_to<double>(); }

// Floor of a rational (denominator is positive by canonicalization).
inline Int floor_rat(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int r = ((n % d) + d) % d;
  return (n - r) / d;
}

// Representative of q mod 1 in [0, 1).
inline Rat mod1(const Rat& q) { return q - Rat(floor_rat(q)); }

inline std::string vec_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

using RatVec = std::vector<Rat>;

inline Rat dot(const RatVec& a, const Vec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

}  // namespace qsdisc
