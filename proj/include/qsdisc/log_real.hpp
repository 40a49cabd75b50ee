#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "qsdisc/numeric.hpp"

namespace qsdisc {

// Exact real of the form q0 + sum_p q_p * log(p) over primes p with rational
// coefficients. Terms are kept sorted by prime with no zero coefficients, so
// coefficientwise comparison decides equality: {1} together with the log's of
// distinct primes is linearly independent over Q.
class LogReal {
 public:
  LogReal() = default;
  explicit LogReal(Rat rational_part) : rational_(std::move(rational_part)) {}

  static LogReal log_term(const Int& prime, const Rat& coeff) {
    LogReal r;
    if (coeff != 0) r.terms_.emplace_back(prime, coeff);
    return r;
  }

  const Rat& rational_part() const { return rational_; }
  const std::vector<std::pair<Int, Rat>>& log_terms() const { return terms_; }

  bool is_zero() const { return rational_ == 0 && terms_.empty(); }

  bool operator==(const LogReal& o) const {
    return rational_ == o.rational_ && terms_ == o.terms_;
  }

  LogReal operator-() const {
    LogReal r;
    r.rational_ = -rational_;
    r.terms_.reserve(terms_.size());
    for (const auto& [p, c] : terms_) r.terms_.emplace_back(p, -c);
    return r;
  }

  LogReal& operator+=(const LogReal& o) {
    rational_ += o.rational_;
    std::vector<std::pair<Int, Rat>> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        merged.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        merged.push_back(o.terms_[j++]);
      } else {
        Rat c = terms_[i].second + o.terms_[j].second;
        if (c != 0) merged.emplace_back(terms_[i].first, c);
        ++i;
        ++j;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }

  friend LogReal operator+(LogReal a, const LogReal& b) { return a += b; }
  friend LogReal operator-(LogReal a, const LogReal& b) { return a += -b; }

  LogReal scaled(const Rat& f) const {
    LogReal r;
    if (f == 0) return r;
    r.rational_ = rational_ * f;
    r.terms_.reserve(terms_.size());
    for (const auto& [p, c] : terms_) r.terms_.emplace_back(p, c * f);
    return r;
  }
  LogReal scaled(const Int& f) const { return scaled(Rat(f)); }

  double to_double() const {
    double x = approx(rational_);
    for (const auto& [p, c] : terms_) x += approx(c) * std::log(approx(Rat(p)));
    return x;
  }

 private:
  Rat rational_ = 0;
  std::vector<std::pair<Int, Rat>> terms_;
};

// log(q) for a positive rational q, as the exact combination of prime logs
// given by the factorization of numerator and denominator. Trial division is
// plenty here: inputs are products of small lattice lengths.
inline LogReal log_of_rational(const Rat& q) {
  if (q <= 0) raise(Errc::NonPositiveLog, "log of non-positive rational " + rat_string(q));
  LogReal out;
  auto accumulate = [&out](Int n, int sign) {
    for (Int p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      Int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out += LogReal::log_term(p, Rat(sign * e));
    }
    if (n > 1) out += LogReal::log_term(n, Rat(sign));
  };
  accumulate(numerator(q), 1);
  accumulate(denominator(q), -1);
  return out;
}

}  // namespace qsdisc
