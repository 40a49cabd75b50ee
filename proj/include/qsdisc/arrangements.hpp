#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "qsdisc/circuits.hpp"
#include "qsdisc/log_real.hpp"
#include "qsdisc/weights.hpp"

namespace qsdisc {

// Complex offset alpha = real + i*imag_log/(2pi), taken modulo Z.
struct Offset {
  Rat real;          // reduced to [0,1)
  LogReal imag_log;  // the 1/(2pi) factor is implicit

  bool operator==(const Offset& o) const { return real == o.real && imag_log == o.imag_log; }
};

// Log/(2pi i) with the argument taken in [0, 2pi).
inline Offset log_br(const Rat& c) {
  if (c == 0) raise(Errc::ZeroRational, "log_br of zero");
  Offset o;
  o.real = (c > 0) ? Rat(0) : Rat(1, 2);
  o.imag_log = -log_of_rational(abs(c));
  return o;
}

// The Z-orbit of hyperplanes {y : <normal, y> in offset + Z}.
struct HyperplaneFamily {
  Vec normal;  // primitive, first nonzero entry positive
  Offset offset;

  bool operator==(const HyperplaneFamily& o) const {
    return normal == o.normal && offset == o.offset;
  }
};

struct Arrangement {
  std::vector<HyperplaneFamily> families;  // sorted by normal, no duplicates
};

inline void require_qs(const WeightSystem& ws) {
  QsVerdict qs = is_quasi_symmetric(ws);
  if (!qs.quasi_symmetric)
    raise(Errc::NotQuasiSymmetric, "weights are not quasi-symmetric: line " +
                                       vec_string(*qs.witness) + " has nonzero sum");
}

// One family per circuit normal l, at offset log_br(c(l)).
inline Arrangement discriminant_arrangement(const WeightSystem& ws) {
  require_qs(ws);
  Arrangement arr;
  for (const Vec& l : enumerate_circuit_normals(ws))
    arr.families.push_back({l, log_br(circuit_constant(ws, l))});
  return arr;
}

// Support function of the zonotope sum_j [-beta_j, 0] at l.
inline Rat support_eta(const WeightSystem& ws, const Vec& l) {
  if (l.size() != ws.rank()) raise(Errc::InvalidInput, "functional has wrong dimension");
  Int eta = 0;
  for (std::size_t j = 0; j < ws.size(); ++j) {
    Int p = -dot(l, ws.weight(j));
    if (p > 0) eta += p;
  }
  return Rat(eta);
}

namespace detail {

// Row-reduce in place; returns the pivot columns (rank = their count).
inline std::vector<std::size_t> rref(std::vector<RatVec>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rat lead = m[r][c];
    for (Rat& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rat_rank(std::vector<RatVec> m, std::size_t cols) {
  return rref(m, cols).size();
}

// Primitive integer generator of a one-dimensional rational nullspace, or
// nothing if the nullspace dimension is not one.
inline std::optional<Vec> nullspace_generator(std::vector<RatVec> m, std::size_t cols) {
  std::vector<std::size_t> pivots = rref(m, cols);
  if (pivots.size() + 1 != cols) return std::nullopt;
  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  RatVec sol(cols, Rat(0));
  sol[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = -m[r][free_col];
  Int denom = 1;
  for (const Rat& x : sol) denom = denom / gcd(denom, Int(denominator(x))) * Int(denominator(x));
  Vec v(cols);
  for (std::size_t i = 0; i < cols; ++i)
    v[i] = Int(numerator(sol[i])) * (denom / Int(denominator(sol[i])));
  return primitive(v);
}

}  // namespace detail

// Facet normals of the zonotope, derived from the line directions by
// rational elimination (deliberately not reusing the circuit enumeration).
inline std::vector<Vec> hls_facet_normals(const WeightSystem& ws) {
  require_qs(ws);
  std::size_t k = ws.rank();
  std::vector<Vec> dirs;
  for (const LineGroup& g : partition_lines(ws)) dirs.push_back(g.direction);

  std::set<Vec, LexLess> found;
  std::vector<std::size_t> pick(k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) pick[i] = i;
  while (true) {
    std::vector<RatVec> rows;
    for (std::size_t i : pick) {
      RatVec row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = Rat(dirs[i][j]);
      rows.push_back(std::move(row));
    }
    if (std::optional<Vec> l = detail::nullspace_generator(std::move(rows), k)) {
      std::vector<RatVec> incident;
      for (const Vec& d : dirs)
        if (dot(*l, d) == 0) {
          RatVec row(k);
          for (std::size_t j = 0; j < k; ++j) row[j] = Rat(d[j]);
          incident.push_back(std::move(row));
        }
      if (detail::rat_rank(std::move(incident), k) + 1 == k) found.insert(*l);
    }

    if (k == 1) break;
    std::size_t t = k - 1;
    while (t > 0 && pick[t - 1] == dirs.size() - (k - 1) + (t - 1)) --t;
    if (t == 0) break;
    ++pick[t - 1];
    for (std::size_t i = t; i < k - 1; ++i) pick[i] = pick[i - 1] + 1;
  }
  return {found.begin(), found.end()};
}

// c_F = (1/2) * sum_j max(0, <l, beta_j>), a half-integer.
inline Rat hls_offset(const WeightSystem& ws, const Vec& l) {
  if (l.size() != ws.rank()) raise(Errc::InvalidInput, "normal has wrong dimension");
  Int s = 0;
  for (std::size_t j = 0; j < ws.size(); ++j) {
    Int p = dot(l, ws.weight(j));
    if (p > 0) s += p;
  }
  return Rat(s) / 2;
}

inline Arrangement hls_arrangement(const WeightSystem& ws) {
  Arrangement arr;
  for (const Vec& l : hls_facet_normals(ws))
    arr.families.push_back({l, Offset{mod1(hls_offset(ws, l)), LogReal{}}});
  return arr;
}

// The real vector z whose applied translation is i*z; coordinate i stores
// -sum_j log|n_j| * beta_ji as a LogReal (the 1/(2pi) factor is implicit).
struct ShiftVector {
  std::vector<LogReal> coords;

  bool is_zero() const {
    for (const LogReal& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }
};

inline ShiftVector shift_vector(const WeightSystem& ws) {
  require_qs(ws);
  ShiftVector z;
  z.coords.assign(ws.rank(), LogReal{});
  for (const LineGroup& g : partition_lines(ws)) {
    for (std::size_t t = 0; t < g.members.size(); ++t) {
      LogReal ln = log_of_rational(Rat(abs(g.lengths[t])));
      if (ln.is_zero()) continue;
      Vec beta = ws.weight(g.members[t]);
      for (std::size_t i = 0; i < ws.rank(); ++i)
        z.coords[i] += ln.scaled(Int(-beta[i]));
    }
  }
  return z;
}

inline LogReal pair_shift(const Vec& l, const ShiftVector& z) {
  LogReal s;
  for (std::size_t i = 0; i < l.size(); ++i) s += z.coords[i].scaled(l[i]);
  return s;
}

struct ComparisonPair {
  Vec normal;
  Rat circuit_c;       // c(l) from the circuit side
  Offset disc_offset;  // log_br(circuit_c)
  Rat hls_cf;          // half-integer facet offset, not reduced mod Z
  LogReal shift_pairing;  // <l, z>
  bool matches;        // real parts agree mod Z and imag parts agree after shift
};

struct ComparisonReport {
  bool equal_after_shift = false;
  std::vector<ComparisonPair> pairs;
  std::optional<Vec> counterexample;  // normal of the first mismatched family
  ShiftVector shift;
};

// Pairs the two arrangements normal-by-normal and checks that they agree
// after translating the zonotope side by i*z.
inline ComparisonReport compare_arrangements(const WeightSystem& ws) {
  require_qs(ws);
  std::vector<Vec> disc_normals = enumerate_circuit_normals(ws);
  std::vector<Vec> hls_normals = hls_facet_normals(ws);
  if (disc_normals != hls_normals) {
    for (const Vec& l : disc_normals)
      if (!std::binary_search(hls_normals.begin(), hls_normals.end(), l, LexLess{}))
        raise(Errc::UnmatchedNormal,
              "circuit normal " + vec_string(l) + " has no facet counterpart");
    for (const Vec& l : hls_normals)
      if (!std::binary_search(disc_normals.begin(), disc_normals.end(), l, LexLess{}))
        raise(Errc::UnmatchedNormal,
              "facet normal " + vec_string(l) + " has no circuit counterpart");
    raise(Errc::UnmatchedNormal, "normal sets differ");  // unreachable
  }

  ComparisonReport report;
  report.shift = shift_vector(ws);
  report.equal_after_shift = true;
  for (const Vec& l : disc_normals) {
    ComparisonPair pair;
    pair.normal = l;
    pair.circuit_c = circuit_constant(ws, l);
    pair.disc_offset = log_br(pair.circuit_c);
    pair.hls_cf = hls_offset(ws, l);
    pair.shift_pairing = pair_shift(l, report.shift);
    pair.matches = pair.disc_offset.real == mod1(pair.hls_cf) &&
                   pair.disc_offset.imag_log == pair.shift_pairing;
    if (!pair.matches) {
      report.equal_after_shift = false;
      if (!report.counterexample) report.counterexample = l;
    }
    report.pairs.push_back(std::move(pair));
  }
  return report;
}

}  // namespace qsdisc
