#pragma once

#include <set>
#include <vector>

#include "qsdisc/weights.hpp"

namespace qsdisc {

// Primitive normals of the hyperplanes spanned by weights, one per +-l pair
// (first nonzero entry positive), in lexicographic order. In the
// quasi-symmetric case these are exactly the circuit normals.
inline std::vector<Vec> enumerate_circuit_normals(const WeightSystem& ws) {
  QsVerdict qs = is_quasi_symmetric(ws);
  if (!qs.quasi_symmetric)
    raise(Errc::NotQuasiSymmetric,
          "weights are not quasi-symmetric: line " + vec_string(*qs.witness) +
              " has nonzero sum");
  std::size_t k = ws.rank();
  if (k == 1) return {Vec{Int(1)}};

  std::set<Vec, LexLess> candidates;
  std::vector<std::size_t> pick(k - 1);
  for (std::size_t i = 0; i < k - 1; ++i) pick[i] = i;
  while (true) {
    std::vector<Vec> rows;
    rows.reserve(k - 1);
    for (std::size_t i : pick) rows.push_back(ws.weight(i));
    IntMatrix ker = kernel_basis(IntMatrix::from_rows(rows));
    if (ker.cols() == 1) candidates.insert(primitive(ker.column(0)));

    // next (k-1)-subset of {0..n-1}
    std::size_t t = k - 1;
    while (t > 0 && pick[t - 1] == ws.size() - (k - 1) + (t - 1)) --t;
    if (t == 0) break;
    ++pick[t - 1];
    for (std::size_t i = t; i < k - 1; ++i) pick[i] = pick[i - 1] + 1;
  }

  std::vector<Vec> out;
  for (const Vec& l : candidates) {
    std::vector<Vec> incident;
    for (std::size_t j = 0; j < ws.size(); ++j)
      if (dot(l, ws.weight(j)) == 0) incident.push_back(ws.weight(j));
    if (incident.empty() ? k == 1 : rank(IntMatrix::from_columns(incident)) + 1 == k)
      out.push_back(l);
  }
  return out;
}

// m_j = <l, beta_j> for every weight.
inline std::vector<Int> circuit_exponents(const WeightSystem& ws, const Vec& l) {
  if (l.size() != ws.rank()) raise(Errc::InvalidInput, "normal has wrong dimension");
  std::vector<Int> m(ws.size());
  for (std::size_t j = 0; j < ws.size(); ++j) m[j] = dot(l, ws.weight(j));
  return m;
}

// c = prod_{m_j != 0} m_j^{m_j}, the constant attached to a circuit normal.
inline Rat circuit_constant(const std::vector<Int>& exponents) {
  bool any = false;
  Rat c = 1;
  for (const Int& m : exponents) {
    if (m == 0) continue;
    any = true;
    c *= pow_exact(Rat(m), m);
  }
  if (!any)
    raise(Errc::AllZeroExponents, "all weights pair to zero: not a circuit normal");
  return c;
}

inline Rat circuit_constant(const WeightSystem& ws, const Vec& l) {
  return circuit_constant(circuit_exponents(ws, l));
}

// Same constant via the lattice lengths: c = prod_j n_j^{<l, beta_j>}, valid
// for quasi-symmetric weights.
inline Rat circuit_constant_via_lengths(const WeightSystem& ws, const Vec& l) {
  QsVerdict qs = is_quasi_symmetric(ws);
  if (!qs.quasi_symmetric)
    raise(Errc::NotQuasiSymmetric,
          "length formula needs quasi-symmetric weights: line " +
              vec_string(*qs.witness) + " has nonzero sum");
  if (l.size() != ws.rank()) raise(Errc::InvalidInput, "normal has wrong dimension");
  bool any = false;
  Rat c = 1;
  for (const LineGroup& g : partition_lines(ws)) {
    Int pairing = dot(l, g.direction);
    if (pairing == 0) continue;
    for (const Int& n : g.lengths) {
      c *= pow_exact(Rat(n), n * pairing);
      any = true;
    }
  }
  if (!any)
    raise(Errc::AllZeroExponents, "all weights pair to zero: not a circuit normal");
  return c;
}

}  // namespace qsdisc
