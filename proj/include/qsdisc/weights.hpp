#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsdisc/int_matrix.hpp"

namespace qsdisc {

// A validated torus representation: the k x n integer matrix whose j-th
// column is the weight of the j-th coordinate. Columns are nonzero and the
// matrix is surjective onto Z^k (all invariant factors 1).
class WeightSystem {
 public:
  std::size_t rank() const { return q_.rows(); }       // k
  std::size_t size() const { return q_.cols(); }       // n
  const IntMatrix& matrix() const { return q_; }
  Vec weight(std::size_t j) const { return q_.column(j); }

  static WeightSystem validated(const IntMatrix& q) {
    if (q.rows() == 0 || q.cols() == 0)
      raise(Errc::InvalidInput, "weight matrix must have at least one row and one column");
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (is_zero(q.column(j)))
        raise(Errc::ZeroWeight, "weight " + std::to_string(j + 1) +
                                    " is zero (an invariant coordinate)");
    std::vector<Int> factors = invariant_factors(q);
    if (factors.size() != q.rows() || (!factors.empty() && factors.back() != 1)) {
      std::string msg = "weights do not generate the full lattice (invariant factors";
      for (const Int& d : factors) msg += " " + d.str();
      msg += "); apply reduce_to_image to rewrite in a basis of the image";
      raise(Errc::NotSurjective, msg);
    }
    WeightSystem ws;
    ws.q_ = q;
    return ws;
  }

 private:
  WeightSystem() = default;
  IntMatrix q_;
};

inline WeightSystem validate(const IntMatrix& q) { return WeightSystem::validated(q); }

struct Reduction {
  WeightSystem system;  // weights rewritten in a basis of im(Q)
  IntMatrix basis;      // old k x new k'; old weights = basis * new weights
};

// Rewrites the weights in a basis of the lattice they generate, making the
// matrix surjective. The identification returned maps new coordinates to old.
inline Reduction reduce_to_image(const IntMatrix& q) {
  if (q.rows() == 0 || q.cols() == 0)
    raise(Errc::InvalidInput, "weight matrix must have at least one row and one column");
  SmithForm snf = smith_normal_form(q);
  std::size_t r = 0;
  while (r < q.rows() && r < q.cols() && snf.S(r, r) != 0) ++r;
  if (r == 0) raise(Errc::InvalidInput, "all-zero weight matrix has no image");
  if (r == q.rows()) {
    bool all_ones = true;
    for (std::size_t i = 0; i < r; ++i)
      if (snf.S(i, i) != 1) all_ones = false;
    if (all_ones) return {validate(q), IntMatrix::identity(q.rows())};
  }

  // im(Q) is spanned by d_i * (U^-1 e_i), i < r; new coordinates are the
  // first r rows of U*Q divided by d_i (exact, since U*Q = S*V^-1).
  IntMatrix uq = snf.U * q;
  IntMatrix reduced(r, q.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) reduced(i, j) = uq(i, j) / snf.S(i, i);

  IntMatrix uinv = unimodular_inverse(snf.U);
  IntMatrix basis(q.rows(), r);
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < r; ++j) basis(i, j) = uinv(i, j) * snf.S(j, j);
  return {validate(reduced), basis};
}

// All weights lying on one line through the origin, with the signed lattice
// lengths n_j relative to the line's primitive generator.
struct LineGroup {
  Vec direction;                 // primitive, first nonzero entry positive
  std::vector<std::size_t> members;  // weight indices, 0-based
  std::vector<Int> lengths;      // weight = length * direction
  Vec line_sum;                  // sum of the member weights
};

inline std::vector<LineGroup> partition_lines(const WeightSystem& ws) {
  std::vector<LineGroup> groups;
  std::map<Vec, std::size_t, LexLess> index;
  for (std::size_t j = 0; j < ws.size(); ++j) {
    Vec w = ws.weight(j);
    Vec dir = primitive(w);
    auto [it, fresh] = index.try_emplace(dir, groups.size());
    if (fresh) {
      LineGroup g;
      g.direction = dir;
      g.line_sum = Vec(ws.rank(), Int(0));
      groups.push_back(std::move(g));
    }
    LineGroup& g = groups[it->second];
    std::size_t i = 0;
    while (dir[i] == 0) ++i;
    Int len = w[i] / dir[i];
    g.members.push_back(j);
    g.lengths.push_back(len);
    for (std::size_t t = 0; t < ws.rank(); ++t) g.line_sum[t] += w[t];
  }
  return groups;
}

inline bool is_calabi_yau(const WeightSystem& ws) {
  Vec total(ws.rank(), Int(0));
  for (std::size_t j = 0; j < ws.size(); ++j) {
    Vec w = ws.weight(j);
    for (std::size_t t = 0; t < ws.rank(); ++t) total[t] += w[t];
  }
  return is_zero(total);
}

struct QsVerdict {
  bool quasi_symmetric;
  std::optional<Vec> witness;  // direction of the first line with nonzero sum
};

inline QsVerdict is_quasi_symmetric(const WeightSystem& ws) {
  for (const LineGroup& g : partition_lines(ws))
    if (!is_zero(g.line_sum)) return {false, g.direction};
  return {true, std::nullopt};
}

// True iff the multiset of weights is invariant under negation.
inline bool is_self_dual(const WeightSystem& ws) {
  std::map<Vec, long, LexLess> count;
  for (std::size_t j = 0; j < ws.size(); ++j) ++count[ws.weight(j)];
  for (const auto& [w, c] : count) {
    auto it = count.find(negated(w));
    if (it == count.end() || it->second != c) return false;
  }
  return true;
}

struct RayData {
  IntMatrix rays;               // (n-k) x n; ray i is column i
  std::optional<Vec> cy_witness;  // pairs to 1 with every ray when present
  bool rays_distinct;
};

inline RayData ray_data(const WeightSystem& ws) {
  IntMatrix kernel = kernel_basis(ws.matrix());  // n x (n-k)
  RayData out{kernel.transposed(), std::nullopt, true};
  out.cy_witness = solve(kernel, Vec(ws.size(), Int(1)));
  std::vector<Vec> rays;
  rays.reserve(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) rays.push_back(kernel.row(i));
  std::sort(rays.begin(), rays.end(), LexLess{});
  out.rays_distinct = std::adjacent_find(rays.begin(), rays.end()) == rays.end();
  return out;
}

// The rank-1 system of pairings <l, weight> over weights off the hyperplane
// l = 0. Requires the weights on that hyperplane to span it.
inline WeightSystem restrict_to_circuit(const WeightSystem& ws, const Vec& l) {
  if (l.size() != ws.rank()) raise(Errc::InvalidInput, "normal has wrong dimension");
  if (!is_primitive(l)) raise(Errc::InvalidInput, "normal " + vec_string(l) + " is not primitive");

  std::vector<Vec> incident;
  Vec pairings(ws.size());
  for (std::size_t j = 0; j < ws.size(); ++j) {
    pairings[j] = dot(l, ws.weight(j));
    if (pairings[j] == 0) incident.push_back(ws.weight(j));
  }
  std::size_t span = incident.empty() ? 0 : rank(IntMatrix::from_columns(incident));
  if (span + 1 != ws.rank())
    raise(Errc::SpanFailure, "weights on the hyperplane of " + vec_string(l) +
                                 " span dimension " + std::to_string(span) + ", expected " +
                                 std::to_string(ws.rank() - 1));

  std::vector<Vec> cols;
  for (std::size_t j = 0; j < ws.size(); ++j)
    if (pairings[j] != 0) cols.push_back(Vec{pairings[j]});
  return validate(IntMatrix::from_columns(cols));
}

}  // namespace qsdisc
