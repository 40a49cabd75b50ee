#pragma once

#include <optional>
#include <vector>

#include "qsdisc/weights.hpp"

namespace qsdisc {

// One grouped factor of the uniformization map: coordinate i of the map
// picks up consts[i] * <lambda, direction>^{sigma[i]} from this line.
struct HornLine {
  Vec direction;   // primitive line generator
  RatVec consts;   // consts[i] = prod_{j in line} n_j^{beta_ji}
  Vec sigma;       // sigma[i]  = sum_{j in line} beta_ji
};

// The map [lambda] -> (prod_j <lambda, beta_j>^{beta_ji})_i in factored
// per-line form: each line's linear form appears exactly once.
struct HornForm {
  std::size_t rank = 0;
  std::vector<HornLine> lines;
};

inline HornForm horn_decompose(const WeightSystem& ws) {
  if (!is_calabi_yau(ws))
    raise(Errc::NotCalabiYau,
          "the uniformization map needs Calabi-Yau weights (total sum zero)");
  HornForm form;
  form.rank = ws.rank();
  for (const LineGroup& g : partition_lines(ws)) {
    HornLine hl;
    hl.direction = g.direction;
    hl.consts.assign(ws.rank(), Rat(1));
    hl.sigma = g.line_sum;
    Rat c = 1;  // prod n_j^{n_j}; then consts[i] = c^{direction[i]}
    for (const Int& n : g.lengths) c *= pow_exact(Rat(n), n);
    for (std::size_t i = 0; i < ws.rank(); ++i)
      hl.consts[i] = pow_exact(c, g.direction[i]);
    form.lines.push_back(std::move(hl));
  }
  return form;
}

inline RatVec horn_evaluate(const WeightSystem& ws, const RatVec& lambda) {
  if (lambda.size() != ws.rank()) raise(Errc::InvalidInput, "lambda has wrong dimension");
  HornForm form = horn_decompose(ws);
  RatVec value(form.rank, Rat(1));
  for (const HornLine& hl : form.lines) {
    Rat t = dot(lambda, hl.direction);
    if (t == 0)
      raise(Errc::PoleOrZero, "lambda lies on the hyperplane of line " +
                                  vec_string(hl.direction) + "; value undefined");
    for (std::size_t i = 0; i < form.rank; ++i)
      value[i] *= hl.consts[i] * pow_exact(t, hl.sigma[i]);
  }
  return value;
}

// Lemma Main: the map is constant iff every sigma vanishes, in which case the
// value is the coordinatewise product of the line constants.
inline std::optional<RatVec> horn_is_constant(const WeightSystem& ws) {
  HornForm form = horn_decompose(ws);
  for (const HornLine& hl : form.lines)
    if (!is_zero(hl.sigma)) return std::nullopt;
  RatVec value(form.rank, Rat(1));
  for (const HornLine& hl : form.lines)
    for (std::size_t i = 0; i < form.rank; ++i) value[i] *= hl.consts[i];
  return value;
}

// True iff every line not contained in H_l has weight sum zero — the
// criterion for the image to land in a hyperplane-type component.
inline bool is_component_hyperplane(const WeightSystem& ws, const Vec& l) {
  if (l.size() != ws.rank()) raise(Errc::InvalidInput, "normal has wrong dimension");
  if (!is_primitive(l)) raise(Errc::InvalidInput, "normal " + vec_string(l) + " is not primitive");
  for (const LineGroup& g : partition_lines(ws))
    if (dot(l, g.direction) != 0 && !is_zero(g.line_sum)) return false;
  return true;
}

}  // namespace qsdisc
