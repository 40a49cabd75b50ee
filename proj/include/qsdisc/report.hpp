#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsdisc/arrangements.hpp"
#include "qsdisc/circuits.hpp"
#include "qsdisc/horn.hpp"
#include "qsdisc/weights.hpp"

// Machine-readable reports. nlohmann::json keeps object keys sorted, so a
// report built from the same input serializes byte-identically.

namespace qsdisc {

using Json = nlohmann::json;

struct InputDocument {
  std::vector<Vec> weights;  // columns of the weight matrix
  std::optional<std::string> name;
};

inline InputDocument parse_input(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    raise(Errc::InvalidInput, std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("weights"))
    raise(Errc::InvalidInput, "input must be an object with a \"weights\" array");
  const Json& ws = doc["weights"];
  if (!ws.is_array() || ws.empty())
    raise(Errc::InvalidInput, "\"weights\" must be a non-empty array of integer vectors");
  InputDocument out;
  for (const Json& w : ws) {
    if (!w.is_array() || w.empty())
      raise(Errc::InvalidInput, "each weight must be a non-empty array of integers");
    Vec v;
    for (const Json& x : w) {
      if (!x.is_number_integer())
        raise(Errc::InvalidInput, "weight entries must be integers");
      v.emplace_back(x.get<std::int64_t>());
    }
    out.weights.push_back(std::move(v));
  }
  for (const Vec& v : out.weights)
    if (v.size() != out.weights.front().size())
      raise(Errc::InvalidInput, "weight vectors must all have the same length");
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) raise(Errc::InvalidInput, "\"name\" must be a string");
    out.name = doc["name"].get<std::string>();
  }
  return out;
}

inline IntMatrix input_matrix(const InputDocument& doc) {
  return IntMatrix::from_columns(doc.weights);
}

// ---- JSON building blocks ------------------------------------------------

inline Json json_int(const Int& x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x < lo || x > hi) return x.str();  // fall back to exact text
  return x.convert_to<std::int64_t>();
}

inline Json json_vec(const Vec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

inline Json json_rat(const Rat& q) { return rat_string(q); }

inline Json json_rat_vec(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& q : v) a.push_back(json_rat(q));
  return a;
}

inline Json json_log_real(const LogReal& x) {
  // list of (prime, coefficient) pairs; all offsets in this artifact are
  // pure prime-log combinations
  if (x.rational_part() != 0)
    raise(Errc::InvalidInput, "offset with rational log part cannot be serialized");
  Json a = Json::array();
  for (const auto& [p, c] : x.log_terms()) a.push_back(Json::array({json_int(p), json_rat(c)}));
  return a;
}

inline Json json_offset(const Offset& o, bool with_approx) {
  Json j;
  j["real"] = json_rat(o.real);
  j["imagLog"] = json_log_real(o.imag_log);
  if (with_approx) {
    j["approx"]["real"] = approx(o.real);
    j["approx"]["imag"] = o.imag_log.to_double() / (8 * std::atan(1.0));
  }
  return j;
}

inline Json input_echo(const InputDocument& doc) {
  Json j;
  Json w = Json::array();
  for (const Vec& v : doc.weights) w.push_back(json_vec(v));
  j["weights"] = std::move(w);
  if (doc.name) j["name"] = *doc.name;
  return j;
}

// ---- per-subcommand reports ----------------------------------------------

struct ReportContext {
  InputDocument doc;
  WeightSystem ws;
  std::optional<Reduction> reduction;  // set when --reduce rewrote the input
  bool approx = false;
};

inline Json report_envelope(const std::string& command, const ReportContext& ctx) {
  Json j;
  j["command"] = command;
  j["input"] = input_echo(ctx.doc);
  if (ctx.reduction) {
    Json r;
    Json basis = Json::array();
    for (std::size_t i = 0; i < ctx.reduction->basis.rows(); ++i)
      basis.push_back(json_vec(ctx.reduction->basis.row(i)));
    r["basis"] = std::move(basis);
    Json cols = Json::array();
    for (std::size_t jcol = 0; jcol < ctx.ws.size(); ++jcol)
      cols.push_back(json_vec(ctx.ws.weight(jcol)));
    r["weights"] = std::move(cols);
    j["reduced"] = std::move(r);
  }
  return j;
}

inline Json check_report(const ReportContext& ctx) {
  Json j = report_envelope("check", ctx);
  j["rank"] = ctx.ws.rank();
  j["size"] = ctx.ws.size();
  j["calabiYau"] = is_calabi_yau(ctx.ws);
  QsVerdict qs = is_quasi_symmetric(ctx.ws);
  j["quasiSymmetric"] = qs.quasi_symmetric;
  if (!qs.quasi_symmetric) j["qsWitness"] = json_vec(*qs.witness);
  j["selfDual"] = is_self_dual(ctx.ws);
  RayData rd = ray_data(ctx.ws);
  Json rays = Json::array();  // ray per weight: the columns of the ray matrix
  for (std::size_t c = 0; c < rd.rays.cols(); ++c) rays.push_back(json_vec(rd.rays.column(c)));
  j["rays"] = std::move(rays);
  if (rd.cy_witness) j["cyWitness"] = json_vec(*rd.cy_witness);
  Json warnings = Json::array();
  if (!rd.rays_distinct) warnings.push_back("duplicate rays");
  j["warnings"] = std::move(warnings);
  return j;
}

inline Json lines_report(const ReportContext& ctx) {
  Json j = report_envelope("lines", ctx);
  Json lines = Json::array();
  for (const LineGroup& g : partition_lines(ctx.ws)) {
    Json e;
    e["direction"] = json_vec(g.direction);
    Json members = Json::array();
    for (std::size_t m : g.members) members.push_back(m + 1);  // 1-based for humans
    e["members"] = std::move(members);
    e["lengths"] = json_vec(g.lengths);
    e["sum"] = json_vec(g.line_sum);
    lines.push_back(std::move(e));
  }
  j["lines"] = std::move(lines);
  return j;
}

inline Json circuits_report(const ReportContext& ctx) {
  Json j = report_envelope("circuits", ctx);
  Json list = Json::array();
  for (const Vec& l : enumerate_circuit_normals(ctx.ws)) {
    Json e;
    e["normal"] = json_vec(l);
    e["exponents"] = json_vec(circuit_exponents(ctx.ws, l));
    Rat c = circuit_constant(ctx.ws, l);
    e["constant"] = json_rat(c);
    if (ctx.approx) e["approx"] = approx(c);
    list.push_back(std::move(e));
  }
  j["circuits"] = std::move(list);
  return j;
}

inline Json horn_report(const ReportContext& ctx, const std::optional<RatVec>& eval_at) {
  Json j = report_envelope("horn", ctx);
  HornForm form = horn_decompose(ctx.ws);
  Json lines = Json::array();
  for (const HornLine& hl : form.lines) {
    Json e;
    e["direction"] = json_vec(hl.direction);
    e["constants"] = json_rat_vec(hl.consts);
    e["sigma"] = json_vec(hl.sigma);
    lines.push_back(std::move(e));
  }
  j["lines"] = std::move(lines);
  std::optional<RatVec> c = horn_is_constant(ctx.ws);
  j["isConstant"] = c.has_value();
  if (c) j["constant"] = json_rat_vec(*c);
  if (eval_at) {
    j["evaluatedAt"] = json_rat_vec(*eval_at);
    j["value"] = json_rat_vec(horn_evaluate(ctx.ws, *eval_at));
  }
  return j;
}

inline Json arrangement_json(const Arrangement& arr, bool with_approx) {
  Json fams = Json::array();
  for (const HyperplaneFamily& f : arr.families) {
    Json e;
    e["normal"] = json_vec(f.normal);
    e["offset"] = json_offset(f.offset, with_approx);
    fams.push_back(std::move(e));
  }
  return fams;
}

inline Json discriminant_report(const ReportContext& ctx) {
  Json j = report_envelope("discriminant", ctx);
  j["families"] = arrangement_json(discriminant_arrangement(ctx.ws), ctx.approx);
  return j;
}

inline Json hls_report(const ReportContext& ctx) {
  Json j = report_envelope("hls", ctx);
  Arrangement arr = hls_arrangement(ctx.ws);
  Json fams = arrangement_json(arr, ctx.approx);
  for (std::size_t i = 0; i < arr.families.size(); ++i) {
    const Vec& l = arr.families[i].normal;
    fams[i]["cF"] = json_rat(hls_offset(ctx.ws, l));
    fams[i]["eta"] = json_rat(support_eta(ctx.ws, l));
  }
  j["families"] = std::move(fams);
  return j;
}

inline Json compare_report(const ReportContext& ctx, bool* equal_out = nullptr) {
  Json j = report_envelope("compare", ctx);
  ComparisonReport rep = compare_arrangements(ctx.ws);
  if (equal_out) *equal_out = rep.equal_after_shift;
  j["verdict"] = rep.equal_after_shift ? "EqualAfterShift" : "Mismatch";
  Json shift = Json::array();
  for (const LogReal& c : rep.shift.coords) shift.push_back(json_log_real(c));
  j["shift"] = std::move(shift);
  if (ctx.approx) {
    Json a = Json::array();
    for (const LogReal& c : rep.shift.coords)
      a.push_back(c.to_double() / (8 * std::atan(1.0)));
    j["shiftApprox"] = std::move(a);
  }
  Json pairs = Json::array();
  for (const ComparisonPair& p : rep.pairs) {
    Json e;
    e["normal"] = json_vec(p.normal);
    e["circuitConstant"] = json_rat(p.circuit_c);
    e["discOffset"] = json_offset(p.disc_offset, ctx.approx);
    e["cF"] = json_rat(p.hls_cf);
    e["shiftPairing"] = json_log_real(p.shift_pairing);
    e["matches"] = p.matches;
    pairs.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);
  if (rep.counterexample) j["counterexample"] = json_vec(*rep.counterexample);
  return j;
}

inline std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

// ---- human-readable rendering ---------------------------------------------

inline std::string render_log_real_text(const Json& pairs) {
  if (pairs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Json& pc : pairs) {
    std::string coeff = pc[1].get<std::string>();
    if (!first) os << " + ";
    os << coeff << "*log(" << pc[0] << ")";
    first = false;
  }
  os << " / 2pi";
  return os.str();
}

inline std::string render_offset_text(const Json& o) {
  std::ostringstream os;
  os << o["real"].get<std::string>();
  std::string im = render_log_real_text(o["imagLog"]);
  if (im != "0") os << " + i*(" << im << ")";
  return os.str();
}

inline std::string render_vec_text(const Json& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

inline std::string render_text(const Json& j) {
  std::ostringstream os;
  const std::string cmd = j["command"].get<std::string>();
  if (j["input"].contains("name")) os << j["input"]["name"].get<std::string>() << "\n";
  if (j.contains("reduced")) os << "note: weights were rewritten in a basis of their image\n";
  if (cmd == "check") {
    os << "rank " << j["rank"] << ", " << j["size"] << " weights\n";
    os << "calabi-yau:      " << (j["calabiYau"].get<bool>() ? "yes" : "no") << "\n";
    os << "quasi-symmetric: " << (j["quasiSymmetric"].get<bool>() ? "yes" : "no");
    if (j.contains("qsWitness"))
      os << "  (line " << render_vec_text(j["qsWitness"]) << " has nonzero sum)";
    os << "\n";
    os << "self-dual:       " << (j["selfDual"].get<bool>() ? "yes" : "no") << "\n";
    for (const Json& w : j["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
  } else if (cmd == "lines") {
    for (const Json& e : j["lines"]) {
      os << "line " << render_vec_text(e["direction"]) << ": weights " << e["members"].dump()
         << ", lengths " << render_vec_text(e["lengths"]) << ", sum "
         << render_vec_text(e["sum"]) << "\n";
    }
  } else if (cmd == "circuits") {
    for (const Json& e : j["circuits"]) {
      os << "normal " << render_vec_text(e["normal"]) << ": c = "
         << e["constant"].get<std::string>();
      if (e.contains("approx")) os << " ~ " << e["approx"].get<double>();
      os << "\n";
    }
  } else if (cmd == "horn") {
    for (const Json& e : j["lines"]) {
      os << "line " << render_vec_text(e["direction"]) << ": constants "
         << e["constants"].dump() << ", sigma " << render_vec_text(e["sigma"]) << "\n";
    }
    if (j["isConstant"].get<bool>())
      os << "constant: " << j["constant"].dump() << "\n";
    else
      os << "notConstant\n";
    if (j.contains("value"))
      os << "value at " << j["evaluatedAt"].dump() << ": " << j["value"].dump() << "\n";
  } else if (cmd == "discriminant" || cmd == "hls") {
    for (const Json& e : j["families"]) {
      os << "normal " << render_vec_text(e["normal"]) << ": offset "
         << render_offset_text(e["offset"]);
      if (e.contains("cF")) os << "  (cF = " << e["cF"].get<std::string>() << ")";
      os << "\n";
    }
  } else if (cmd == "compare") {
    os << j["verdict"].get<std::string>() << "\n";
    os << "shift z: [";
    for (std::size_t i = 0; i < j["shift"].size(); ++i) {
      if (i) os << ", ";
      os << render_log_real_text(j["shift"][i]);
    }
    os << "]\n";
    for (const Json& p : j["pairs"]) {
      os << "normal " << render_vec_text(p["normal"]) << ": c = "
         << p["circuitConstant"].get<std::string>() << ", cF = " << p["cF"].get<std::string>()
         << (p["matches"].get<bool>() ? "  ok" : "  MISMATCH") << "\n";
    }
  }
  return os.str();
}

}  // namespace qsdisc
