#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "acceptance.hpp"
#include "bott_grassmannian.hpp"
#include "bott_isotropic.hpp"
#include "cotangent_oracle.hpp"

namespace bottcalc {

// Key order is insertion order; no timings, so output is byte-stable for fixed input.
using Json = nlohmann::ordered_json;

inline constexpr int json_schema_version = 1;

inline Json schema_header(const std::string& kind) {
  Json j;
  j["schema"] = "bottcalc/" + kind;
  j["version"] = json_schema_version;
  return j;
}

// Integers that may exceed 64 bits are written as decimal strings.
inline Json big(const BigInt& x) { return x.fits_slong_p() ? Json(x.get_si()) : Json(x.get_str()); }

// Weights use the textual weight format.
inline Json weight_json(const Weight& w) { return render_weight(w); }

inline Json to_json(const CohomologyAnswer& a) {
  if (a.vanishes) return {{"vanishes", true}};
  return {{"l", a.degree}, {"weight", weight_json(a.weight)}, {"dim", big(a.dimension)}};
}

inline Json bott_entry(const std::string& bundle, Int m, const CohomologyAnswer& a) {
  return {{"bundle", bundle}, {"m", m}, {"result", to_json(a)}};
}

inline Json to_json(const SchurDecomposition& d, std::size_t n) {
  Json out = Json::array();
  for (const auto& t : d.terms)
    out.push_back({{"weight", weight_json(t.weight)}, {"multiplicity", t.multiplicity},
                   {"dimension", big(gl_dimension(pad(t.weight, n), n))}});
  return out;
}

// Summary block of a vanishing scan; certified_range is empty when H^{i_lo} already fails.
inline Json to_json(const ScanReport& s) {
  Json j;
  j["i_lo"] = s.i_lo;
  j["i_hi"] = s.i_hi;
  j["window"] = s.window;
  j["stable"] = s.stable;
  j["certified_range"] = s.certified_hi >= s.i_lo ? Json::array({s.i_lo, s.certified_hi}) : Json::array();
  Json ex = Json::array();
  for (const auto& e : s.exceptions)
    ex.push_back({{"bundle", bundle_name(e.bundle)}, {"l", e.degree}, {"m", e.m}, {"documented", e.documented}});
  j["exceptions"] = ex;
  return j;
}

inline Json opt_json(const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); }

// status: "vanishes" or "H^i"; null bounds are unbounded.
inline Json to_json(const IsoClassification& c) {
  Json rs = Json::array();
  for (const IsoRange& r : c.ranges)
    rs.push_back({{"m_lo", opt_json(r.lo)},
                  {"m_hi", opt_json(r.hi)},
                  {"status", r.index ? Json("H^" + std::to_string(*r.index)) : Json("vanishes")}});
  return rs;
}

// Per lemma: fail if any band contradicts the stated verdict, else undetermined if any band is, else pass.
inline Json verdicts_json(const std::vector<LemmaCheck>& checks) {
  Json v = Json::object();
  for (const LemmaCheck& c : checks) {
    std::string cur = v.contains(c.lemma) ? v[c.lemma].get<std::string>() : "pass";
    if (!c.ok()) cur = "fail";
    else if (c.computed == Verdict::undetermined && cur == "pass") cur = "undetermined";
    v[c.lemma] = cur;
  }
  return v;
}

inline Json iso_json(const IsoGrassmannian& X, IsoBundle b, const IsoClassification& c,
                     const std::vector<LemmaCheck>& checks) {
  Json j;
  j["X"] = X.name();
  j["bundle"] = iso_bundle_name(b);
  j["ranges"] = to_json(c);
  j["verdicts"] = verdicts_json(checks);
  return j;
}

inline Json to_json(const TableCheck& c) {
  Json j;
  j["type"] = std::string(1, type_letter(c.row->type));
  j["bundle"] = iso_bundle_name(c.row->bundle);
  j["r_case"] = std::string(c.row->rcase);
  j["n"] = c.n;
  j["r"] = c.r;
  Json ones = Json::array(), twos = Json::array();
  for (Int b : c.ones_computed) ones.push_back(render_affine({1, b}));
  for (Int b : c.twos_computed) twos.push_back(render_affine({2, b}));
  j["coefficient_1"] = ones;
  j["coefficient_2"] = twos;
  j["printed"] = {{"ones", std::string(c.row->ones)}, {"max", std::string(c.row->max2)}, {"other", std::string(c.row->other)}};
  j["ok"] = c.ok;
  return j;
}

inline Json to_json(const LemmaCheck& c) {
  return {{"lemma", c.lemma}, {"X", c.X.name()}, {"band", band_name(c.band)}, {"expected", verdict_name(c.expected)},
          {"computed", verdict_name(c.computed)}, {"ok", c.ok()}};
}

inline Json to_json(const SliceTotals& t) {
  return {{"C0", big(t.c0)},         {"C1", big(t.c1)},           {"Omega", big(t.omega)},
          {"C2", big(t.c2)},         {"C3", big(t.c3)},           {"rank_d1", big(t.rank_d1)},
          {"rank_d2", big(t.rank_d2)}, {"ker_d3", big(t.ker_d3)}, {"H1", big(t.h1)},
          {"H2", big(t.h2)}};
}

inline Json to_json(const OracleReport& rep) {
  Json j;
  j["r"] = rep.r;
  j["n"] = rep.n;
  j["minors_rank"] = rep.minors_rank;
  j["relations"] = rep.relations;
  j["relations_predicted"] = big(rep.relations_predicted);
  j["truncated"] = rep.truncated;
  Json sl = Json::array();
  for (const SliceReport& s : rep.slices) {
    Json x;
    x["p"] = s.p;
    x["truncated"] = s.truncated;
    x["exact"] = s.exact;
    x["blocks"] = s.blocks.size();
    x["computed"] = to_json(s.totals);
    x["predicted"] = to_json(s.predicted);
    x["composites_zero"] = s.composites_zero;
    x["image_invariant"] = s.image_invariant;
    Json mm = Json::array();
    for (const BlockMismatch& m : s.mismatches)
      mm.push_back({{"mu", weight_json(m.mu)}, {"quantity", m.quantity}, {"computed", big(m.computed)},
                    {"predicted", big(m.predicted)}});
    x["mismatches"] = mm;
    sl.push_back(x);
  }
  j["slices"] = sl;
  return j;
}

inline Json to_json(const WitnessReport& w) {
  return {{"r", w.r},
          {"n", w.n},
          {"m", w.m},
          {"d2_u1_nonzero", w.d2_u1_nonzero},
          {"u2_weight_ok", w.u2_weight_ok},
          {"d2_u2_nonzero", w.d2_u2_nonzero},
          {"delta_weight_ok", w.delta_weight_ok},
          {"delta_invariant", w.delta_invariant},
          {"d3_delta_nonzero", w.d3_delta_nonzero},
          {"d3_delta_at_x_ok", w.d3_delta_at_x_ok},
          {"d3_u_delta_nonzero", w.d3_u_delta_nonzero},
          {"u_delta_weight_ok", w.u_delta_weight_ok},
          {"ok", w.ok()}};
}

inline Json to_json(const CriterionResult& c) {
  return {{"id", c.id}, {"key", c.key}, {"title", c.title}, {"passed", c.passed}, {"summary", c.summary},
          {"failures", c.failures}};
}

}  // namespace bottcalc
