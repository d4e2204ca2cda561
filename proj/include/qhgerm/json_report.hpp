#pragma once

// JSON serialization of analyses, verdicts, witnesses and verification
// reports. Uses ordered objects so output is byte-for-byte deterministic.

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "qhgerm/decide.hpp"
#include "qhgerm/poly_io.hpp"
#include "qhgerm/qh_core.hpp"
#include "qhgerm/witness.hpp"

namespace qhgerm {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// Significant decimal digits carried by `prec` bits.
inline std::size_t digits_for(Precision prec) {
  return static_cast<std::size_t>(std::floor(static_cast<double>(prec) * 0.30102999566398120)) ;
}

inline Json complex_json(const Complex& z, Precision prec) {
  const std::size_t digits = digits_for(prec);
  return Json{{"re", z.re.str(digits)}, {"im", z.im.str(digits)}};
}

inline Json weights_json(const WeightSignature& w) {
  Json j{{"p", w.p}, {"q", w.q}, {"nu", w.nu}};
  if (w.placeholder) j["placeholder"] = true;
  return j;
}

inline Json class_json(const GermClass& c) { return Json{{"tag", to_string(c.tag)}, {"reason", c.reason}}; }

inline Json canonical_json(const CanonicalForm& f) {
  Json ladder = Json::array();
  for (const auto& c : f.ladder.descending()) ladder.push_back(c.str());
  Json mult = Json::array();
  for (unsigned m : f.multiplicities) mult.push_back(m);
  Json j{{"c0", f.c0.str()}, {"m", f.m}, {"m0", f.m0}, {"ladder", ladder}, {"degD", f.degD}};
  j["k"] = f.k ? Json(*f.k) : Json(nullptr);
  j["multiplicities"] = mult;
  return j;
}

inline Json analysis_json(const GermAnalysis& a) {
  return Json{{"weights", weights_json(a.weights)},
              {"class", class_json(a.germ_class)},
              {"canonical", canonical_json(a.form)},
              {"ord0", a.ord0}};
}

inline Json invariants_json(const GermAnalysis& a) {
  Json j{{"p", a.weights.p}, {"q", a.weights.q}, {"nu", a.weights.nu}, {"m", a.form.m}};
  j["m0"] = a.weights.p > 1 ? Json(a.form.m0) : Json(nullptr);
  j["degD"] = a.form.degD;
  Json mult = Json::array();
  for (unsigned m : a.form.multiplicities) mult.push_back(m);
  j["multiplicities"] = mult;
  return j;
}

inline Json numeric_evidence_json(const NumericEvidence& ev) {
  Json j{{"matched", ev.matched}, {"precision", ev.precision}, {"tol", ev.tol}, {"note", ev.note}};
  if (ev.match) {
    j["a"] = complex_json(ev.match->a, 64);
    j["b"] = ev.match->b ? complex_json(*ev.match->b, 64) : Json(nullptr);
  }
  return j;
}

inline Json verdict_json(const Verdict& v) {
  Json j{{"status", to_string(v.status)}, {"reason", v.reason}};
  if (v.F && v.G) j["invariants"] = Json{{"F", invariants_json(*v.F)}, {"G", invariants_json(*v.G)}};
  else j["invariants"] = nullptr;
  if (v.match) {
    j["match"] = Json{{"kind", v.affine ? "affine" : "linear"},
                      {"d", v.match->scale.d},
                      {"base", v.match->scale.base.str()},
                      {"shift", Json{{"cF", v.match->c_F.str()}, {"cG", v.match->c_G.str()}}}};
  } else {
    j["match"] = nullptr;
  }
  j["atTolerance"] = v.at_tolerance;
  if (v.numeric) j["numeric"] = numeric_evidence_json(*v.numeric);
  if (v.j_F || v.j_G) {
    j["jInvariants"] = Json{{"F", v.j_F ? Json(v.j_F->str()) : Json(nullptr)},
                            {"G", v.j_G ? Json(v.j_G->str()) : Json(nullptr)}};
  }
  return j;
}

inline Json radical_json(const RadicalScalar& r, Precision prec) {
  Json j{{"kind", "radical"}, {"base", r.base.str()}, {"index", r.index}, {"branch", r.branch}};
  j["exact"] = r.exact() ? Json(r.exact()->str()) : Json(nullptr);
  j["approx"] = complex_json(r.approx_at(prec), prec);
  return j;
}

inline Json gamma_json(const GammaForm& g, Precision prec) {
  if (auto r = g.as_radical(prec)) return radical_json(*r, prec);
  Json terms = Json::array();
  for (const auto& t : g.terms) terms.push_back(Json{{"coeff", t.coeff.str()}, {"radical", radical_json(t.radical, prec)}});
  return Json{{"kind", "linear"},
              {"terms", terms},
              {"constant", g.constant.str()},
              {"approx", complex_json(g.approx_at(prec), prec)}};
}

inline Json witness_json(const Witness& w) {
  return Json{{"direction", to_string(w.direction)},
              {"branch", w.branch},
              {"q", w.q},
              {"a", radical_json(w.a, w.precision)},
              {"alpha", radical_json(w.alpha, w.precision)},
              {"beta", radical_json(w.beta, w.precision)},
              {"gamma", gamma_json(w.gamma, w.precision)},
              {"precision", w.precision}};
}

inline Json verification_json(const VerificationReport& r) {
  Json j{{"mode", to_string(r.mode)}, {"pass", r.pass}, {"residual", r.residual.to_double()}};
  j["precision"] = r.mode == VerificationMode::Exact ? Json(nullptr) : Json(r.precision);
  j["samples"] = r.samples;
  j["tol"] = r.tol;
  return j;
}

}  // namespace qhgerm
