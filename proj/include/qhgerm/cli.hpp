#pragma once

// Command implementations behind the qhgerm executable. Each command returns
// its JSON report, a human-readable rendering and the process exit code, so
// tests can drive them without spawning a process.

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qhgerm/cross_ratio.hpp"
#include "qhgerm/decide.hpp"
#include "qhgerm/errors.hpp"
#include "qhgerm/json_report.hpp"
#include "qhgerm/numeric.hpp"
#include "qhgerm/poly_io.hpp"
#include "qhgerm/qh_core.hpp"
#include "qhgerm/witness.hpp"

namespace qhgerm::cli {

enum ExitCode : int {
  kEquivalent = 0,
  kInequivalent = 1,
  kNotApplicable = 2,
  kUsage = 64,
  kParse = 65,
  kAnalysis = 66,
};

struct RunConfig {
  DecideMode mode = DecideMode::Auto;
  Precision precision = 128;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  bool json = false;
  unsigned branch = 0;
  bool witness = false;
  unsigned samples = 200;
  std::optional<std::pair<unsigned, unsigned>> weights;
};

struct CommandResult {
  Json report;
  std::string text;
  int exit_code = 0;
};

namespace detail {

inline Json header(const std::string& command, Json inputs) {
  return Json{{"schemaVersion", kSchemaVersion}, {"command", command}, {"inputs", std::move(inputs)}};
}

inline CommandResult failure(Json report, const Error& e, int code) {
  Json err{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) err["position"] = pe->position();
  report["error"] = err;
  return {report, std::string("error (") + std::string(to_string(e.code())) + "): " + e.what() + "\n", code};
}

inline int status_exit(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Equivalent: return kEquivalent;
    case VerdictStatus::Inequivalent: return kInequivalent;
    case VerdictStatus::NotApplicable: return kNotApplicable;
    case VerdictStatus::Error: return kAnalysis;
  }
  return kAnalysis;
}

/// Parses a polynomial; a ParseError escapes to the caller.
inline BivarPoly parse_input(const std::string& text) { return parse_poly(text); }

inline std::string complex_text(const Complex& z, std::size_t digits) {
  return z.re.str(digits) + (z.im.sign() < 0 ? " - " : " + ") + abs(z.im).str(digits) + "i";
}

inline std::string rad_text(const RadicalScalar& r) {
  if (auto e = r.exact()) return e->str();
  return "(" + r.base.str() + ")^(1/" + std::to_string(r.index) + ")[branch " + std::to_string(r.branch) +
         "] ~ " + complex_text(r.approx, 12);
}

/// Continued-fraction convergents of x with denominators up to max_den.
inline std::vector<Rational> convergents(const Real& x, const BigInt& max_den) {
  std::vector<Rational> out;
  Rational exact = x.to_rational();
  // h_{-2} = 0, h_{-1} = 1, k_{-2} = 1, k_{-1} = 0
  BigInt h_prev = 0, h = 1, k_prev = 1, k = 0;
  for (int steps = 0; steps < 64; ++steps) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), exact.get_num_mpz_t(), exact.get_den_mpz_t());
    const BigInt h_next = a * h + h_prev;
    const BigInt k_next = a * k + k_prev;
    if (k_next > max_den) break;
    out.push_back(make_rational(h_next, k_next));
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    const Rational frac = exact - Rational(a);
    if (frac == 0) break;
    exact = 1 / frac;
  }
  return out;
}

/// A point of Q(i) with small denominators that is an exact root of `factor`, near z.
inline std::optional<GaussianRational> snap_root(const UniPoly& factor, const Complex& z) {
  if (factor.degree() == 1) return -factor.coeff(0) / factor.coeff(1);
  const BigInt max_den("1000000000000");
  const auto re = convergents(z.re, max_den);
  const auto im = convergents(z.im, max_den);
  std::vector<Rational> re_c = re.empty() ? std::vector<Rational>{0} : re;
  std::vector<Rational> im_c = im.empty() ? std::vector<Rational>{0} : im;
  for (std::size_t t = re_c.size(); t-- > 0;) {
    for (std::size_t u = im_c.size(); u-- > 0;) {
      const GaussianRational candidate(re_c[t], im_c[u]);
      const Precision prec = z.prec();
      const bool close = abs(Complex(candidate, prec) - z) <= Real(1e-15, prec) * max(Real(1L, prec), abs(z));
      if (close && factor.eval(candidate).is_zero()) return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline CommandResult cmd_analyze(const std::string& text, const RunConfig& cfg) {
  Json report = detail::header("analyze", Json{{"F", text}});
  BivarPoly f;
  try {
    f = detail::parse_input(text);
  } catch (const ParseError& e) {
    return detail::failure(report, e, kParse);
  }
  report["polynomial"] = format_poly(f);
  report["mode"] = to_string(f.mode());
  GermAnalysis a;
  try {
    a = analyze_germ(f, cfg.weights);
  } catch (const Error& e) {
    return detail::failure(report, e, kAnalysis);
  }
  const UniPoly h = height_function(f);
  report["weights"] = weights_json(a.weights);
  report["class"] = class_json(a.germ_class);
  report["canonical"] = canonical_json(a.form);
  report["ord0"] = a.ord0;
  report["height"] = h.str("z");

  std::ostringstream out;
  out << "polynomial: " << format_poly(f) << "\n"
      << "weights: p=" << a.weights.p << " q=" << a.weights.q << " nu=" << a.weights.nu
      << (a.weights.placeholder ? " (placeholder)" : "") << "\n"
      << "class: " << to_string(a.germ_class.tag) << " (" << a.germ_class.reason << ")\n"
      << "canonical: c0=" << a.form.c0 << " m=" << a.form.m << " m0=" << a.form.m0 << " ladder=" << a.form.ladder.str()
      << "\n"
      << "ord0: " << a.ord0 << "\n"
      << "height: f(z) = " << h.str("z") << "\n";
  return {report, out.str(), 0};
}

/// Decides a parsed pair; shared by `decide` and `decide-batch`.
inline CommandResult decide_parsed(Json report, const BivarPoly& F, const BivarPoly& G, const RunConfig& cfg) {
  report["options"] = Json{{"mode", to_string(cfg.mode)},
                           {"precision", cfg.precision},
                           {"tol", cfg.tol},
                           {"seed", cfg.seed},
                           {"branch", cfg.branch}};
  DecideOptions opts;
  opts.weights = cfg.weights;
  opts.mode = cfg.mode;
  opts.precision = cfg.precision;
  opts.tol = cfg.tol;
  const Verdict v = decide_equivalence(F, G, opts);
  if (v.F && v.G) report["analysis"] = Json{{"F", analysis_json(*v.F)}, {"G", analysis_json(*v.G)}};
  report["verdict"] = verdict_json(v);

  std::ostringstream out;
  out << "verdict: " << to_string(v.status) << (v.at_tolerance ? " (at tolerance)" : "") << "\n"
      << "reason: " << v.reason << "\n";
  if (v.match) {
    out << "scale: a^" << v.match->scale.d << " = " << v.match->scale.base;
    if (v.affine) out << ", shift b = " << v.match->c_G << " - a*(" << v.match->c_F << ")";
    out << "\n";
  }
  if (v.j_F || v.j_G) {
    out << "j-invariants: F " << (v.j_F ? v.j_F->str() : "n/a") << ", G " << (v.j_G ? v.j_G->str() : "n/a") << "\n";
  }
  if (v.numeric) out << "numeric check: " << v.numeric->note << "\n";

  int code = detail::status_exit(v.status);
  if (cfg.witness && v.status == VerdictStatus::Equivalent && v.match) {
    try {
      const Witness w = build_witness(v, cfg.branch, cfg.precision);
      VerifyOptions vo;
      vo.seed = cfg.seed;
      vo.samples = cfg.samples;
      const VerificationReport rep = verify_witness(F, G, w, vo);
      report["witness"] = witness_json(w);
      report["verification"] = verification_json(rep);
      out << "witness: " << to_string(w.direction) << "\n"
          << "  alpha = " << detail::rad_text(w.alpha) << "\n"
          << "  beta  = " << detail::rad_text(w.beta) << "\n";
      if (auto g = w.gamma.as_radical(w.precision)) out << "  gamma = " << detail::rad_text(*g) << "\n";
      else out << "  gamma ~ " << detail::complex_text(w.gamma.approx_at(w.precision), 12) << "\n";
      out << "verification: " << to_string(rep.mode) << ", residual " << rep.residual.str(4) << ", "
          << (rep.pass ? "pass" : "FAIL") << "\n";
    } catch (const Error& e) {
      return detail::failure(report, e, e.code() == ErrorCode::BranchOutOfRange ? kUsage : kAnalysis);
    }
  }
  if (v.status == VerdictStatus::Error) {
    const ErrorCode ec = v.error.value_or(ErrorCode::InternalInconsistency);
    report["error"] = Json{{"code", std::string(to_string(ec))}, {"message", v.reason}};
  }
  return {report, out.str(), code};
}

inline CommandResult cmd_decide(const std::string& f_text, const std::string& g_text, const RunConfig& cfg) {
  Json report = detail::header("decide", Json{{"F", f_text}, {"G", g_text}});
  BivarPoly F, G;
  try {
    F = detail::parse_input(f_text);
    G = detail::parse_input(g_text);
  } catch (const ParseError& e) {
    return detail::failure(report, e, kParse);
  }
  return decide_parsed(std::move(report), F, G, cfg);
}

inline CommandResult cmd_roots(const std::string& text, const RunConfig& cfg) {
  Json report = detail::header("roots", Json{{"F", text}});
  BivarPoly f;
  GermAnalysis a;
  try {
    f = detail::parse_input(text);
  } catch (const ParseError& e) {
    return detail::failure(report, e, kParse);
  }
  try {
    a = analyze_germ(f, cfg.weights);
  } catch (const Error& e) {
    return detail::failure(report, e, kAnalysis);
  }
  report["weights"] = weights_json(a.weights);
  report["class"] = class_json(a.germ_class);
  report["canonical"] = canonical_json(a.form);

  struct Entry {
    unsigned multiplicity;
    std::optional<GaussianRational> exact;
    Complex approx;
  };
  std::vector<Entry> entries;
  try {
    if (a.form.degD > 0) {
      if (cfg.mode == DecideMode::Numeric) {
        report["method"] = "clusters";
        for (const auto& c : root_multiset(a.form.ladder, cfg.precision, cfg.tol)) {
          entries.push_back({c.multiplicity, std::nullopt, c.center.value});
        }
      } else {
        report["method"] = "squarefree";
        for (const auto& sf : a.form.squarefree) {
          for (const auto& r : find_roots(sf.factor, cfg.precision)) {
            entries.push_back({sf.multiplicity, detail::snap_root(sf.factor, r.value), r.value});
          }
        }
      }
    } else {
      report["method"] = "none";
    }
  } catch (const Error& e) {
    return detail::failure(report, e, kAnalysis);
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.multiplicity != y.multiplicity) return x.multiplicity < y.multiplicity;
    if (!(x.approx.re == y.approx.re)) return x.approx.re < y.approx.re;
    return x.approx.im < y.approx.im;
  });
  Json roots = Json::array();
  std::ostringstream out;
  out << "ladder: " << a.form.ladder.str() << "  (" << to_string(a.germ_class.tag) << ")\n";
  for (const auto& e : entries) {
    Json r{{"multiplicity", e.multiplicity}};
    r["exact"] = e.exact ? Json(e.exact->str()) : Json(nullptr);
    r["approx"] = complex_json(e.approx, cfg.precision);
    roots.push_back(r);
    out << "  " << (e.exact ? e.exact->str() : detail::complex_text(e.approx, 15)) << " : "
        << e.multiplicity << "\n";
  }
  report["roots"] = roots;
  if (a.germ_class.tag != GermTag::NonHomogeneousQH) {
    const std::string note = std::string("class ") + to_string(a.germ_class.tag) + ": " + a.germ_class.reason;
    report["note"] = note;
    out << "note: " << note << "\n";
  }
  return {report, out.str(), 0};
}

inline CommandResult cmd_demo_whitney(const std::string& t_text, const std::string& s_text, const RunConfig& cfg) {
  Json report = detail::header("demo-whitney", Json{{"t", t_text}, {"s", s_text}});
  GaussianRational t, s;
  try {
    for (auto [text, dest] : {std::pair{&t_text, &t}, std::pair{&s_text, &s}}) {
      const BivarPoly c = parse_poly(*text);
      for (const auto& [mono, coeff] : c.terms()) {
        if (mono.total_degree() != 0) throw ParseError(ErrorCode::Parse, 0, "parameter must be a constant");
      }
      *dest = c.coefficient(0, 0);
    }
  } catch (const ParseError& e) {
    return detail::failure(report, e, kParse);
  }
  try {
    for (const auto& v : {t, s}) {
      if (v.is_zero() || v == GaussianRational(1)) {
        throw Error(ErrorCode::DegenerateConfiguration, "parameter must differ from 0 and 1");
      }
    }
    const BivarPoly Ft = whitney_quartic(t), Fs = whitney_quartic(s);
    const CrossRatioResult ct = cross_ratio_demo({GaussianRational(0), GaussianRational(1), t, std::nullopt});
    const CrossRatioResult cs = cross_ratio_demo({GaussianRational(0), GaussianRational(1), s, std::nullopt});
    const auto qt = quartic_j_invariant(Ft), qs = quartic_j_invariant(Fs);
    DecideOptions opts;
    opts.precision = cfg.precision;
    opts.tol = cfg.tol;
    const Verdict v = decide_equivalence(Ft, Fs, opts);
    const GaussianRational jdiff = ct.j_invariant - cs.j_invariant;
    const double jdiff_abs = std::sqrt(jdiff.norm().get_d());

    report["F_t"] = format_poly(Ft);
    report["F_s"] = format_poly(Fs);
    report["crossRatio"] = Json{{"t", ct.cross_ratio.str()}, {"s", cs.cross_ratio.str()}};
    report["jInvariant"] = Json{{"t", ct.j_invariant.str()}, {"s", cs.j_invariant.str()}};
    report["jFromCoefficients"] = Json{{"t", qt ? Json(qt->str()) : Json(nullptr)}, {"s", qs ? Json(qs->str()) : Json(nullptr)}};
    report["jEqual"] = ct.j_invariant == cs.j_invariant;
    report["jDifference"] = jdiff_abs;
    report["verdict"] = verdict_json(v);
    std::vector<std::string> notes{
        "Both quartics are homogeneous (weights (1,1)); the decider is not applicable to them.",
        "Different j-invariants mean different analytic classes, although the whole family is bi-Lipschitz trivial."};
    for (const auto& v2 : {t, s}) {
      if (!(v2.norm() < Rational(1, 4))) {
        notes.push_back("parameter " + v2.str() +
                        " lies outside 0 < |t| < 1/2, the range of the analytic-modulus statement; the computation "
                        "itself is valid");
        break;
      }
    }
    report["notes"] = notes;

    std::ostringstream out;
    out << "F_t = " << format_poly(Ft) << "\nF_s = " << format_poly(Fs) << "\n"
        << "cross-ratio: " << ct.cross_ratio << " vs " << cs.cross_ratio << "\n"
        << "j-invariant: " << ct.j_invariant << " vs " << cs.j_invariant << (report["jEqual"].get<bool>() ? " (equal)" : " (different)")
        << "\n"
        << "decider: " << to_string(v.status) << " (" << v.reason << ")\n";
    for (const auto& n : notes) out << "note: " << n << "\n";
    return {report, out.str(), 0};
  } catch (const Error& e) {
    return detail::failure(report, e, kAnalysis);
  }
}

/// JSON lines in, JSON lines out: each input line {"F": "...", "G": "...", "weights": [p, q]?}.
inline CommandResult cmd_decide_batch(std::istream& in, const RunConfig& cfg) {
  Json lines = Json::array();
  std::ostringstream text;
  int code = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json rep = detail::header("decide", Json::object());
    try {
      const Json req = Json::parse(line);
      RunConfig local = cfg;
      if (req.contains("weights")) local.weights = std::pair{req["weights"][0].get<unsigned>(), req["weights"][1].get<unsigned>()};
      const CommandResult r = cmd_decide(req.at("F").get<std::string>(), req.at("G").get<std::string>(), local);
      rep = r.report;
      if (r.exit_code == kParse || r.exit_code == kUsage) code = r.exit_code;
    } catch (const nlohmann::json::exception& e) {
      const std::string msg = "line " + std::to_string(lineno) + ": " + e.what();
      rep["error"] = Json{{"code", std::string(to_string(ErrorCode::Parse))}, {"message", msg}};
      code = kParse;
    }
    rep["line"] = lineno;
    text << rep.dump() << "\n";
    lines.push_back(std::move(rep));
  }
  return {lines, text.str(), code};
}

}  // namespace qhgerm::cli
