#pragma once
/// CurveReport: one curve's invariants plus every applicable check, with
/// text and JSON renderings. JSON keys are emitted in a fixed order and all
/// integers are decimal strings, so a report re-serializes byte-identically.

#include <jdefect/families.hpp>
#include <jdefect/forms.hpp>
#include <jdefect/jacobian.hpp>
#include <jdefect/singularities.hpp>

#include <json.hpp>

#include <chrono>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace jdefect {

using Json = nlohmann::ordered_json;

struct InputEcho {
  std::optional<std::string> polynomial;
  std::optional<std::string> family;
  std::map<std::string, long> params;
  std::optional<std::uint64_t> seed;

  std::string describe() const {
    if (polynomial) return "\"" + *polynomial + "\"";
    std::string s = family.value_or("?");
    for (const auto& [k, v] : params) s += " --" + k + " " + std::to_string(v);
    if (seed) s += " --seed " + std::to_string(*seed);
    return s;
  }
};

struct DpwCheck {
  bool applicable = false;
  long tau_max = 0;
  long tau = 0;
  bool holds = false;
};

struct ExpectationCheck {
  std::string census;
  std::optional<long> tau, nu, mdr_lower;
  bool tau_matches = true, nu_matches = true, mdr_matches = true;
  bool holds() const { return tau_matches && nu_matches && mdr_matches; }
};

struct CurveReport {
  InputEcho input;
  JacobianProfile profile;
  DefectFormulaCheck defect_formula;
  DpwCheck dpw;
  std::optional<ExpectationCheck> expected;
  std::vector<TheoremVerdict> theorems;
  long timing_ms = 0;
};

inline DpwCheck dpw_check(const JacobianProfile& p) {
  DpwCheck c;
  c.applicable = p.d >= 1 && p.mdr <= p.d - 1;
  if (!c.applicable) return c;
  c.tau_max = dpw_tau_max(p.d, p.mdr);
  c.tau = p.tau;
  c.holds = p.tau <= c.tau_max;
  return c;
}

inline CurveFacts facts_for(const JacobianProfile& p, const FamilyInstance* family) {
  CurveFacts f;
  f.d = p.d;
  f.measured_nu = p.nu;
  f.measured_mdr = p.mdr;
  f.measured_tau = p.tau;
  if (family) {
    f.census = family->expected_census;
    f.irreducible = family->irreducible;
    f.k = family->k;
  }
  return f;
}

/// Runs the pipeline on `f` and every check that applies. `family` supplies
/// the singularity census the theorem checkers need; without it only the
/// census-free checks are applicable.
inline CurveReport analyze(const Form& f, InputEcho input, const FamilyInstance* family = nullptr,
                           const PipelineOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  CurveReport r;
  r.input = std::move(input);
  r.profile = profile(f, opt);
  r.defect_formula = defect_formula_check(r.profile);
  r.dpw = dpw_check(r.profile);
  if (family) {
    ExpectationCheck e;
    e.census = family->expected_census.to_string();
    e.tau = family->expected_tau;
    e.nu = family->expected_nu;
    e.mdr_lower = family->expected_mdr_lower;
    if (e.tau) e.tau_matches = *e.tau == r.profile.tau;
    if (e.nu) e.nu_matches = *e.nu == r.profile.nu;
    if (e.mdr_lower) e.mdr_matches = r.profile.mdr >= *e.mdr_lower;
    r.expected = e;
  }
  const CurveFacts facts = facts_for(r.profile, family);
  for (auto kind : {TheoremKind::A, TheoremKind::B, TheoremKind::C, TheoremKind::D}) {
    TheoremVerdict v = check_theorem(kind, facts);
    r.theorems.push_back(std::move(v));
  }
  r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------------------
// JSON

inline std::string dec(long v) { return std::to_string(v); }

inline Json verdict_json(const TheoremVerdict& v) {
  Json j;
  j["applicable"] = v.applicable;
  if (!v.applicable) {
    j["reason"] = v.reason;
    return j;
  }
  j["relation"] = v.relation;
  j["bound"] = to_string(v.bound);
  j["integer_bound"] = dec(v.integer_bound);
  if (v.genus) j["genus"] = dec(*v.genus);
  if (!v.chain.empty()) j["chain"] = v.chain;
  if (v.measured) j["measured"] = dec(*v.measured);
  if (v.pass) j["pass"] = *v.pass;
  return j;
}

inline Json to_json(const CurveReport& r) {
  Json input;
  if (r.input.polynomial) input["polynomial"] = *r.input.polynomial;
  if (r.input.family) {
    input["family"] = *r.input.family;
    Json params = Json::object();
    for (const auto& [k, v] : r.input.params) params[k] = dec(v);
    input["params"] = params;
  }
  if (r.input.seed) input["seed"] = std::to_string(*r.input.seed);

  const auto& p = r.profile;
  Json out;
  out["input"] = input;
  out["d"] = dec(p.d);
  out["mdr"] = dec(p.mdr);
  out["tau"] = dec(p.tau);
  Json seq = Json::array();
  for (long n : p.n_seq) seq.push_back(dec(n));
  out["n_seq"] = seq;
  out["nu"] = dec(p.nu);
  out["classification"] = to_string(p.classification);

  Json checks;
  checks["arithmetic"] = p.arithmetic;
  Json formula;
  formula["applicable"] = true;
  formula["first_case"] = r.defect_formula.first_case;
  formula["second_case"] = r.defect_formula.second_case;
  formula["predicted"] = dec(r.defect_formula.predicted);
  formula["measured"] = dec(r.defect_formula.measured);
  formula["agree"] = r.defect_formula.agree;
  checks["defect_formula"] = formula;
  Json dpw;
  dpw["applicable"] = r.dpw.applicable;
  if (r.dpw.applicable) {
    dpw["tau_max"] = dec(r.dpw.tau_max);
    dpw["tau"] = dec(r.dpw.tau);
    dpw["holds"] = r.dpw.holds;
  }
  checks["dpw"] = dpw;
  checks["duality"] = Json{{"applicable", p.d >= 2}, {"holds", p.duality_holds}};
  checks["containment"] = Json{{"applicable", p.d >= 2}, {"holds", p.containment_holds}};
  if (r.expected) {
    Json e;
    e["applicable"] = true;
    e["census"] = r.expected->census;
    if (r.expected->tau) e["tau"] = dec(*r.expected->tau);
    if (r.expected->nu) e["nu"] = dec(*r.expected->nu);
    if (r.expected->mdr_lower) e["mdr_lower"] = dec(*r.expected->mdr_lower);
    e["holds"] = r.expected->holds();
    checks["expected"] = e;
  } else {
    checks["expected"] = Json{{"applicable", false}};
  }
  Json theorems;
  for (const auto& v : r.theorems) theorems[to_string(v.kind)] = verdict_json(v);
  checks["theorems"] = theorems;
  out["checks"] = checks;
  out["timing_ms"] = dec(r.timing_ms);
  return out;
}

// ---------------------------------------------------------------------------
// Text

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string verdict_text(const TheoremVerdict& v) {
  std::ostringstream s;
  s << "Theorem " << to_string(v.kind) << ": ";
  if (!v.applicable) {
    s << "not applicable (" << v.reason << ")";
    return s.str();
  }
  s << "ν " << (v.relation == "=" ? "= " : "≥ ") << to_string(v.bound);
  if (v.relation == ">=" && v.bound != Rational(v.integer_bound)) s << " ⇒ ν ≥ " << v.integer_bound;
  if (v.genus) s << ", genus = " << *v.genus;
  for (const auto& c : v.chain) s << "; " << c;
  if (v.measured) s << "; measured ν = " << *v.measured << " -> " << (v.pass.value_or(false) ? "PASS" : "FAIL");
  return s.str();
}

inline std::string to_text(const CurveReport& r) {
  const auto& p = r.profile;
  std::ostringstream s;
  s << "input:          " << r.input.describe() << "\n";
  s << "degree:         " << p.d << "\n";
  s << "mdr:            " << p.mdr << "\n";
  s << "tau:            " << p.tau << "\n";
  s << "n(f)_j:         ";
  for (std::size_t j = 0; j < p.n_seq.size(); ++j) s << (j ? " " : "") << p.n_seq[j];
  s << "\n";
  s << "defect nu:      " << p.nu << "\n";
  s << "classification: " << to_string(p.classification) << "\n";
  s << "arithmetic:     " << p.arithmetic << "\n";
  s << "checks:\n";
  s << "  defect formula: predicted " << r.defect_formula.predicted << ", measured " << r.defect_formula.measured
    << " (" << (r.defect_formula.agree ? "agree" : "DISAGREE") << ")\n";
  if (r.dpw.applicable)
    s << "  du Plessis-Wall: tau " << r.dpw.tau << " <= tau_max " << r.dpw.tau_max << ": " << yes_no(r.dpw.holds) << "\n";
  s << "  duality n_j = n_{T-j}: " << yes_no(p.duality_holds) << "\n";
  s << "  J_f ⊆ I_f: " << yes_no(p.containment_holds) << "\n";
  if (r.expected) {
    s << "  expected census " << r.expected->census;
    if (r.expected->tau) s << ", tau " << *r.expected->tau;
    if (r.expected->nu) s << ", nu " << *r.expected->nu;
    if (r.expected->mdr_lower) s << ", mdr >= " << *r.expected->mdr_lower;
    s << ": " << (r.expected->holds() ? "matches" : "MISMATCH") << "\n";
  }
  for (const auto& v : r.theorems) s << "  " << verdict_text(v) << "\n";
  s << "time:           " << r.timing_ms << " ms\n";
  return s.str();
}

}  // namespace jdefect
