#pragma once
/// Command-line front end: `analyze`, `verify-paper`, `bounds`. Lives in a
/// header so tests can drive it in-process with string streams.

#include <jdefect/families.hpp>
#include <jdefect/forms.hpp>
#include <jdefect/jacobian.hpp>
#include <jdefect/report.hpp>
#include <jdefect/singularities.hpp>
#include <jdefect/verification.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace jdefect::cli {

struct AnalyzeArgs {
  std::string polynomial;
  std::string family;
  std::optional<int> m, k, n, d;
  std::optional<std::uint64_t> seed;
  int retries = 0;
  bool concurrent = false;
  bool json = false;
  int max_degree = 14;
  std::string arithmetic = "auto";
  std::size_t primes = 2;
};

struct VerifyArgs {
  std::optional<std::string> only;
  int max_degree = 14;
  bool json = false;
  std::uint64_t seed = 1;
};

struct BoundsArgs {
  std::string kind;
  std::optional<int> d, k, m, r;
  std::string type;
  std::string census;
  bool json = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline PipelineOptions pipeline_options(const std::string& arithmetic, std::size_t primes) {
  PipelineOptions o;
  if (arithmetic == "exact") o.arithmetic = Arithmetic::exact;
  else if (arithmetic == "modular") o.arithmetic = Arithmetic::modular;
  else o.arithmetic = Arithmetic::automatic;
  o.primes = primes;
  return o;
}

inline int required(const std::optional<int>& v, const char* flag, const std::string& family) {
  if (!v) throw UsageError("family '" + family + "' needs --" + std::string(flag));
  return *v;
}

/// Degree the family would have, so the cap can refuse before building it.
inline int family_degree(const AnalyzeArgs& a) {
  const std::string& f = a.family;
  if (f == "persson") return 2 * required(a.m, "m", f);
  if (f == "sextic" || f == "dual-fermat") return 6;
  if (f == "ivinskis") return 6 * required(a.k, "k", f);
  if (f == "braid") return 6;
  if (f == "fermat") return required(a.d, "d", f);
  if (f == "lines") return required(a.n, "n", f);
  if (f == "nodal") return required(a.d, "d", f);
  throw UsageError("unknown family '" + f + "' (persson, sextic, ivinskis, braid, fermat, lines, nodal)");
}

inline FamilyInstance build_family(const AnalyzeArgs& a, InputEcho& echo) {
  const std::string& f = a.family;
  const std::uint64_t seed = a.seed.value_or(1);
  if (f == "persson") {
    echo.params["m"] = *a.m;
    return persson(*a.m);
  }
  if (f == "sextic" || f == "dual-fermat") return dual_fermat_sextic();
  if (f == "ivinskis") {
    echo.params["k"] = *a.k;
    return ivinskis(*a.k);
  }
  if (f == "braid") return braid_arrangement();
  if (f == "fermat") {
    echo.params["d"] = *a.d;
    return fermat(*a.d);
  }
  if (f == "lines") {
    echo.params["n"] = *a.n;
    echo.seed = seed;
    LineOptions o;
    o.concurrent = a.concurrent;
    if (a.retries > 0) o.max_attempts = a.retries;
    return generic_lines(*a.n, seed, o);
  }
  // nodal
  echo.params["d"] = *a.d;
  echo.seed = seed;
  NodalOptions o;
  o.pipeline = pipeline_options(a.arithmetic, a.primes);
  if (a.retries > 0) o.max_attempts = a.retries;
  return rational_nodal(*a.d, seed, o);
}

inline int run_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  InputEcho echo;
  if (!a.polynomial.empty()) echo.polynomial = a.polynomial;
  if (!a.family.empty()) echo.family = a.family;
  const std::string who = a.family.empty() ? "\"" + a.polynomial + "\"" : a.family;
  try {
    if (a.polynomial.empty() == a.family.empty())
      throw UsageError("give exactly one of a polynomial or --family");
    std::optional<FamilyInstance> family;
    Form form;
    if (!a.family.empty()) {
      const int deg = family_degree(a);
      if (deg > a.max_degree)
        throw UsageError("degree " + std::to_string(deg) + " exceeds --max-degree " + std::to_string(a.max_degree));
      family = build_family(a, echo);
      form = family->form;
    } else {
      form = parse_form(a.polynomial);
      if (form.degree() > a.max_degree)
        throw UsageError("degree " + std::to_string(form.degree()) + " exceeds --max-degree " +
                         std::to_string(a.max_degree));
    }
    const CurveReport report =
        analyze(form, echo, family ? &*family : nullptr, pipeline_options(a.arithmetic, a.primes));
    if (a.json)
      out << to_json(report).dump(2) << "\n";
    else
      out << to_text(report);
    return static_cast<int>(ExitCode::ok);
  } catch (const std::exception& e) {
    const ExitCode code = exit_code_for(e);
    err << "error: " << echo.describe() << ": " << e.what() << "\n";
    (void)who;
    return static_cast<int>(code);
  }
}

inline int run_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions o;
  o.only = a.only;
  o.max_degree = a.max_degree;
  o.seed = a.seed;
  const auto results = verify_paper(o);
  if (a.json)
    out << verification_json(results).dump(2) << "\n";
  else
    out << verification_table(results);
  return static_cast<int>(all_passed(results) ? ExitCode::ok : ExitCode::acceptance_failure);
}

inline int need(const std::optional<int>& v, const char* flag, const std::string& kind) {
  if (!v) throw UsageError("bounds " + kind + " needs --" + std::string(flag));
  return *v;
}

inline int run_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
  try {
    Json j;
    j["kind"] = a.kind;
    std::string text;
    if (a.kind == "A" || a.kind == "B" || a.kind == "C" || a.kind == "D") {
      CurveFacts f;
      TheoremKind kind = TheoremKind::A;
      if (a.kind == "A") {
        f.d = need(a.d, "d", a.kind);
      } else if (a.kind == "B") {
        kind = TheoremKind::B;
        f.k = need(a.k, "k", a.kind);
      } else if (a.kind == "C") {
        kind = TheoremKind::C;
        f.k = need(a.k, "k", a.kind);
      } else {
        kind = TheoremKind::D;
        f.d = a.d ? *a.d : 2 * need(a.m, "d or --m", a.kind);
        if (!a.census.empty()) f.census = SingularityCensus::parse(a.census);
      }
      const TheoremVerdict v = check_theorem(kind, f);
      j["verdict"] = verdict_json(v);
      if (!v.applicable) {
        text = "Theorem " + a.kind + ": not applicable (" + v.reason + ")";
      } else if (kind == TheoremKind::C) {
        text = "ν = " + std::to_string(v.integer_bound) + ", genus = " + std::to_string(*v.genus);
      } else if (kind == TheoremKind::D) {
        text = "ν ≥ 1";
        for (const auto& c : v.chain) text += "; " + c;
      } else {
        text = "ν ≥ " + to_string(v.bound);
        if (v.bound != Rational(v.integer_bound)) text += " ⇒ ν ≥ " + std::to_string(v.integer_bound);
      }
    } else if (a.kind == "dpw") {
      const int d = need(a.d, "d", a.kind), r = need(a.r, "r", a.kind);
      const long t = dpw_tau_max(d, r);
      j["d"] = std::to_string(d);
      j["r"] = std::to_string(r);
      j["tau_max"] = std::to_string(t);
      text = std::to_string(t);
    } else if (a.kind == "lct") {
      if (a.type.empty()) throw UsageError("bounds lct needs --type");
      const SingularityType s = SingularityType::parse(a.type);
      j["type"] = s.name();
      j["lct"] = to_string(lct(s));
      j["tau"] = std::to_string(tau_local(s));
      text = "lct(" + s.name() + ") = " + to_string(lct(s)) + ", tau = " + std::to_string(tau_local(s));
    } else if (a.kind == "genus") {
      const int d = need(a.d, "d", a.kind);
      if (a.census.empty()) throw UsageError("bounds genus needs --census");
      const long g = genus(d, SingularityCensus::parse(a.census));
      j["d"] = std::to_string(d);
      j["genus"] = std::to_string(g);
      text = "genus = " + std::to_string(g);
    } else {
      throw UsageError("unknown bound kind '" + a.kind + "' (A, B, C, D, dpw, lct, genus)");
    }
    if (a.json)
      out << j.dump(2) << "\n";
    else
      out << text << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: bounds " << a.kind << ": " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Jacobian syzygies, Tjurina numbers and the freeness defect of plane curves"};
  app.name("jdefect");
  app.require_subcommand(1);

  AnalyzeArgs aa;
  auto* analyze_cmd = app.add_subcommand("analyze", "Compute mdr, tau, n(f)_j and the defect of one curve");
  analyze_cmd->add_option("polynomial", aa.polynomial, "Homogeneous polynomial in x,y,z, e.g. \"x^2+y^2+z^2\"");
  analyze_cmd->add_option("--family", aa.family, "persson|sextic|ivinskis|braid|fermat|lines|nodal");
  analyze_cmd->add_option("--m", aa.m, "persson parameter (even, >= 4)");
  analyze_cmd->add_option("--k", aa.k, "ivinskis parameter (>= 1)");
  analyze_cmd->add_option("--n", aa.n, "number of lines");
  analyze_cmd->add_option("--d", aa.d, "degree (fermat, nodal)");
  analyze_cmd->add_option("--seed", aa.seed, "seed for lines / nodal");
  analyze_cmd->add_option("--retries", aa.retries, "retry budget for random constructions");
  analyze_cmd->add_flag("--concurrent", aa.concurrent, "lines: all through one point");
  analyze_cmd->add_flag("--json", aa.json, "JSON output");
  analyze_cmd->add_option("--max-degree", aa.max_degree, "refuse curves above this degree")->capture_default_str();
  analyze_cmd->add_option("--arithmetic", aa.arithmetic, "auto|exact|modular")
      ->check(CLI::IsMember({"auto", "exact", "modular"}))
      ->capture_default_str();
  analyze_cmd->add_option("--primes", aa.primes, "number of primes for modular arithmetic (>= 2)")->capture_default_str();

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Recompute every reference value and report pass/fail");
  verify_cmd->add_option("--only", va.only, "item id, index or tag (e.g. theoremC)");
  verify_cmd->add_option("--max-degree", va.max_degree, "skip items above this degree")->capture_default_str();
  verify_cmd->add_option("--seed", va.seed, "seed for random constructions")->capture_default_str();
  verify_cmd->add_flag("--json", va.json, "JSON output");

  BoundsArgs ba;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate a bound without a curve");
  bounds_cmd->add_option("kind", ba.kind, "A|B|C|D|dpw|lct|genus")->required();
  bounds_cmd->add_option("--d", ba.d, "degree");
  bounds_cmd->add_option("--k", ba.k, "family parameter k");
  bounds_cmd->add_option("--m", ba.m, "half degree m (D)");
  bounds_cmd->add_option("--r", ba.r, "mdr (dpw)");
  bounds_cmd->add_option("--type", ba.type, "singularity type for lct, e.g. A3, D4, E6, node, cusp, ord5");
  bounds_cmd->add_option("--census", ba.census, "census, e.g. node:66 or A3:12");
  bounds_cmd->add_flag("--json", ba.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }
  if (analyze_cmd->parsed()) return run_analyze(aa, out, err);
  if (verify_cmd->parsed()) return run_verify(va, out);
  return run_bounds(ba, out, err);
}

}  // namespace jdefect::cli
