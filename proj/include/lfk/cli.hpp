// Command-line front end: subcommands, JSON reports and the corpus runner.
#pragma once

#include "lfk/lfk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lfk::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { EXIT_PASS = 0, EXIT_FAIL = 1, EXIT_PARSE = 2, EXIT_USAGE = 3 };

/// Everything a subcommand needs: the variable space and the raw inputs.
class Invocation {
 public:
  Invocation(VarSpace space, std::map<std::string, std::string> inputs, std::map<std::string, std::vector<std::string>> lists)
      : space_(space), inputs_(std::move(inputs)), lists_(std::move(lists)) {}

  const VarSpace& space() const { return space_; }
  bool has(const std::string& key) const { return inputs_.count(key) > 0; }
  const std::string& get(const std::string& key) const {
    auto it = inputs_.find(key);
    if (it == inputs_.end()) throw DomainError("missing required input --" + key);
    return it->second;
  }
  std::vector<std::string> list(const std::string& key) const {
    auto it = lists_.find(key);
    return it == lists_.end() ? std::vector<std::string>{} : it->second;
  }

  DForm form(const std::string& key, int degree = 1) const { return parse_form(get(key), space_, degree); }
  RatFun fun(const std::string& key) const { return parse_function(get(key), space_); }
  Poly poly(const std::string& key) const { return parse_poly(get(key), space_); }
  GaussRat constant(const std::string& text) const {
    RatFun f = parse_function(text, space_);
    if (!f.is_constant()) throw ParseError("expected a constant, got " + f.str(), 0);
    return f.num().constant_term();
  }
  std::optional<int> integer(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    try {
      std::size_t used = 0;
      int v = std::stoi(get(key), &used);
      if (used != get(key).size()) throw std::invalid_argument(key);
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("--" + key + " expects an integer", 0);
    }
  }
  /// Comma-separated items of a single input.
  std::vector<std::string> items(const std::string& key) const {
    std::vector<std::string> out;
    if (!has(key)) return out;
    std::stringstream ss(get(key));
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
  }

 private:
  VarSpace space_;
  std::map<std::string, std::string> inputs_;
  std::map<std::string, std::vector<std::string>> lists_;
};

// -------------------------------------------------------------------------
// Subcommands

namespace commands {

inline Pencil pencil(const Invocation& in) { return Pencil{in.form("eta1"), in.form("eta2")}; }

inline Report check_integrable(const Invocation& in) {
  DForm a = in.form("form");
  Report r = is_integrable(a);
  r.value("form", a.str());
  return r;
}

inline Report levi_extract(const Invocation& in) {
  Report r;
  DForm eta;
  if (in.has("eta")) {
    eta = in.form("eta");
  } else {
    DForm omega = in.form("form");
    LeviDecomposition dec = decompose(omega);
    eta = dec.eta;
    DForm recon = real_part(dec.eta) - omega;
    r.check("omega=(eta+conj eta)/2", recon.is_zero(), recon.str());
    r.value("omega_sharp", dec.omega_sharp.str());
    r.value("levi_distribution", levi_distribution(dec).str());
    if (in.has("primitive")) {
      PrimitiveForm pf = primitive_real_part(omega);
      r.value("primitive", pf.omega.str());
      r.value("removed_factor", pf.removed.str());
    }
  }
  r.value("eta", eta.str());
  HolomorphicSigma hs = extract_holomorphic_sigma(eta);
  r.check("Levi foliation holomorphic", hs.holomorphic, "NOT_HOLOMORPHIC: " + hs.failing_ratio.str());
  if (hs.holomorphic) {
    r.value("phi", hs.phi.str());
    r.value("sigma", hs.sigma.str());
    DForm w = wedge(eta, hs.sigma);
    r.check("eta^sigma=0", w.is_zero(), w.str());
  }
  return r;
}

inline Report complexify_cmd(const Invocation& in) {
  Report r;
  Value v = parse_value(in.get("expr"), in.space());
  if (in.space().flavor == Flavor::COMPLEXIFIED) {
    Value out = std::visit([](const auto& x) -> Value { return decomplexify(x); }, v);
    r.value("decomplexified", print(out));
    Value back = std::visit([](const auto& x) -> Value { return complexify(x); }, out);
    r.check("complexify(decomplexify(F))=F", print(back) == print(v), print(back));
    return r;
  }
  Value c = std::visit([](const auto& x) -> Value { return complexify(x); }, v);
  r.value("complexified", print(c));
  Value back = std::visit([](const auto& x) -> Value { return decomplexify(x); }, c);
  r.check("decomplexify(complexify(f))=f", print(back) == print(v), print(back));
  if (auto* f = std::get_if<RatFun>(&v)) {
    RatFun lhs = complexify(mirror_fun(*f)), rhs = mirror_fun(complexify(*f));
    r.check("(f*)_C=(f_C)*", lhs == rhs, (lhs - rhs).str());
    r.info("real-valued", is_real(*f).symmetric);
    r.info("complexification (*)-symmetric", is_star_symmetric(complexify(*f)).symmetric);
    if (in.has("real-factor")) {
      if (!f->is_polynomial()) throw DomainError("--real-factor expects a polynomial");
      auto factor = common_real_factor(f->num());
      r.value("real_factor", factor ? factor->str() : "NONE");
    }
  } else {
    const DForm& a = std::get<DForm>(v);
    r.info("complexification (*)-symmetric", is_star_symmetric(complexify(a)));
  }
  return r;
}

inline Report mirror_cmd(const Invocation& in) {
  Report r;
  Value v = parse_value(in.get("expr"), in.space());
  Value m = std::visit([](const auto& x) -> Value {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, RatFun>)
      return mirror_fun(x);
    else
      return mirror_form(x);
  }, v);
  r.value("mirror", print(m));
  Value mm = std::visit([](const auto& x) -> Value {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, RatFun>)
      return mirror_fun(x);
    else
      return mirror_form(x);
  }, m);
  r.check("mirror involution", print(mm) == print(v), print(mm));
  r.info("(*)-symmetric", print(m) == print(v));
  if (in.has("quotient")) {
    auto* f = std::get_if<RatFun>(&v);
    if (!f) throw DomainError("--quotient expects a function");
    // Keep the representative as written: read numerator and denominator separately.
    Poly num = f->num(), den = f->den();
    if (in.has("num") || in.has("den")) {
      num = in.poly("num");
      den = in.has("den") ? in.poly("den") : Poly::one(in.space());
    }
    SymmetricQuotient q = symmetric_quotient(num, den);
    r.value("G_tilde", q.G_tilde.str());
    r.value("H_tilde", q.H_tilde.str());
    r.value("unit", q.unit.str());
    r.value("alpha", q.alpha.str());
    r.value("obstruction", q.obstruction ? q.obstruction->str() : "none");
    auto sg = is_star_symmetric(q.G_tilde), sh = is_star_symmetric(q.H_tilde);
    r.check("G_tilde (*)-symmetric", sg.symmetric, sg.witness.str());
    r.check("H_tilde (*)-symmetric", sh.symmetric, sh.witness.str());
    Poly cross = q.G_tilde * den - num * q.H_tilde;
    r.check("G_tilde/H_tilde=f", cross.is_zero(), cross.str());
  }
  return r;
}

inline Report tangent_levels(const Invocation& in) { return tangent_to_levels(in.fun("f"), in.form("sigma")); }

inline Report pencil_condition_cmd(const Invocation& in) {
  Pencil p = pencil(in);
  Report r = pencil_condition(p.eta1, p.eta2);
  for (const auto& m : in.list("member")) {
    auto comma = m.find(',');
    if (comma == std::string::npos) throw ParseError("--member expects a,b", 0);
    r.merge(member_integrability(p, in.constant(m.substr(0, comma)), in.constant(m.substr(comma + 1))));
  }
  return r;
}

/// Degree bound and retry count from the inputs and LFK_DEGREE_BOUND.
inline std::pair<std::optional<int>, int> ansatz_bound(const Invocation& in) {
  std::optional<int> bound = in.integer("degree-bound");
  int retries = 3;
  if (!bound) {
    if (const char* env = std::getenv("LFK_DEGREE_BOUND"); env && *env) {
      try {
        bound = std::stoi(env);
      } catch (const std::logic_error&) {
        throw ParseError("LFK_DEGREE_BOUND must be an integer", 0);
      }
    }
  } else {
    retries = 0;
  }
  if (auto r = in.integer("retries")) retries = *r;
  return {bound, retries};
}

inline ThetaResult solve_for(const Invocation& in, const Pencil& p) {
  auto [bound, retries] = ansatz_bound(in);
  std::optional<Poly> den;
  if (in.has("denominator")) den = in.poly("denominator");
  return solve_theta_auto(p, bound, den, retries);
}

inline void report_theta(Report& r, const ThetaResult& t) {
  r.value("status", theta_status_name(t.status));
  r.value("kernel_dim", std::to_string(t.kernel_dim));
  r.value("degree_bound", std::to_string(t.degree_bound));
  r.value("denominator", t.denominator.str());
  r.check("theta solved", t.status == ThetaStatus::SOLVED, theta_status_name(t.status));
  for (std::size_t k = 0; k < t.basis.size(); ++k) r.value("basis" + std::to_string(k + 1), t.basis[k].str());
}

inline Report pencil_theta(const Invocation& in) {
  Pencil p = pencil(in);
  Report r;
  ThetaResult t = solve_for(in, p);
  report_theta(r, t);
  if (!t.cert) return r;
  const DForm& theta = t.cert->theta;
  r.value("theta", theta.str());
  r.value("curvature", t.cert->curvature.str());
  int k = 1;
  for (const DForm* eta : {&p.eta1, &p.eta2}) {
    const std::string tag = "eta" + std::to_string(k++);
    DForm diff = ext_d(*eta) - wedge(theta, *eta);
    r.check("d(" + tag + ")=theta^" + tag, diff.is_zero(), diff.str());
    DForm w = wedge(t.cert->curvature, *eta);
    r.check("d(theta)^" + tag + "=0", w.is_zero(), w.str());
  }
  if (mirror_form(p.eta1) == p.eta2) {
    DForm asym = mirror_form(theta) - theta;
    r.check("theta (*)-symmetric", asym.is_zero(), asym.str());
  }
  return r;
}

inline Report curvature_cmd(const Invocation& in) {
  Pencil p = pencil(in);
  Report r;
  PencilCert cert;
  if (in.has("theta")) {
    DForm theta = in.form("theta");
    cert = PencilCert{theta, ext_d(theta), std::nullopt, std::nullopt, std::nullopt};
  } else {
    ThetaResult t = solve_for(in, p);
    report_theta(r, t);
    if (!t.cert) return r;
    cert = *t.cert;
  }
  r.value("theta", cert.theta.str());
  r.value("curvature", cert.curvature.str());
  const DForm ax = axis(p);
  r.value("axis", ax.str());
  RatioResult a = collinearity_alpha(cert, ax);
  r.check("d(theta) collinear with axis", a.ok, "NOT_COLLINEAR: " + a.witness);
  if (a.ok) {
    cert.alpha = a.ratio;
    r.value("alpha", a.ratio.str());
    std::string mode = in.has("mode") ? in.get("mode") : "auto";
    SubcaseMode m;
    if (mode == "mu")
      m = SubcaseMode::MU;
    else if (mode == "k")
      m = SubcaseMode::K;
    else if (mode == "auto")
      m = a.ratio.is_constant() ? SubcaseMode::MU : SubcaseMode::K;
    else
      throw ParseError("--mode expects mu, k or auto", 0);
    SpanResult s = subcase_coefficients(cert, p, m);
    const std::string name = m == SubcaseMode::MU ? "mu" : "k";
    r.check(name + " coefficients", s.ok, "NO_SOLUTION: " + s.witness);
    if (s.ok) {
      r.value(name + "1", s.coeffs.first.str());
      r.value(name + "2", s.coeffs.second.str());
      if (m == SubcaseMode::K) {
        int idx = 1;
        for (const RatFun* kc : {&s.coeffs.first, &s.coeffs.second}) {
          const std::string q = "k" + std::to_string(idx++) + "^2/alpha";
          RatFun ratio = kc->pow(2) / a.ratio;
          r.info(q + " constant along the axis", wedge(ext_d(ratio), p.eta1, p.eta2).is_zero());
        }
        r.value("k1/k1", "unspecified");
      }
    }
  }
  if (in.has("h")) {
    RatFun h = in.fun("h");
    PencilCert rescaled = unit_rescale_theta(cert, h);
    r.value("theta_rescaled", rescaled.theta.str());
    DForm diff = rescaled.curvature - cert.curvature;
    r.check("curvature invariant under rescaling", diff.is_zero(), diff.str());
  }
  if (in.has("F")) r.merge(axis_first_integral_check(in.fun("F"), p), "axis");
  return r;
}

inline Report classify_dichotomy(const Invocation& in) {
  DichotomyParams params;
  auto [bound, retries] = ansatz_bound(in);
  params.degree_bound = bound;
  params.retries = retries;
  if (in.has("denominator")) params.denominator = parse_poly(in.get("denominator"), in.space().with_flavor(Flavor::COMPLEXIFIED));
  DichotomyReport d = curvature_dichotomy(in.form("form"), params);
  return d.report;
}

inline Report verify_model_a_cmd(const Invocation& in) {
  RatFun h = in.has("h") ? in.fun("h") : RatFun(Poly::one(in.space()));
  return verify_model_a(in.form("form"), in.form("tau"), in.poly("psi"), h);
}

inline Report verify_model_b_cmd(const Invocation& in) {
  return verify_model_b(in.form("form"), in.fun("kappa"), in.fun("rho"));
}

inline LogDecomposition log_decomposition(const Invocation& in) {
  LogDecomposition dec;
  for (const auto& s : in.items("residues")) dec.residues.push_back(in.constant(s));
  for (const auto& s : in.items("poles")) dec.pole_factors.push_back(parse_poly(s, in.space()));
  dec.exact_num = in.has("G") ? in.poly("G") : Poly(in.space());
  for (const auto& s : in.items("exponents")) {
    try {
      dec.exponents.push_back(std::stoi(s));
    } catch (const std::logic_error&) {
      throw ParseError("--exponents expects integers", 0);
    }
  }
  return dec;
}

inline Report verify_log(const Invocation& in) {
  return verify_log_decomposition(in.form("theta"), log_decomposition(in));
}

inline Report projective_check(const Invocation& in) {
  Report r;
  bool any = false;
  if (in.has("form")) {
    any = true;
    r.merge(descent_check(in.form("form")).report);
  }
  if (in.has("eta")) {
    any = true;
    DForm eta = in.form("eta");
    r.merge(radial_check(eta));
    if (auto d = in.integer("d")) r.merge(bidegree_check(eta, *d));
  }
  if (in.has("residues") || in.has("poles")) {
    any = true;
    r.merge(residue_sum_check(log_decomposition(in)));
  }
  if (!any) throw DomainError("projective-check needs --form, --eta or --residues/--poles");
  return r;
}

inline Report example61(const Invocation& in) {
  ParseContext uctx{VarSpace{2, Flavor::REAL_PAIRED, 1}, true};
  Example61 ex = example61_build(in.poly("F"), in.poly("G"), parse_poly(in.get("R"), uctx), parse_poly(in.get("S"), uctx));
  return ex.report;
}

inline Report eval(const Invocation& in) {
  Report r;
  Value v = parse_value(in.get("expr"), in.space());
  r.value("value", print(v));
  if (in.has("expect")) {
    Value e = parse_value(in.get("expect"), in.space());
    r.check("value=expected", print(v) == print(e), print(v));
  }
  return r;
}

}  // namespace commands

// -------------------------------------------------------------------------
// Driver

struct CommandSpec {
  const char* name;
  const char* help;
  std::vector<const char*> options;
  std::vector<const char*> flags;
  Report (*run)(const Invocation&);
};

inline const std::vector<CommandSpec>& command_table() {
  static const std::vector<CommandSpec> table = {
      {"check-integrable", "Frobenius test a^da=0", {"form"}, {}, commands::check_integrable},
      {"levi-extract", "eta, omega#, and the holomorphic Levi equation", {"form", "eta"}, {"primitive"}, commands::levi_extract},
      {"complexify", "complexify (real flavor) or decomplexify", {"expr"}, {"real-factor"}, commands::complexify_cmd},
      {"mirror", "the (*)-operator", {"expr", "num", "den"}, {"quotient"}, commands::mirror_cmd},
      {"tangent-levels", "df^sigma^conj(sigma)=0", {"f", "sigma"}, {}, commands::tangent_levels},
      {"pencil-condition", "integrability of a pencil", {"eta1", "eta2"}, {}, commands::pencil_condition_cmd},
      {"pencil-theta", "connection form of a pencil", {"eta1", "eta2", "degree-bound", "denominator", "retries"}, {},
       commands::pencil_theta},
      {"curvature", "curvature, alpha and subcase coefficients",
       {"eta1", "eta2", "theta", "degree-bound", "denominator", "retries", "mode", "h", "F"}, {}, commands::curvature_cmd},
      {"classify-dichotomy", "zero / nonzero curvature branch of a real form",
       {"form", "degree-bound", "denominator", "retries"}, {}, commands::classify_dichotomy},
      {"verify-model-a", "omega = h|psi|^2 Re(tau)", {"form", "tau", "psi", "h"}, {}, commands::verify_model_a_cmd},
      {"verify-model-b", "omega = Re(kappa d rho)", {"form", "kappa", "rho"}, {}, commands::verify_model_b_cmd},
      {"verify-log", "logarithmic decomposition of theta", {"theta", "residues", "poles", "G", "exponents"}, {},
       commands::verify_log},
      {"projective-check", "descent to projective space", {"form", "eta", "d", "residues", "poles", "G", "exponents"}, {},
       commands::projective_check},
      {"example61", "build Re(kappa d rho) from F, G, R(u1,u2), S(u1,u2)", {"F", "G", "R", "S"}, {}, commands::example61},
      {"eval", "canonical form of an expression", {"expr", "expect"}, {}, commands::eval},
  };
  return table;
}

inline Json report_json(const std::string& command, const Json& inputs, const Report& r, Status verdict,
                        const std::string& message, long long millis) {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["verdict"] = status_name(verdict);
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    Json cj;
    cj["name"] = c.name;
    cj["status"] = status_name(c.status);
    if (!c.witness.empty()) cj["witness"] = c.witness;
    if (!c.note.empty()) cj["note"] = c.note;
    if (c.informational) cj["informational"] = true;
    clauses.push_back(cj);
  }
  j["clauses"] = clauses;
  if (verdict == Status::FAIL) {
    std::string w = r.witness();
    j["witness"] = w;
  }
  if (!message.empty()) j["message"] = message;
  j["millis"] = millis;
  Json results = Json::object();
  for (const auto& [k, v] : r.values) results[k] = v;
  j["results"] = results;
  return j;
}

inline int run_corpus(const std::string& dir, std::ostream& out, bool timing);

/// Runs one invocation (arguments without the program name) and writes the
/// JSON report to `out`. Returns the process exit code.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err = std::cerr) {
  CLI::App app{"Exact symbolic checks for Levi-flat foliations", "lfk"};
  app.require_subcommand(1);
  int dim = 1;
  std::string flavor = "real";
  bool homogeneous = false, no_timing = false;
  std::map<std::string, std::string> values;
  std::map<std::string, std::vector<std::string>> lists;
  std::map<std::string, bool> flags;
  std::vector<std::string> members;
  std::vector<std::string> corpus_args;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dim", dim, "complex dimension n")->check(CLI::PositiveNumber);
    sub->add_option("--flavor", flavor, "real or complexified")->check(CLI::IsMember({"real", "complexified"}));
    sub->add_flag("--homogeneous", homogeneous, "number variables from 0 (homogeneous coordinates)");
    sub->add_flag("--no-timing", no_timing, "report millis as 0");
  };
  for (const auto& spec : command_table()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    // Free "-h" for the --h input of verify-model-a and curvature.
    sub->set_help_flag("--help", "print this help message and exit");
    add_common(sub);
    for (const char* o : spec.options) sub->add_option(std::string("--") + o, values[o]);
    for (const char* f : spec.flags) sub->add_flag(std::string("--") + f, flags[f]);
    if (std::string(spec.name) == "pencil-condition")
      sub->add_option("--member", members, "a,b: also test a*eta1 + b*eta2");
  }
  CLI::App* corpus = app.add_subcommand("corpus", "run every corpus/<section>/<name>.json");
  corpus->add_option("args", corpus_args, "run <dir>")->required()->expected(2);
  corpus->add_flag("--no-timing", no_timing, "report millis as 0");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return EXIT_PASS;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return EXIT_PASS;
  } catch (const CLI::ParseError& e) {
    err << "lfk: " << e.what() << "\n";
    return EXIT_USAGE;
  }

  if (corpus->parsed()) {
    if (corpus_args[0] != "run") {
      err << "lfk: unknown corpus action '" << corpus_args[0] << "'\n";
      return EXIT_USAGE;
    }
    return run_corpus(corpus_args[1], out, !no_timing);
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const CommandSpec* spec = nullptr;
  for (const auto& s : command_table())
    if (command == s.name) spec = &s;

  Json inputs;
  inputs["dim"] = dim;
  inputs["flavor"] = flavor;
  if (homogeneous) inputs["homogeneous"] = true;
  std::map<std::string, std::string> given;
  for (const char* o : spec->options)
    if (sub->count(std::string("--") + o) > 0) {
      given[o] = values[o];
      inputs[o] = values[o];
    }
  for (const char* f : spec->flags)
    if (flags[f]) {
      given[f] = "true";
      inputs[f] = true;
    }
  if (!members.empty()) {
    lists["member"] = members;
    inputs["member"] = members;
  }

  const VarSpace space{dim, flavor == "real" ? Flavor::REAL_PAIRED : Flavor::COMPLEXIFIED, homogeneous ? 0 : 1};
  const auto start = std::chrono::steady_clock::now();
  Report report;
  Status verdict = Status::ERROR;
  std::string message;
  int code = EXIT_FAIL;
  try {
    report = spec->run(Invocation(space, given, lists));
    verdict = report.verdict();
    code = verdict == Status::PASS ? EXIT_PASS : EXIT_FAIL;
  } catch (const ParseError& e) {
    message = std::string("parse error: ") + e.what();
    code = EXIT_PARSE;
  } catch (const WitnessError& e) {
    report.check(e.what(), false, e.witness());
    verdict = Status::FAIL;
    message = e.what();
    code = EXIT_FAIL;
  } catch (const Error& e) {
    message = e.what();
    code = EXIT_FAIL;
  }
  long long millis = 0;
  if (!no_timing)
    millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  out << report_json(command, inputs, report, verdict, message, millis).dump(2) << "\n";
  return code;
}

/// Turns a corpus entry into command-line arguments.
inline std::vector<std::string> corpus_arguments(const Json& doc) {
  std::vector<std::string> args{doc.at("command").get<std::string>()};
  if (doc.contains("dim")) args.insert(args.end(), {"--dim", std::to_string(doc["dim"].get<int>())});
  if (doc.contains("flavor")) args.insert(args.end(), {"--flavor", doc["flavor"].get<std::string>()});
  if (doc.value("homogeneous", false)) args.emplace_back("--homogeneous");
  args.emplace_back("--no-timing");
  if (doc.contains("inputs"))
    for (const auto& [k, v] : doc["inputs"].items()) {
      if (v.is_boolean()) {
        if (v.get<bool>()) args.push_back("--" + k);
      } else if (v.is_array()) {
        for (const auto& item : v) args.insert(args.end(), {"--" + k, item.get<std::string>()});
      } else if (v.is_number_integer()) {
        args.insert(args.end(), {"--" + k, std::to_string(v.get<long>())});
      } else {
        args.insert(args.end(), {"--" + k, v.get<std::string>()});
      }
    }
  return args;
}

/// Compares one corpus entry's outcome with its "expect" block; returns an
/// empty string on agreement, otherwise a description of the mismatch.
inline std::string corpus_mismatch(const Json& doc, const Json& report, int code) {
  const Json& expect = doc.at("expect");
  std::string want = expect.is_string() ? expect.get<std::string>() : expect.value("verdict", "PASS");
  std::ostringstream why;
  if (report.value("verdict", "") != want) why << "verdict " << report.value("verdict", "?") << " != " << want << "; ";
  if (expect.is_object()) {
    if (expect.contains("exit") && expect["exit"].get<int>() != code)
      why << "exit " << code << " != " << expect["exit"].get<int>() << "; ";
    if (expect.contains("results"))
      for (const auto& [k, v] : expect["results"].items()) {
        const Json& res = report["results"];
        std::string got = res.contains(k) ? res[k].get<std::string>() : "<missing>";
        if (got != v.get<std::string>()) why << k << " = " << got << " != " << v.get<std::string>() << "; ";
      }
    if (expect.contains("witness") && expect["witness"].get<bool>() && report.value("witness", "").empty())
      why << "missing witness; ";
  }
  return why.str();
}

inline int run_corpus(const std::string& dir, std::ostream& out, bool timing) {
  namespace fs = std::filesystem;
  const auto start = std::chrono::steady_clock::now();
  std::vector<fs::path> files;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    Report r;
    Json inputs;
    inputs["dir"] = dir;
    out << report_json("corpus", inputs, r, Status::ERROR, "not a directory: " + dir, 0).dump(2) << "\n";
    return EXIT_FAIL;
  }
  for (const auto& entry : fs::recursive_directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  Report r;
  for (const auto& file : files) {
    const std::string name = fs::relative(file, dir).generic_string();
    Json doc;
    try {
      std::ifstream in(file);
      doc = Json::parse(in);
    } catch (const std::exception& e) {
      r.check(name, false, std::string("unreadable corpus file: ") + e.what());
      continue;
    }
    std::ostringstream sink, errsink;
    int code = run_command(corpus_arguments(doc), sink, errsink);
    Json report;
    try {
      report = Json::parse(sink.str());
    } catch (const std::exception&) {
      report["verdict"] = "ERROR";
      report["results"] = Json::object();
    }
    std::string why = corpus_mismatch(doc, report, code);
    r.check(name, why.empty(), why.empty() ? "" : why + errsink.str());
  }
  r.value("files", std::to_string(files.size()));
  Json inputs;
  inputs["dir"] = dir;
  long long millis = 0;
  if (timing)
    millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  Status verdict = r.verdict();
  out << report_json("corpus", inputs, r, verdict, "", millis).dump(2) << "\n";
  return verdict == Status::PASS ? EXIT_PASS : EXIT_FAIL;
}

}  // namespace lfk::cli
