#include "drinfeld/commands.hpp"

#include <chrono>
#include <sstream>

#include "drinfeld/checks.hpp"
#include "drinfeld/class_group.hpp"
#include "drinfeld/error.hpp"
#include "drinfeld/parse.hpp"
#include "drinfeld/zeta.hpp"

namespace drinfeld {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

json coeff_json(const GaloisField& F, GaloisField::Raw c) {
  if (F.degree() == 1) return c;
  return F.digits(c);
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(); }

json separation_matrix(const std::vector<std::vector<std::optional<int>>>& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(optional_int(v));
    out.push_back(r);
  }
  return out;
}

std::string structure_string(const std::vector<std::int64_t>& inv) {
  if (inv.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < inv.size(); ++i) s += (i ? " x Z/" : "Z/") + std::to_string(inv[i]);
  return s;
}

struct Context {
  const RunConfig& cfg;
  ModelPtr model;
  ZetaOptions zopts;
  json results = json::object();
  json checks = json::array();
  std::vector<std::string> summary;
  json timing = json::object();

  void check(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
  }
  template <class F>
  auto timed(const std::string& what, F&& f) {
    auto t0 = Clock::now();
    auto r = f();
    timing[what] = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
  }
};

FracIdeal lattice_of(const Context& c) {
  return c.cfg.ideal.empty() ? FracIdeal::unit(*c.model) : parse_ideal(*c.model, c.cfg.ideal);
}

json module_json(const DrinfeldModule& mod) {
  json exp = json::array();
  for (std::size_t n = 0; n < mod.exp_coeffs.size(); ++n)
    exp.push_back({{"n", n}, {"xi_weight", mod.exp_coeffs[n].xi_weight}, {"value", series_json(mod.exp_coeffs[n].value)}});
  json rho = json::array();
  for (std::size_t i = 0; i < mod.generators.size(); ++i)
    rho.push_back({{"generator", mod.generators[i].to_string()}, {"coeffs", twisted_json(mod.rho_generators[i], &mod)}});
  return {{"lattice", mod.lattice.to_string()}, {"precision", mod.precision}, {"exponential", exp}, {"rho", rho}};
}

json torsion_json(const TorsionReport& rep) {
  json pts = json::array();
  for (const auto& p : rep.points) {
    json imgs = json::array();
    for (const auto& i : p.images) imgs.push_back(series_json(i));
    pts.push_back({{"m", p.m.to_string()}, {"e_m", series_json(p.value)}, {"images", imgs}, {"digits", optional_int(p.digits)}});
  }
  json ann = json::array();
  for (const auto& a : rep.annihilators) ann.push_back(a.to_string());
  return {{"annihilators", ann}, {"points", pts}, {"pass", rep.pass}, {"min_digits", rep.min_digits}};
}

void cmd_classgroup(Context& c) {
  IdealClassTable T = c.timed("class_group", [&] { return class_group(*c.model); });
  json reps = json::array();
  for (std::size_t i = 0; i < T.order(); ++i)
    reps.push_back({{"index", i},
                    {"ideal", T.representative(i).to_string()},
                    {"norm_degree", T.representative(i).norm_degree()},
                    {"order", T.element_order(i)}});
  json table = json::array();
  for (std::size_t i = 0; i < T.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < T.order(); ++j) row.push_back(T.multiply(i, j));
    table.push_back(row);
  }
  const std::string st = structure_string(T.invariant_factors());
  c.results = {{"h", T.order()},
               {"narrow_h", T.narrow_order()},
               {"invariant_factors", T.invariant_factors()},
               {"structure", st},
               {"degree_bound", T.degree_bound()},
               {"representatives", reps},
               {"multiplication", table}};
  if (T.order() == 1)
    c.summary.push_back("trivial, h=1");
  else
    c.summary.push_back("Cl(A) ≅ " + st + ", h=" + std::to_string(T.order()) + ", h¹=" + std::to_string(T.narrow_order()));
  c.check("order_matches_point_count", static_cast<std::int64_t>(T.order()) == T.expected_order(),
          "L-polynomial predicts " + std::to_string(T.expected_order()));
}

void cmd_jtable(Context& c) {
  IdealClassTable T = class_group(*c.model);
  JTable jt = c.timed("j_table", [&] { return j_table(T, c.cfg.prec, c.zopts); });
  ZetaOptions alt = c.zopts;
  alt.alternate_signs = true;
  JTable other = c.timed("j_table_alternate_signs", [&] { return j_table(T, c.cfg.prec, alt); });
  json entries = json::array();
  bool s_indep = true;
  for (std::size_t i = 0; i < jt.entries.size(); ++i) {
    const JValue& e = jt.entries[i];
    entries.push_back({{"class", i},
                       {"ideal", T.representative(i).to_string()},
                       {"J", series_json(e.J)},
                       {"j", series_json(e.j)},
                       {"precision", e.precision}});
    s_indep = s_indep && !separation(e.j, other.entries[i].j);
  }
  c.results = {{"h", T.order()},
               {"entries", entries},
               {"j_separation", separation_matrix(jt.j_separation)},
               {"J_separation", separation_matrix(jt.J_separation)},
               {"distinct", jt.pairwise_distinct()}};
  std::ostringstream os;
  os << jt.entries.size() << " j-value" << (jt.entries.size() == 1 ? "" : "s") << ", "
     << (jt.pairwise_distinct() ? "pairwise distinct" : "NOT distinct");
  c.summary.push_back(os.str());
  for (std::size_t i = 0; i < jt.entries.size(); ++i)
    c.summary.push_back("j[" + std::to_string(i) + "] = " + jt.entries[i].j.to_string());
  c.check("pairwise_distinct", jt.pairwise_distinct(), "");
  c.check("sign_set_independence", s_indep, "j recomputed with the alternate sign set");
}

void add_torsion(Context& c, const DrinfeldModule& mod, const std::string& lit) {
  FracIdeal M = parse_modulus(*c.model, lit);
  TorsionReport rep = c.timed("torsion", [&] { return torsion_check(mod, M, c.cfg.prec); });
  c.results["torsion"] = torsion_json(rep);
  c.results["torsion"]["modulus"] = M.to_string();
  c.summary.push_back(std::to_string(rep.points.size()) + " torsion points for " + M.to_string() + ", min " +
                      std::to_string(rep.min_digits) + " digits of cancellation");
  c.check("torsion_annihilated", rep.pass, "rho_beta(e(m)) = 0 for all m");
}

void cmd_drinfeld(Context& c) {
  FracIdeal L = lattice_of(c);
  DrinfeldModule mod = c.timed("build_module", [&] { return build_module(L, c.cfg.prec, 3, c.zopts); });
  c.results = module_json(mod);
  json fes = json::array();
  for (const auto& g : mod.generators) {
    FunctionalEquationReport fe = verify_functional_equation(mod, g, 3);
    json disc = json::array();
    for (const auto& d : fe.discrepancy) disc.push_back(optional_int(d));
    fes.push_back({{"a", g.to_string()}, {"pass", fe.pass}, {"discrepancy", disc}, {"certified_digits", fe.certified_digits}});
    c.check("functional_equation_" + g.to_string(), fe.pass, std::to_string(fe.certified_digits) + " digits");
  }
  c.results["functional_equation"] = fes;
  c.summary.push_back("module of " + L.to_string() + " with " + std::to_string(mod.precision) + " certified digits");
  if (c.model->d_inf() == 1) {
    SignNormalization sn = sign_normalization_analysis(mod);
    json gens = json::array();
    for (const auto& g : sn.normalized_generators) gens.push_back(twisted_json(g));
    json cons = json::array();
    for (const auto& v : sn.consistency) cons.push_back(optional_int(v));
    c.results["normalization"] = {{"solvable", sn.solvable},
                                  {"detail", sn.detail},
                                  {"w", sn.w ? series_json(*sn.w) : json()},
                                  {"normalized_rho", gens},
                                  {"consistency", cons}};
    if (c.model->is_rational() && L == FracIdeal::unit(*c.model) && sn.solvable) {
      DrinfeldModule ref = carlitz_reference(*c.model, c.cfg.prec, 3);
      bool ok = true;
      for (int n = 0; n <= 3; ++n) ok = ok && !separation(sn.normalized_exp_coeffs.at(n), ref.exp_coeffs.at(n).value);
      const TwistedSeries& r = sn.normalized_generators.at(0);
      ok = ok && r.degree() == 1 && !separation(r.coeff(1), LaurentSeries::one(c.model->inf_field(), c.cfg.prec));
      c.check("carlitz_agreement", ok, "normalized module against the Carlitz module");
      c.summary.push_back(std::string("normalized: ") + (ok ? "Carlitz module T + tau" : "differs from Carlitz"));
    }
  } else {
    c.results["normalization"] = {{"solvable", false},
                                  {"detail", "d_inf = 2: normalization needs a twisted sign function (unsupported)"}};
  }
  if (!c.cfg.modulus.empty()) add_torsion(c, mod, c.cfg.modulus);
}

void cmd_torsion(Context& c) {
  FracIdeal L = lattice_of(c);
  DrinfeldModule mod = c.timed("build_module", [&] { return build_module(L, c.cfg.prec, 3, c.zopts); });
  c.results["lattice"] = L.to_string();
  add_torsion(c, mod, c.cfg.modulus.empty() ? "(x)" : c.cfg.modulus);
}

void cmd_star(Context& c) {
  IdealClassTable T = class_group(*c.model);
  const FracIdeal L = FracIdeal::unit(*c.model);
  DrinfeldModule mod = c.timed("build_module", [&] { return build_module(L, c.cfg.prec + 16, 3, c.zopts); });
  JTable jt = c.timed("j_table", [&] { return j_table(T, c.cfg.prec, c.zopts); });
  std::vector<FracIdeal> bs;
  if (!c.cfg.ideal.empty())
    bs.push_back(parse_ideal(*c.model, c.cfg.ideal));
  else
    bs = T.representatives();
  json acts = json::array();
  for (const auto& B : bs) {
    StarActionResult st = c.timed("star " + B.to_string(), [&] { return star_action(mod, B); });
    std::size_t target = T.class_of(B.inverse() * L);
    JValue jv = j_from_module(st.image, c.cfg.prec);
    std::optional<std::size_t> hit;
    int hits = 0;
    for (std::size_t k = 0; k < jt.entries.size(); ++k)
      if (!separation(jv.j, jt.entries[k].j)) {
        hit = k;
        ++hits;
      }
    bool ok = hits == 1 && *hit == target;
    json rho = json::array();
    for (std::size_t i = 0; i < st.image.generators.size(); ++i)
      rho.push_back({{"generator", st.image.generators[i].to_string()}, {"coeffs", twisted_json(st.image.rho_generators[i])}});
    acts.push_back({{"b", B.to_string()},
                    {"iso", twisted_json(st.iso)},
                    {"image_rho", rho},
                    {"image_j", series_json(jv.j)},
                    {"target_class", target},
                    {"matched_class", hit ? json(*hit) : json()},
                    {"remainder_floor", st.remainder_floor}});
    c.check("star " + B.to_string(), ok, "image j matches class " + std::to_string(target));
    c.summary.push_back(B.to_string() + " * rho: deg rho_b = " + std::to_string(st.iso.degree()) + ", lands on class " +
                        (hit ? std::to_string(*hit) : std::string("none")) + " (expected " + std::to_string(target) + ")");
  }
  c.results = {{"lattice", L.to_string()}, {"actions", acts}};
}

void cmd_verify(Context& c) {
  SuiteOptions o;
  o.prec = std::min(c.cfg.prec, 30);
  o.seed = c.cfg.seed;
  auto res = run_suite(c.cfg.suite, o);
  json list = json::array();
  for (const auto& r : res) {
    c.check(r.name, r.pass, r.detail);
    c.timing[r.name] = r.seconds;
    list.push_back({{"name", r.name}, {"pass", r.pass}, {"data", r.data}});
  }
  c.results = {{"suite", c.cfg.suite}, {"checks", list}};
}

json config_json(const RunConfig& cfg, const CurveSpec* spec) {
  json j = {{"command", cfg.command}, {"prec", cfg.prec}, {"seed", cfg.seed}, {"out", cfg.out}};
  if (!cfg.curve_path.empty()) j["curve_file"] = cfg.curve_path;
  if (spec) j["curve"] = curve_spec_to_json(*spec);
  if (!cfg.ideal.empty()) j["ideal"] = cfg.ideal;
  if (!cfg.modulus.empty()) j["modulus"] = cfg.modulus;
  if (cfg.command == "verify") j["suite"] = cfg.suite;
  if (cfg.extra_degrees) j["extra_degrees"] = cfg.extra_degrees;
  return j;
}

}  // namespace

const char* command_names() { return "classgroup|jtable|drinfeld|torsion|star|verify"; }

json series_json(const LaurentSeries& s) {
  json c = json::array();
  for (auto v : s.coefficients()) c.push_back(coeff_json(s.field(), v));
  return {{"start", s.valuation()}, {"prec", s.precision()}, {"coeffs", c}};
}

json twisted_json(const TwistedSeries& f, const DrinfeldModule* weights) {
  json out = json::array();
  for (int k = 0; k <= f.degree(); ++k) {
    json t = {{"k", k}, {"value", series_json(f.coeff(k))}};
    if (weights) t["xi_weight"] = weights->coefficient_weight(k);
    out.push_back(t);
  }
  return out;
}

CommandResult run_command(const RunConfig& cfg) {
  CommandResult out;
  std::optional<CurveSpec> spec;
  json report = {{"command", cfg.command}};
  auto t0 = Clock::now();
  try {
    if (cfg.prec < 8) throw Error(ErrorCode::PrecisionTooLow, "--prec must be at least 8");
    if (cfg.command != "verify") {
      if (cfg.curve)
        spec = *cfg.curve;
      else if (!cfg.curve_path.empty())
        spec = load_curve_spec(cfg.curve_path);
      else
        throw Error(ErrorCode::ParseError, "--curve is required for " + cfg.command);
    }
    report["config"] = config_json(cfg, spec ? &*spec : nullptr);
    Context c{cfg, spec ? CurveModel::create(*spec) : nullptr, {}, json::object(), json::array(), {}, json::object()};
    c.zopts.extra_truncation = cfg.extra_degrees;
    if (c.model) report["curve"] = c.model->describe();
    if (cfg.command == "classgroup")
      cmd_classgroup(c);
    else if (cfg.command == "jtable")
      cmd_jtable(c);
    else if (cfg.command == "drinfeld")
      cmd_drinfeld(c);
    else if (cfg.command == "torsion")
      cmd_torsion(c);
    else if (cfg.command == "star")
      cmd_star(c);
    else if (cfg.command == "verify")
      cmd_verify(c);
    else
      throw Error(ErrorCode::ParseError, "unknown command '" + cfg.command + "' (expected " + command_names() + ")");
    bool pass = true;
    for (const auto& ch : c.checks) pass = pass && ch["pass"].get<bool>();
    report["results"] = c.results;
    report["summary"] = c.summary;
    report["checks"] = c.checks;
    report["pass"] = pass;
    out.exit_code = pass ? ExitCode::Pass : ExitCode::VerificationFailed;
    if (cfg.timing) {
      c.timing["total"] = std::chrono::duration<double>(Clock::now() - t0).count();
      report["timing"] = c.timing;
    }
  } catch (const Error& e) {
    if (!report.contains("config")) report["config"] = config_json(cfg, spec ? &*spec : nullptr);
    report["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    report["pass"] = false;
    bool input = e.is_input_error() || e.code() == ErrorCode::PrecisionTooLow;
    out.exit_code = input ? ExitCode::InputError : ExitCode::NumericError;
  }
  out.report = std::move(report);
  return out;
}

std::string render_text(const json& r) {
  std::ostringstream os;
  os << r.value("command", std::string("?"));
  if (r.contains("curve")) os << " on " << r["curve"].get<std::string>();
  if (r.contains("config")) os << " (prec " << r["config"].value("prec", 0) << ", seed " << r["config"].value("seed", 0) << ")";
  os << "\n";
  if (r.contains("error")) {
    os << "error: " << r["error"]["message"].get<std::string>() << "\n";
    return os.str();
  }
  for (const auto& s : r.value("summary", json::array())) os << "  " << s.get<std::string>() << "\n";
  for (const auto& ch : r.value("checks", json::array())) {
    os << (ch["pass"].get<bool>() ? "  PASS " : "  FAIL ") << ch["name"].get<std::string>();
    std::string d = ch.value("detail", std::string());
    if (!d.empty()) os << ": " << d;
    os << "\n";
  }
  if (r.contains("timing"))
    for (auto it = r["timing"].begin(); it != r["timing"].end(); ++it)
      os << "  time " << it.key() << ": " << it.value().get<double>() << " s\n";
  os << (r.value("pass", false) ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace drinfeld
