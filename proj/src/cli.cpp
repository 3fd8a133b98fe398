#include "ezeta/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ezeta/correspondence.hpp"
#include "ezeta/eisenstein.hpp"
#include "ezeta/verify.hpp"
#include "ezeta/zeta_algebra.hpp"

namespace ezeta {

namespace {

using json = nlohmann::json;

constexpr std::size_t kCorrespondSamples = 5;

struct CliConfig {
  EvalConfig eval;
  double tol = 1e-7;
  std::uint64_t seed = 42;
  std::string output = "json";
};

json to_json(cplx v) { return {{"re", v.real()}, {"im", v.imag()}}; }

json to_json(const ExtComplex& v) { return v.is_infinite() ? json("inf") : to_json(v.value()); }

int parse_suffix(const std::string& name, std::string_view prefix) {
  const std::string rest = name.substr(prefix.size());
  if (!std::regex_match(rest, std::regex("-?[0-9]+"))) throw std::invalid_argument("bad index in " + name);
  return std::stoi(rest);
}

ExtComplex eval_function(const std::string& fn, const ModularPoint& tau, const std::optional<cplx>& z,
                         const EvalConfig& cfg) {
  auto need_z = [&]() {
    if (!z) throw std::invalid_argument(fn + " needs --z");
    return *z;
  };
  if (fn == "wp") return wp(tau, need_z(), cfg);
  if (fn == "wp_prime") return wp_prime(tau, need_z(), cfg);
  if (fn == "zeta") return zeta_w(tau, need_z(), cfg);
  if (fn == "eta1") return eta_pair(tau, cfg).eta1;
  if (fn == "eta2") return eta_pair(tau, cfg).eta2;
  if (fn == "g2") return g2_g3(tau, cfg.qseries).g2;
  if (fn == "g3") return g2_g3(tau, cfg.qseries).g3;
  if (fn == "G2") return g_big2(tau, cfg.qseries);
  if (fn == "E2") return e2(tau, cfg.qseries);
  if (fn == "delta") return delta(tau, cfg.qseries);
  if (fn.starts_with("f_n:")) {
    const int n = parse_suffix(fn, "f_n:");
    if (n < 1) throw std::invalid_argument("f_n needs n >= 1");
    return f_n_eval(n, tau, cfg.qseries);
  }
  if (fn.starts_with("h_n:")) {
    const int n = parse_suffix(fn, "h_n:");
    if (n < 1) throw std::invalid_argument("h_n needs n >= 1");
    return h_n_eval(n, tau, cfg);
  }
  throw std::invalid_argument("unknown function: " + fn);
}

std::string format_complex(double re, double im) {
  std::ostringstream os;
  os.precision(17);
  os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  return os.str();
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im")) {
    out << prefix << " = " << format_complex(j["re"].get<double>(), j["im"].get<double>()) << "\n";
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const json& j, const CliConfig& cli, std::ostream& out) {
  if (cli.output == "text")
    flatten(j, "", out);
  else
    out << j.dump(2) << "\n";
}

json table_json(int max_n) {
  json rows = json::array();
  for (const auto& row : zeta_table(max_n)) {
    rows.push_back({{"n", row.n},
                    {"phi", row.phi.to_string()},
                    {"psi", row.psi.to_string()},
                    {"f", row.f ? json(row.f->to_string()) : json(nullptr)},
                    {"h", row.f ? "tau - 2 pi i / (f + eta1)" : "tau"},
                    {"weight_phi", row.weight_phi},
                    {"weight_psi", row.weight_psi}});
  }
  return {{"max_n", max_n}, {"rows", rows}};
}

// Typesets g2^k as g_2^{k}; coefficients stay as p/q.
std::string latex_poly(std::string s) {
  s = std::regex_replace(s, std::regex("g([23])\\^([0-9]+)"), "g_$1^{$2}");
  s = std::regex_replace(s, std::regex("g([23])(?![_0-9])"), "g_$1");
  return s;
}

void print_table(int max_n, const std::string& format, const CliConfig& cli, std::ostream& out) {
  if (format == "json") {
    emit(table_json(max_n), cli, out);
    return;
  }
  const auto rows = zeta_table(max_n);
  if (format == "latex") {
    out << "\\begin{array}{|c|c|c|c|c|}\n\\hline\nn & \\Phi_n & \\Psi_n & f_n & h_n \\\\\n\\hline\n";
    for (const auto& r : rows) {
      out << r.n << " & " << latex_poly(r.phi.to_string()) << " & " << latex_poly(r.psi.to_string()) << " & "
          << (r.f ? latex_poly(r.f->to_string()) : "-") << " & "
          << (r.f ? "\\tau - \\frac{2\\pi i}{f_n + \\eta_1}" : "\\tau") << " \\\\\n";
    }
    out << "\\hline\n\\end{array}\n";
    return;
  }
  for (const auto& r : rows) {
    out << "n=" << r.n << "\n  Phi = " << r.phi.to_string() << "  (weight " << r.weight_phi << ")\n  Psi = "
        << r.psi.to_string() << "  (weight " << r.weight_psi << ")\n  f   = "
        << (r.f ? r.f->to_string() : "undefined") << "\n  h   = "
        << (r.f ? "tau - 2 pi i / (f + eta1)" : "tau") << "\n";
  }
}

json sample_values(const TauFunction& f, const CliConfig& cli) {
  json samples = json::array();
  for (const auto& t : sample_taus(kCorrespondSamples, cli.seed))
    samples.push_back({{"tau", to_json(t.tau())}, {"value", to_json(f(t))}});
  return samples;
}

double roundtrip_defect(const TauFunction& f, const TauFunction& g, const CliConfig& cli) {
  double d = 0.0;
  for (const auto& t : sample_taus(kCorrespondSamples, cli.seed)) {
    const double m = match_defect(f(t), g(t));
    d = std::isnan(m) ? INFINITY : std::max(d, m);
  }
  return d;
}

json correspond(const std::string& form, const std::string& equivariant, const std::string& direction,
                const CliConfig& cli) {
  const auto& cfg = cli.eval;
  json j{{"direction", direction}};
  double defect = 0.0;
  if (!form.empty()) {
    const auto f = form_by_name(form, cfg);
    j["input"] = {{"kind", "form"}, {"name", f.name}, {"weight", f.weight}, {"group", f.group.to_string()}};
    if (direction == "to-equivariant") {
      const auto h = m_transform(f, cfg);
      j["result"] = {{"kind", "equivariant"}, {"name", h.name}, {"group", h.group.to_string()}};
      j["samples"] = sample_values(h.evaluator, cli);
      defect = roundtrip_defect(m_inverse(h, cfg).evaluator, f.evaluator, cli);
    } else if (direction == "to-zeta") {
      const auto z = lift_form_to_zeta(f);
      j["result"] = {{"kind", "elliptic_zeta"}, {"name", z.name}, {"weight", z.weight_k},
                     {"group", z.group.to_string()}};
      json samples = json::array();
      for (const auto& t : sample_taus(kCorrespondSamples, cli.seed))
        samples.push_back({{"tau", to_json(t.tau())}, {"phi", to_json(z.phi(t))}, {"psi", to_json(z.psi(t))}});
      j["samples"] = samples;
      defect = roundtrip_defect(modular_from_zeta(z).evaluator, f.evaluator, cli);
    } else {
      throw std::invalid_argument("--form takes --direction to-equivariant or to-zeta");
    }
  } else {
    if (direction != "to-form") throw std::invalid_argument("--equivariant takes --direction to-form");
    const auto h = equivariant_by_name(equivariant, cfg);
    j["input"] = {{"kind", "equivariant"}, {"name", h.name}, {"group", h.group.to_string()}};
    const auto f = m_inverse(h, cfg);
    j["result"] = {{"kind", "form"}, {"name", f.name}, {"weight", f.weight}, {"group", f.group.to_string()}};
    j["samples"] = sample_values(f.evaluator, cli);
    defect = roundtrip_defect(m_transform(f, cfg).evaluator, h.evaluator, cli);
  }
  j["roundtrip_defect"] = defect;
  j["roundtrip_ok"] = defect <= cli.tol;
  return j;
}

json verify_json(const std::vector<CriterionResult>& results, const std::string& suite,
                 const VerifyOptions& opt) {
  json criteria = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"measured", std::isfinite(r.measured) ? json(r.measured) : json("inf")},
                        {"threshold", r.threshold},
                        {"time_limit_s", r.time_limit},
                        {"detail", r.detail}});
  }
  return {{"suite", suite},
          {"group", opt.group.to_string()},
          {"samples", opt.samples},
          {"seed", opt.seed},
          {"passed", all},
          {"criteria", criteria}};
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  static const std::string num = R"((?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)";
  static const std::regex full("^([+-]?" + num + ")?(?:([+-]?)(" + num + ")?i)?$");
  const std::string s(text);
  std::smatch m;
  if (s.empty() || !std::regex_match(s, m, full))
    throw std::invalid_argument("cannot parse complex number '" + s + "'");
  const bool has_imag = s.back() == 'i';
  // A lone signed number before the 'i' ("2.5i", "-3i") is the imaginary part.
  if (has_imag && m[1].matched && m[2].length() == 0 && !m[3].matched) return {0.0, std::stod(m[1].str())};
  if (has_imag && m[1].matched && m[2].length() == 0)
    throw std::invalid_argument("cannot parse complex number '" + s + "'");
  const double re = m[1].matched ? std::stod(m[1].str()) : 0.0;
  double im = 0.0;
  if (has_imag) {
    im = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (m[2].str() == "-") im = -im;
  }
  return {re, im};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic zeta functions, quasi-periods and their modular correspondences", "ezeta"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cli;
  app.add_option("--terms", cli.eval.qseries.terms, "q-series terms")->capture_default_str();
  app.add_option("--direct-radius", cli.eval.direct_sum_radius, "direct lattice sum radius")->capture_default_str();
  app.add_option("--quad-points", cli.eval.quad_points, "Gauss-Legendre nodes")->capture_default_str();
  app.add_option("--tol", cli.tol, "tolerance for round-trip checks, in (0, 1)")->capture_default_str();
  app.add_option("--seed", cli.seed, "sampling seed")->capture_default_str();
  app.add_option("--output", cli.output, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string fn, tau_text, z_text, zeta_name = "weierstrass";
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a function at tau (and z)");
  eval_cmd->add_option("fn", fn, "wp, wp_prime, zeta, eta1, eta2, g2, g3, G2, E2, delta, f_n:<n>, h_n:<n>")
      ->required();
  eval_cmd->add_option("--tau", tau_text, "a+bi with b > 0")->required();
  eval_cmd->add_option("--z", z_text, "a+bi");

  auto* qp_cmd = app.add_subcommand("quasiperiods", "H(1), H(tau) of an elliptic zeta function");
  qp_cmd->add_option("--tau", tau_text, "a+bi with b > 0")->required();
  qp_cmd->add_option("--zeta", zeta_name, "weierstrass, identity, Z_n:<n>, lift:<form>")->capture_default_str();

  int max_n = 6;
  std::string format = "json";
  auto* table_cmd = app.add_subcommand("table", "exact Phi_n, Psi_n, f_n, h_n");
  table_cmd->add_option("--max-n", max_n, "last row")->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--format", format, "json, text or latex")
      ->check(CLI::IsMember({"json", "text", "latex"}))
      ->capture_default_str();

  std::string form, equivariant, direction;
  auto* corr_cmd = app.add_subcommand("correspond", "apply a correspondence and sample the result");
  auto* form_opt = corr_cmd->add_option("--form", form, "zero, delta, g2, g3, E2, f_n:<n>, gamma0_stock:<N>");
  auto* eq_opt = corr_cmd->add_option("--equivariant", equivariant,
                                      "identity, eta_ratio, h_n:<n>, M:<form>, h_f:<form>");
  form_opt->excludes(eq_opt);
  corr_cmd->add_option("--direction", direction, "to-equivariant, to-zeta or to-form")
      ->required()
      ->check(CLI::IsMember({"to-equivariant", "to-zeta", "to-form"}));

  std::string suite = "all", group = "SL2Z";
  std::size_t samples = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run acceptance checks");
  verify_cmd->add_option("--suite", suite, "all, legendre, equivariance, weights, table, triangle, periods")
      ->check(CLI::IsMember({"all", "legendre", "equivariance", "weights", "table", "triangle", "periods"}))
      ->capture_default_str();
  verify_cmd->add_option("--group", group, "SL2Z, Gamma0(N), Gamma1(N), Gamma(N)")->capture_default_str();
  verify_cmd->add_option("--samples", samples, "sample count per check (0 keeps the defaults)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    cli.eval.validate();
    if (!(cli.tol > 0.0 && cli.tol < 1.0)) throw std::invalid_argument("--tol must lie in (0, 1)");
    if (eval_cmd->parsed()) {
      const ModularPoint tau(parse_complex(tau_text));
      std::optional<cplx> z;
      if (!z_text.empty()) z = parse_complex(z_text);
      json j{{"fn", fn}, {"tau", to_json(tau.tau())}, {"value", to_json(eval_function(fn, tau, z, cli.eval))}};
      if (z) j["z"] = to_json(*z);
      emit(j, cli, out);
    } else if (qp_cmd->parsed()) {
      const ModularPoint tau(parse_complex(tau_text));
      const auto zeta = zeta_by_name(zeta_name, cli.eval);
      const auto h = quasi_periods(zeta, tau, cli.eval);
      emit({{"zeta", zeta.name},
            {"tau", to_json(tau.tau())},
            {"H1", to_json(h.h1)},
            {"Htau", to_json(h.htau)},
            {"legendre_defect", to_json(legendre_defect(tau, cli.eval))}},
           cli, out);
    } else if (table_cmd->parsed()) {
      print_table(max_n, format, cli, out);
    } else if (corr_cmd->parsed()) {
      if (form.empty() && equivariant.empty()) throw std::invalid_argument("correspond needs --form or --equivariant");
      emit(correspond(form, equivariant, direction, cli), cli, out);
    } else if (verify_cmd->parsed()) {
      VerifyOptions opt;
      opt.cfg = cli.eval;
      opt.seed = cli.seed;
      opt.samples = samples;
      opt.group = CongruenceGroup::parse(group);
      const auto results = run_suite(suite, opt);
      const json j = verify_json(results, suite, opt);
      emit(j, cli, out);
      return j["passed"].get<bool>() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace ezeta
