#include "ezeta/forms.hpp"

#include <stdexcept>
#include <string>

#include "ezeta/correspondence.hpp"
#include "ezeta/eisenstein.hpp"
#include "ezeta/zeta_algebra.hpp"

namespace ezeta {

FormDescriptor zero_form() {
  return {"zero", 2, CongruenceGroup::full(), [](const ModularPoint&) { return ExtComplex(0.0); },
          TauFunction([](const ModularPoint&) { return ExtComplex(0.0); })};
}

FormDescriptor delta_form(const EvalConfig& cfg) {
  const auto q = cfg.qseries;
  return {"delta", 12, CongruenceGroup::full(),
          [q](const ModularPoint& t) { return ExtComplex(delta(t, q)); },
          TauFunction([q](const ModularPoint& t) { return ExtComplex(delta_prime(t, q)); })};
}

FormDescriptor g2_form(const EvalConfig& cfg) {
  const auto q = cfg.qseries;
  return {"g2", 4, CongruenceGroup::full(),
          [q](const ModularPoint& t) { return ExtComplex(g2_g3(t, q).g2); },
          TauFunction([q](const ModularPoint& t) { return ExtComplex(g2_g3_prime(t, q).g2); })};
}

FormDescriptor g3_form(const EvalConfig& cfg) {
  const auto q = cfg.qseries;
  return {"g3", 6, CongruenceGroup::full(),
          [q](const ModularPoint& t) { return ExtComplex(g2_g3(t, q).g3); },
          TauFunction([q](const ModularPoint& t) { return ExtComplex(g2_g3_prime(t, q).g3); })};
}

FormDescriptor e2_form(const EvalConfig& cfg) {
  const auto q = cfg.qseries;
  return {"E2", 2, CongruenceGroup::full(), [q](const ModularPoint& t) { return ExtComplex(e2(t, q)); },
          TauFunction([q](const ModularPoint& t) { return ExtComplex(e2_prime(t, q)); })};
}

FormDescriptor f_n_form(int n, const EvalConfig& cfg) {
  if (n < 1) throw std::invalid_argument("f_n_form: n must be >= 1");
  const auto pp = phi_psi(n);
  if (pp.psi.is_zero()) throw std::invalid_argument("f_n_form: Psi_" + std::to_string(n) + " is zero");
  const auto q = cfg.qseries;
  auto value = [n, q](const ModularPoint& t) { return f_n_eval(n, t, q); };
  auto derivative = [pp, q](const ModularPoint& t) -> ExtComplex {
    const cplx phi = eval_whpoly(pp.phi, t, q), psi = eval_whpoly(pp.psi, t, q);
    const cplx dphi = eval_whpoly_derivative(pp.phi, t, q);
    const cplx dpsi = eval_whpoly_derivative(pp.psi, t, q);
    return safe_divide(dphi * psi - phi * dpsi, psi * psi);
  };
  return {"f_n:" + std::to_string(n), 2, CongruenceGroup::full(), value, TauFunction(derivative)};
}

FormDescriptor stock_weight2_form(int level, const EvalConfig& cfg) {
  if (level < 2) throw std::invalid_argument("stock_weight2_form: level must be >= 2");
  const auto q = cfg.qseries;
  const double n = level;
  auto value = [n, q](const ModularPoint& t) {
    return ExtComplex(e2(t, q) - n * e2(ModularPoint(n * t.tau()), q));
  };
  auto derivative = [n, q](const ModularPoint& t) {
    return ExtComplex(e2_prime(t, q) - n * n * e2_prime(ModularPoint(n * t.tau()), q));
  };
  return {"gamma0_stock:" + std::to_string(level), 2, CongruenceGroup::gamma0(level), value,
          TauFunction(derivative)};
}

EllipticZetaSpec identity_zeta() {
  return {"identity", 1, CongruenceGroup::full(), [](const ModularPoint&) { return ExtComplex(1.0); },
          [](const ModularPoint&) { return ExtComplex(0.0); }};
}

EllipticZetaSpec weierstrass_zeta() {
  return {"weierstrass", -1, CongruenceGroup::full(), [](const ModularPoint&) { return ExtComplex(0.0); },
          [](const ModularPoint&) { return ExtComplex(1.0); }};
}

EllipticZetaSpec zeta_n(int n, const EvalConfig& cfg) {
  if (n < 0) throw std::invalid_argument("zeta_n: n must be >= 0");
  const auto pp = phi_psi(n);
  const auto q = cfg.qseries;
  return {"Z_n:" + std::to_string(n), 1 - 2 * n, CongruenceGroup::full(),
          [phi = pp.phi, q](const ModularPoint& t) { return ExtComplex(eval_whpoly(phi, t, q)); },
          [psi = pp.psi, q](const ModularPoint& t) { return ExtComplex(eval_whpoly(psi, t, q)); }};
}

EquivariantFn identity_equivariant() {
  return {"identity", CongruenceGroup::full(), [](const ModularPoint& t) { return ExtComplex(t.tau()); },
          true};
}

EquivariantFn eta_ratio(const EvalConfig& cfg) {
  return {"eta_ratio", CongruenceGroup::full(), [cfg](const ModularPoint& t) {
            const auto e = eta_pair(t, cfg);
            return safe_divide(e.eta2, e.eta1);
          }};
}

EquivariantFn h_n_equivariant(int n, const EvalConfig& cfg) {
  if (n < 1) throw std::invalid_argument("h_n_equivariant: n must be >= 1");
  return {"h_n:" + std::to_string(n), CongruenceGroup::full(),
          [n, cfg](const ModularPoint& t) { return h_n_eval(n, t, cfg); }, phi_psi(n).psi.is_zero()};
}

namespace {

int parse_index(std::string_view text, std::string_view what) {
  try {
    std::size_t used = 0;
    const std::string s(text);
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad index in " + std::string(what) + ": '" + std::string(text) + "'");
  }
}

bool take_prefix(std::string_view& name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return false;
  name.remove_prefix(prefix.size());
  return true;
}

}  // namespace

FormDescriptor form_by_name(std::string_view name, const EvalConfig& cfg) {
  if (name == "zero") return zero_form();
  if (name == "delta") return delta_form(cfg);
  if (name == "g2") return g2_form(cfg);
  if (name == "g3") return g3_form(cfg);
  if (name == "E2") return e2_form(cfg);
  std::string_view rest = name;
  if (take_prefix(rest, "f_n:")) return f_n_form(parse_index(rest, name), cfg);
  if (take_prefix(rest, "gamma0_stock:")) return stock_weight2_form(parse_index(rest, name), cfg);
  throw std::invalid_argument("unknown form: " + std::string(name));
}

EllipticZetaSpec zeta_by_name(std::string_view name, const EvalConfig& cfg) {
  if (name == "weierstrass") return weierstrass_zeta();
  if (name == "identity") return identity_zeta();
  std::string_view rest = name;
  if (take_prefix(rest, "Z_n:")) return zeta_n(parse_index(rest, name), cfg);
  if (take_prefix(rest, "lift:")) return lift_form_to_zeta(form_by_name(rest, cfg));
  throw std::invalid_argument("unknown elliptic zeta: " + std::string(name));
}

EquivariantFn equivariant_by_name(std::string_view name, const EvalConfig& cfg) {
  if (name == "identity") return identity_equivariant();
  if (name == "eta_ratio") return eta_ratio(cfg);
  std::string_view rest = name;
  if (take_prefix(rest, "h_n:")) return h_n_equivariant(parse_index(rest, name), cfg);
  if (take_prefix(rest, "M:")) return m_transform(form_by_name(rest, cfg), cfg);
  if (take_prefix(rest, "h_f:")) return h_from_form(form_by_name(rest, cfg));
  throw std::invalid_argument("unknown equivariant function: " + std::string(name));
}

}  // namespace ezeta
