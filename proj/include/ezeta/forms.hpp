#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "ezeta/extended_complex.hpp"
#include "ezeta/gamma_subgroups.hpp"
#include "ezeta/lattice.hpp"
#include "ezeta/weierstrass.hpp"

namespace ezeta {

/// A meromorphic function of tau in the upper half-plane.
using TauFunction = std::function<ExtComplex(const ModularPoint&)>;

/// A (claimed) meromorphic modular form. The weight is declared, not
/// trusted; verify_weight checks it.
struct FormDescriptor {
  std::string name;
  int weight = 0;
  CongruenceGroup group;
  TauFunction evaluator;
  std::optional<TauFunction> derivative;  // d/dtau, analytic when known

  ExtComplex operator()(const ModularPoint& tau) const { return evaluator(tau); }
};

/// Canonical elliptic zeta function Z = Phi z + Psi zeta(z); the elliptic
/// remainder is dropped since nothing downstream depends on it.
struct EllipticZetaSpec {
  std::string name;
  int weight_k = 0;
  CongruenceGroup group;
  TauFunction phi;  // homogeneous of weight k - 1
  TauFunction psi;  // homogeneous of weight k + 1
};

/// A function claimed to commute with the group action.
struct EquivariantFn {
  std::string name;
  CongruenceGroup group;
  TauFunction evaluator;
  bool trivial = false;  // h = tau

  ExtComplex operator()(const ModularPoint& tau) const { return evaluator(tau); }
};

// Stock forms. Evaluators capture cfg by value.
FormDescriptor zero_form();
FormDescriptor delta_form(const EvalConfig& cfg = {});
FormDescriptor g2_form(const EvalConfig& cfg = {});
FormDescriptor g3_form(const EvalConfig& cfg = {});
/// E2 declared at weight 2. It is only quasi-modular, which makes it the
/// standard negative control for verify_weight.
FormDescriptor e2_form(const EvalConfig& cfg = {});
/// f_n = Phi_n / Psi_n (weight 2). Throws std::invalid_argument when Psi_n == 0.
FormDescriptor f_n_form(int n, const EvalConfig& cfg = {});
/// E2(tau) - N E2(N tau), a holomorphic weight-2 form for Gamma0(N), N >= 2.
FormDescriptor stock_weight2_form(int level, const EvalConfig& cfg = {});

// Stock elliptic zeta functions.
EllipticZetaSpec identity_zeta();                        // Z = z, weight 1
EllipticZetaSpec weierstrass_zeta();                     // Z = zeta, weight -1
EllipticZetaSpec zeta_n(int n, const EvalConfig& cfg = {});  // Phi_n z + Psi_n zeta, weight 1 - 2n

// Stock equivariant functions.
EquivariantFn identity_equivariant();
/// eta(tau) / eta(1).
EquivariantFn eta_ratio(const EvalConfig& cfg = {});
/// h_n from the recurrence table.
EquivariantFn h_n_equivariant(int n, const EvalConfig& cfg = {});

/// Registry names: "zero", "delta", "g2", "g3", "E2", "f_n:<n>", "gamma0_stock:<N>".
FormDescriptor form_by_name(std::string_view name, const EvalConfig& cfg = {});
/// "weierstrass", "identity", "Z_n:<n>", "lift:<form name>".
EllipticZetaSpec zeta_by_name(std::string_view name, const EvalConfig& cfg = {});
/// "identity", "eta_ratio", "h_n:<n>", "M:<form name>", "h_f:<form name>".
EquivariantFn equivariant_by_name(std::string_view name, const EvalConfig& cfg = {});

}  // namespace ezeta
