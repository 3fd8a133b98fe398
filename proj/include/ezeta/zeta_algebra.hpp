#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ezeta/extended_complex.hpp"
#include "ezeta/lattice.hpp"
#include "ezeta/weierstrass.hpp"
#include "ezeta/whpoly.hpp"

namespace ezeta {

/// Coefficients of the canonical primitive Phi_n z + Psi_n zeta(z) of wp^n.
struct PhiPsi {
  WHPoly phi;
  WHPoly psi;
};

/// Exact (Phi_n, Psi_n) for n >= -1 from
///   u_{n+1} = (2n-1)/(4(2n+1)) g2 u_{n-1} + (n-1)/(2(2n+1)) g3 u_{n-2}
/// started at Phi_{-1} = Psi_{-1} = 0, (Phi_0, Psi_0) = (1, 0),
/// (Phi_1, Psi_1) = (0, -1). Results are memoized; the cache is safe to
/// fill from several threads. Throws std::invalid_argument for n < -1.
PhiPsi phi_psi(int n);

/// f_n = Phi_n / Psi_n, or nullopt when Psi_n == 0 (n = 2). n >= 1.
std::optional<RationalFn> f_n(int n);

struct ZetaTableRow {
  int n;
  WHPoly phi;
  WHPoly psi;
  std::optional<RationalFn> f;
  int weight_phi;
  int weight_psi;
};

/// Rows 1..max_n.
std::vector<ZetaTableRow> zeta_table(int max_n);

/// Substitutes g2(tau), g3(tau).
cplx eval_whpoly(const WHPoly& p, const ModularPoint& tau, const QSeriesConfig& cfg = {});

/// d/dtau of p(g2(tau), g3(tau)), by the chain rule with analytic g2', g3'.
cplx eval_whpoly_derivative(const WHPoly& p, const ModularPoint& tau, const QSeriesConfig& cfg = {});

/// f_n(tau); inf where Psi_n(tau) vanishes.
ExtComplex f_n_eval(int n, const ModularPoint& tau, const QSeriesConfig& cfg = {});

/// h_n(tau) = tau - 2 pi i / (f_n(tau) + eta1), which equals H_n(tau) / H_n(1).
/// Returns tau when Psi_n == 0 and inf where the denominator vanishes.
ExtComplex h_n_eval(int n, const ModularPoint& tau, const EvalConfig& cfg = {});

}  // namespace ezeta
