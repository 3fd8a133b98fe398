#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ezeta/forms.hpp"

namespace ezeta {

/// Phi(tau) z + Psi(tau) zeta(Z + tau Z, z).
ExtComplex zeta_eval(const EllipticZetaSpec& zeta, const ModularPoint& tau, cplx z,
                     const EvalConfig& cfg = {});

/// Z on an arbitrary lattice: with L = omega1 (Z + tau Z),
/// Phi_L = omega1^(k-1) Phi(tau), Psi_L = omega1^(k+1) Psi(tau).
ExtComplex zeta_eval_lattice(const EllipticZetaSpec& zeta, const Lattice& lattice, cplx z,
                             const EvalConfig& cfg = {});

struct ZetaQuasiPeriods {
  ExtComplex h1;    // H(1)
  ExtComplex htau;  // H(tau)
};

/// H(omega) = Phi omega + Psi eta(omega) at omega = 1, tau.
ZetaQuasiPeriods quasi_periods(const EllipticZetaSpec& zeta, const ModularPoint& tau,
                               const EvalConfig& cfg = {});

/// Inverts [H(tau); H(1)] = M_(1,tau) [Phi; Psi] with
/// M_(1,tau) = [tau eta(tau); 1 eta(1)], det M = tau eta(1) - eta(tau) = 2 pi i.
std::pair<cplx, cplx> phi_psi_from_H(cplx h1, cplx htau, const ModularPoint& tau,
                                     const EvalConfig& cfg = {});

/// Probes f at 8 fixed pseudo-random points; true when every value is
/// finite with modulus below 1e-12.
bool identically_zero(const TauFunction& f);

/// Z -> Phi / Psi, a weight-2 form. Throws std::invalid_argument when
/// Psi vanishes identically.
FormDescriptor modular_from_zeta(const EllipticZetaSpec& zeta);

/// Z -> H(tau) / H(1). Throws std::invalid_argument when H(1) vanishes
/// identically.
EquivariantFn equivariant_from_zeta(const EllipticZetaSpec& zeta, const EvalConfig& cfg = {});

/// h = M_(1,tau) f = (tau f + eta(tau)) / (f + eta(1)).
EquivariantFn m_transform(const FormDescriptor& form, const EvalConfig& cfg = {});

/// f = M_(1,tau)^-1 h. Throws std::invalid_argument for h = tau.
FormDescriptor m_inverse(const EquivariantFn& h, const EvalConfig& cfg = {});

/// h_f = tau + k f / f'. Uses the registered derivative, otherwise a central
/// difference with step kDerivativeStep. Throws for weight 0.
inline constexpr double kDerivativeStep = 1e-5;
EquivariantFn h_from_form(const FormDescriptor& form);

/// Z(L, z) = omega1^-2 f(omega2 / omega1) z + zeta(L, z), weight -1.
/// Throws std::invalid_argument unless the form has weight 2.
EllipticZetaSpec lift_form_to_zeta(const FormDescriptor& form);

/// Central-difference derivative of f at tau.
ExtComplex finite_difference(const TauFunction& f, const ModularPoint& tau, double step = kDerivativeStep);

struct Witness {
  UnimodularMatrix gamma = UnimodularMatrix::identity();
  cplx tau;
  ExtComplex lhs;  // value at gamma tau
  ExtComplex rhs;  // transformed value at tau
};

struct VerificationReport {
  std::size_t samples = 0;
  std::size_t skipped = 0;
  double max_defect = 0.0;
  double tol = 0.0;
  bool passed = true;
  std::optional<Witness> worst;
};

/// Uniform points in [-1/2, 1/2] x [sqrt(3)/2, 2].
std::vector<ModularPoint> sample_taus(std::size_t count, std::uint64_t seed);

/// Group elements for verification: random S/T words for SL2(Z), the
/// congruence sampler otherwise.
std::vector<UnimodularMatrix> verification_elements(const CongruenceGroup& group, std::size_t count,
                                                    std::uint64_t seed);

/// Max over pairs of the inf-aware defect between h(gamma tau) and gamma h(tau).
VerificationReport check_equivariance(const EquivariantFn& h, std::span<const UnimodularMatrix> gammas,
                                      std::span<const ModularPoint> taus, double tol);
VerificationReport verify_equivariance(const EquivariantFn& h, std::size_t samples, std::uint64_t seed,
                                       double tol);

/// Max relative defect |f(gamma tau) / ((c tau + d)^k f(tau)) - 1|; pairs
/// where both sides are exactly zero are skipped.
VerificationReport check_weight(const FormDescriptor& f, std::span<const UnimodularMatrix> gammas,
                                std::span<const ModularPoint> taus, double tol);
VerificationReport verify_weight(const FormDescriptor& f, std::size_t samples, std::uint64_t seed,
                                 double tol);

}  // namespace ezeta
