#pragma once

#include <cstdint>

#include "ezeta/eisenstein.hpp"
#include "ezeta/extended_complex.hpp"
#include "ezeta/lattice.hpp"

namespace ezeta {

struct EvalConfig {
  QSeriesConfig qseries{};
  int direct_sum_radius = 200;  // only read by lattice-sum oracles
  int quad_points = 128;

  void validate() const;
};

/// Quasi-periods (eta(1), eta(tau)) of the Weierstrass zeta function of
/// Z + tau Z. They satisfy eta2 - tau * eta1 = -2 pi i.
struct QuasiPeriodPair {
  cplx eta1;
  cplx eta2;
  cplx tau;
};

/// Lattice points closer than this (in the reduced frame) are treated as poles.
inline constexpr double kPoleEpsilon = 1e-12;

/// Weierstrass p of Z + tau Z; inf on the lattice.
ExtComplex wp(const ModularPoint& tau, cplx z, const EvalConfig& cfg = {});
/// d/dz of wp; inf on the lattice.
ExtComplex wp_prime(const ModularPoint& tau, cplx z, const EvalConfig& cfg = {});
/// Weierstrass zeta of Z + tau Z, continued off the cell by quasi-periodicity.
ExtComplex zeta_w(const ModularPoint& tau, cplx z, const EvalConfig& cfg = {});

/// zeta(L, z) = omega1^-1 zeta(Z + tau Z, z / omega1).
ExtComplex zeta_general(const Lattice& lattice, cplx z, const EvalConfig& cfg = {});
/// wp(L, z) = omega1^-2 wp(Z + tau Z, z / omega1).
ExtComplex wp_general(const Lattice& lattice, cplx z, const EvalConfig& cfg = {});

/// Closed form (G2(tau), tau G2(tau) - 2 pi i).
QuasiPeriodPair eta_pair(const ModularPoint& tau, const EvalConfig& cfg = {});

/// eta(omega) = 2 zeta(omega / 2) at the half-periods 1/2 and tau/2, summed
/// straight from the cell expansion. Independent of eta_pair.
QuasiPeriodPair eta_pair_from_half_periods(const ModularPoint& tau, const EvalConfig& cfg = {});

/// eta(m + n tau) = m eta(1) + n eta(tau).
cplx eta_of(const ModularPoint& tau, std::int64_t m, std::int64_t n, const EvalConfig& cfg = {});
/// eta_L(m omega1 + n omega2), by weight -1 homogeneity.
cplx eta_of(const Lattice& lattice, std::int64_t m, std::int64_t n, const EvalConfig& cfg = {});

/// eta(tau) - tau eta(1) + 2 pi i from the half-period values; zero when the
/// Legendre relation omega2 eta(omega1) - omega1 eta(omega2) = 2 pi i holds.
cplx legendre_defect(const ModularPoint& tau, const EvalConfig& cfg = {});

/// Gauss-Legendre quadrature of wp^n along the straight segment
/// z0 -> z0 + m + k tau. Throws std::domain_error if the segment comes
/// within kPathPoleClearance of a lattice point.
inline constexpr double kPathPoleClearance = 1e-3;
cplx period_integral_wp_power(unsigned n, const ModularPoint& tau, std::int64_t m, std::int64_t k,
                              cplx z0, const EvalConfig& cfg = {});

}  // namespace ezeta
