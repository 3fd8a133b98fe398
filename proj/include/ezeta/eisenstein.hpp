#pragma once

#include "ezeta/extended_complex.hpp"
#include "ezeta/lattice.hpp"

namespace ezeta {

/// Truncation control for q-series.
struct QSeriesConfig {
  int terms = 64;

  /// Throws std::invalid_argument if terms < 1.
  void validate() const;
};

/// sum_{d | n} d^k, exactly.
BigInt sigma_divisor(unsigned k, unsigned long long n);

// Raw truncated q-expansions at tau, no reduction. Accurate only when
// Im(tau) is not small; the wrappers below are the ones to call.
namespace series {
cplx e2(cplx tau, int terms);      // 1 - 24 sum sigma_1(n) q^n
cplx e4(cplx tau, int terms);      // 1 + 240 sum sigma_3(n) q^n
cplx e6(cplx tau, int terms);      // 1 - 504 sum sigma_5(n) q^n
cplx delta(cplx tau, int terms);   // q prod (1 - q^n)^24
}  // namespace series

/// The q-expansions evaluated after moving tau into the fundamental domain
/// and transforming back, so every tau in H gets full accuracy.
cplx e2(const ModularPoint& tau, const QSeriesConfig& cfg = {});
cplx e4(const ModularPoint& tau, const QSeriesConfig& cfg = {});
cplx e6(const ModularPoint& tau, const QSeriesConfig& cfg = {});

struct G2G3 {
  cplx g2;
  cplx g3;
};

/// g2 = 60 sum' w^-4 = (4 pi^4 / 3) E4 and g3 = 140 sum' w^-6 = (8 pi^6 / 27) E6
/// for the lattice Z + tau Z.
G2G3 g2_g3(const ModularPoint& tau, const QSeriesConfig& cfg = {});

/// The Eisenstein-summed G2 = sum_c sum'_d (c tau + d)^-2 = (pi^2 / 3) E2.
/// This is the normalization for which eta(1) = G2 holds.
cplx g_big2(const ModularPoint& tau, const QSeriesConfig& cfg = {});

/// Discriminant q prod (1 - q^n)^24; never zero on H.
cplx delta(const ModularPoint& tau, const QSeriesConfig& cfg = {});

/// d/dtau of delta, 2 pi i E2 delta.
cplx delta_prime(const ModularPoint& tau, const QSeriesConfig& cfg = {});

/// Derivatives of g2 and g3 in tau through Ramanujan's identities.
G2G3 g2_g3_prime(const ModularPoint& tau, const QSeriesConfig& cfg = {});

/// Derivative of E2 in tau, 2 pi i (E2^2 - E4) / 12.
cplx e2_prime(const ModularPoint& tau, const QSeriesConfig& cfg = {});

/// Bound on the E2 truncation error, 25 sum_{n > terms} n^2 |q|^n, at the
/// point actually fed to the series (the reduced tau).
double e2_truncation_bound(const ModularPoint& tau, const QSeriesConfig& cfg = {});

struct EisensteinValues {
  cplx g2, g3, e2, g_big2, delta;
  cplx tau;
};

EisensteinValues eisenstein_values(const ModularPoint& tau, const QSeriesConfig& cfg = {});

}  // namespace ezeta
