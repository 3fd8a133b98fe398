#include "ezeta/eisenstein.hpp"

#include <cmath>
#include <stdexcept>

#include "reduction.hpp"

namespace ezeta {

void QSeriesConfig::validate() const {
  if (terms < 1) throw std::invalid_argument("QSeriesConfig: terms must be >= 1");
}

BigInt sigma_divisor(unsigned k, unsigned long long n) {
  if (k < 1 || n < 1) throw std::invalid_argument("sigma_divisor: k and n must be positive");
  BigInt sum = 0;
  for (unsigned long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += boost::multiprecision::pow(BigInt(d), k);
    const unsigned long long e = n / d;
    if (e != d) sum += boost::multiprecision::pow(BigInt(e), k);
  }
  return sum;
}

namespace series {
namespace {

// sum_{n=1}^{terms} n^k q^n / (1 - q^n), which equals sum sigma_k(n) q^n.
cplx lambert(cplx tau, int k, int terms) {
  const cplx q = std::exp(kTwoPiI * tau);
  cplx qn = 1.0;
  cplx sum = 0.0;
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    if (qn == cplx(0.0, 0.0)) break;
    sum += std::pow(static_cast<double>(n), k) * qn / (1.0 - qn);
  }
  return sum;
}

}  // namespace

cplx e2(cplx tau, int terms) { return 1.0 - 24.0 * lambert(tau, 1, terms); }
cplx e4(cplx tau, int terms) { return 1.0 + 240.0 * lambert(tau, 3, terms); }
cplx e6(cplx tau, int terms) { return 1.0 - 504.0 * lambert(tau, 5, terms); }

cplx delta(cplx tau, int terms) {
  const cplx q = std::exp(kTwoPiI * tau);
  cplx qn = 1.0;
  cplx prod = 1.0;
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    prod *= 1.0 - qn;
  }
  const cplx p2 = prod * prod;
  const cplx p4 = p2 * p2;
  const cplx p8 = p4 * p4;
  const cplx p16 = p8 * p8;
  return q * p16 * p8;
}

}  // namespace series

namespace {

constexpr double kPi2 = kPi * kPi;
constexpr double kPi4 = kPi2 * kPi2;
constexpr double kPi6 = kPi4 * kPi2;
constexpr double kG2Const = 4.0 * kPi4 / 3.0;
constexpr double kG3Const = 8.0 * kPi6 / 27.0;

}  // namespace

cplx e2(const ModularPoint& tau, const QSeriesConfig& cfg) {
  cfg.validate();
  const auto r = detail::reduce(tau);
  // E2(gamma tau) = j^2 E2(tau) + 6 c j / (pi i)
  const cplx at_reduced = series::e2(r.tau_reduced, cfg.terms);
  return (at_reduced - 6.0 * r.c * r.j / cplx(0.0, kPi)) / (r.j * r.j);
}

cplx e4(const ModularPoint& tau, const QSeriesConfig& cfg) {
  cfg.validate();
  const auto r = detail::reduce(tau);
  return series::e4(r.tau_reduced, cfg.terms) / std::pow(r.j, 4);
}

cplx e6(const ModularPoint& tau, const QSeriesConfig& cfg) {
  cfg.validate();
  const auto r = detail::reduce(tau);
  return series::e6(r.tau_reduced, cfg.terms) / std::pow(r.j, 6);
}

G2G3 g2_g3(const ModularPoint& tau, const QSeriesConfig& cfg) {
  return {kG2Const * e4(tau, cfg), kG3Const * e6(tau, cfg)};
}

cplx g_big2(const ModularPoint& tau, const QSeriesConfig& cfg) {
  return (kPi2 / 3.0) * e2(tau, cfg);
}

cplx delta(const ModularPoint& tau, const QSeriesConfig& cfg) {
  cfg.validate();
  const auto r = detail::reduce(tau);
  return series::delta(r.tau_reduced, cfg.terms) / std::pow(r.j, 12);
}

cplx delta_prime(const ModularPoint& tau, const QSeriesConfig& cfg) {
  return kTwoPiI * e2(tau, cfg) * delta(tau, cfg);
}

G2G3 g2_g3_prime(const ModularPoint& tau, const QSeriesConfig& cfg) {
  const cplx E2 = e2(tau, cfg);
  const cplx E4 = e4(tau, cfg);
  const cplx E6 = e6(tau, cfg);
  // q dE4/dq = (E2 E4 - E6) / 3,  q dE6/dq = (E2 E6 - E4^2) / 2
  return {kG2Const * kTwoPiI * (E2 * E4 - E6) / 3.0, kG3Const * kTwoPiI * (E2 * E6 - E4 * E4) / 2.0};
}

cplx e2_prime(const ModularPoint& tau, const QSeriesConfig& cfg) {
  const cplx E2 = e2(tau, cfg);
  return kTwoPiI * (E2 * E2 - e4(tau, cfg)) / 12.0;
}

double e2_truncation_bound(const ModularPoint& tau, const QSeriesConfig& cfg) {
  cfg.validate();
  const auto r = detail::reduce(tau);
  const double aq = std::exp(-2.0 * kPi * r.tau_reduced.imag());
  double bound = 0.0;
  double qn = std::pow(aq, cfg.terms);
  for (int n = cfg.terms + 1; n <= cfg.terms + 2000; ++n) {
    qn *= aq;
    const double term = 25.0 * static_cast<double>(n) * n * qn;
    bound += term;
    if (term < 1e-30 * bound || qn == 0.0) break;
  }
  return bound;
}

EisensteinValues eisenstein_values(const ModularPoint& tau, const QSeriesConfig& cfg) {
  const auto g = g2_g3(tau, cfg);
  const cplx E2 = e2(tau, cfg);
  return {g.g2, g.g3, E2, (kPi2 / 3.0) * E2, delta(tau, cfg), tau.tau()};
}

}  // namespace ezeta
