#include "ezeta/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ezeta/quadrature.hpp"
#include "reduction.hpp"

namespace ezeta {

void EvalConfig::validate() const {
  qseries.validate();
  if (direct_sum_radius < 1 || quad_points < 1)
    throw std::invalid_argument("EvalConfig: all fields must be positive");
}

namespace {

const cplx kI{0.0, 1.0};

// pi cot(pi z) and pi^2 csc^2(pi z) through w = exp(+-2 pi i z), |w| <= 1,
// so nothing overflows when |Im z| is large.
struct Trig {
  cplx pi_cot;
  cplx pi2_csc2;
};

Trig trig(cplx z) {
  const bool upper = z.imag() >= 0.0;
  const cplx w = std::exp((upper ? 1.0 : -1.0) * kTwoPiI * z);
  const cplx cot = (upper ? kI : -kI) * (w + 1.0) / (w - 1.0);
  const cplx csc2 = -4.0 * w / ((1.0 - w) * (1.0 - w));
  return {kPi * cot, kPi * kPi * csc2};
}

// Fourier parts of zeta, wp and wp' on the reduced cell:
//   odd  = sum q^n sin(2 pi n z) / (1 - q^n) * n^p
//   even = sum q^n cos(2 pi n z) / (1 - q^n) * n
// Each q^n e^{+-2 pi i n z} is formed as a power of e^{2 pi i (tau +- z)},
// which is small because |Im z| < Im tau on the cell.
struct Fourier {
  cplx sin_sum;    // sum q^n sin / (1 - q^n)
  cplx cos_sum1;   // sum n q^n cos / (1 - q^n)
  cplx sin_sum2;   // sum n^2 q^n sin / (1 - q^n)
};

Fourier fourier(cplx tau, cplx z, int terms) {
  const cplx q = std::exp(kTwoPiI * tau);
  const cplx a = std::exp(kTwoPiI * (tau + z));
  const cplx b = std::exp(kTwoPiI * (tau - z));
  cplx qn = 1.0, an = 1.0, bn = 1.0;
  Fourier f{0.0, 0.0, 0.0};
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    an *= a;
    bn *= b;
    const cplx inv = 1.0 / (1.0 - qn);
    const cplx s = (an - bn) / (2.0 * kI) * inv;
    const cplx c = (an + bn) / 2.0 * inv;
    const double dn = n;
    f.sin_sum += s;
    f.cos_sum1 += dn * c;
    f.sin_sum2 += dn * dn * s;
  }
  return f;
}

cplx eta1_closed(cplx tau_reduced, int terms) {
  return (kPi * kPi / 3.0) * series::e2(tau_reduced, terms);
}

cplx zeta_cell(cplx tau, cplx eta1, cplx z, int terms) {
  const auto t = trig(z);
  return eta1 * z + t.pi_cot + 4.0 * kPi * fourier(tau, z, terms).sin_sum;
}

cplx wp_cell(cplx tau, cplx eta1, cplx z, int terms) {
  const auto t = trig(z);
  return -eta1 + t.pi2_csc2 - 8.0 * kPi * kPi * fourier(tau, z, terms).cos_sum1;
}

cplx wp_prime_cell(cplx tau, cplx z, int terms) {
  const auto t = trig(z);
  return -2.0 * t.pi2_csc2 * t.pi_cot + 16.0 * kPi * kPi * kPi * fourier(tau, z, terms).sin_sum2;
}

// z mapped into the reduced lattice and then into its cell.
struct Frame {
  detail::Reduced red;
  CellReduction cell;
  cplx eta1;  // closed-form quasi-periods of the reduced lattice
  cplx eta2;
};

Frame frame(const ModularPoint& tau, cplx z, const EvalConfig& cfg) {
  cfg.validate();
  const auto red = detail::reduce(tau);
  const ModularPoint reduced(red.tau_reduced);
  const auto cell = lattice_reduce_point(z / red.j, reduced);
  const cplx e1 = eta1_closed(red.tau_reduced, cfg.qseries.terms);
  return {red, cell, e1, red.tau_reduced * e1 - kTwoPiI};
}

bool on_lattice(const Frame& f) { return std::abs(f.cell.z0) <= kPoleEpsilon; }

}  // namespace

ExtComplex wp(const ModularPoint& tau, cplx z, const EvalConfig& cfg) {
  const auto f = frame(tau, z, cfg);
  if (on_lattice(f)) return ExtComplex::infinity();
  const cplx v = wp_cell(f.red.tau_reduced, f.eta1, f.cell.z0, cfg.qseries.terms);
  return v / (f.red.j * f.red.j);
}

ExtComplex wp_prime(const ModularPoint& tau, cplx z, const EvalConfig& cfg) {
  const auto f = frame(tau, z, cfg);
  if (on_lattice(f)) return ExtComplex::infinity();
  const cplx v = wp_prime_cell(f.red.tau_reduced, f.cell.z0, cfg.qseries.terms);
  return v / (f.red.j * f.red.j * f.red.j);
}

ExtComplex zeta_w(const ModularPoint& tau, cplx z, const EvalConfig& cfg) {
  const auto f = frame(tau, z, cfg);
  if (on_lattice(f)) return ExtComplex::infinity();
  const cplx cell = zeta_cell(f.red.tau_reduced, f.eta1, f.cell.z0, cfg.qseries.terms);
  const cplx v = cell + static_cast<double>(f.cell.m) * f.eta1 + static_cast<double>(f.cell.n) * f.eta2;
  return v / f.red.j;
}

ExtComplex zeta_general(const Lattice& lattice, cplx z, const EvalConfig& cfg) {
  const auto norm = normalize_to_tau(lattice);
  const auto v = zeta_w(norm.tau, z / norm.scale, cfg);
  if (v.is_infinite()) return v;
  return v.value() / norm.scale;
}

ExtComplex wp_general(const Lattice& lattice, cplx z, const EvalConfig& cfg) {
  const auto norm = normalize_to_tau(lattice);
  const auto v = wp(norm.tau, z / norm.scale, cfg);
  if (v.is_infinite()) return v;
  return v.value() / (norm.scale * norm.scale);
}

QuasiPeriodPair eta_pair(const ModularPoint& tau, const EvalConfig& cfg) {
  cfg.validate();
  const cplx e1 = g_big2(tau, cfg.qseries);
  return {e1, tau.tau() * e1 - kTwoPiI, tau.tau()};
}

QuasiPeriodPair eta_pair_from_half_periods(const ModularPoint& tau, const EvalConfig& cfg) {
  cfg.validate();
  const auto red = detail::reduce(tau);
  const int terms = cfg.qseries.terms;
  const cplx t = red.tau_reduced;
  const cplx e1_closed = eta1_closed(t, terms);
  // Quasi-periods of the reduced lattice, eta'(w) = 2 zeta'(w / 2).
  const cplx e1r = 2.0 * zeta_cell(t, e1_closed, 0.5, terms);
  const cplx e2r = 2.0 * zeta_cell(t, e1_closed, 0.5 * t, terms);
  // Z + tau Z = j (Z + tau' Z) with 1 = j (a - c tau'), tau = j (d tau' - b),
  // and eta is Z-linear and homogeneous of weight -1.
  const cplx e1 = (red.a * e1r - red.c * e2r) / red.j;
  const cplx e2 = (red.d * e2r - red.b * e1r) / red.j;
  return {e1, e2, tau.tau()};
}

cplx eta_of(const ModularPoint& tau, std::int64_t m, std::int64_t n, const EvalConfig& cfg) {
  if (m == 0 && n == 0) return 0.0;
  const auto e = eta_pair(tau, cfg);
  return static_cast<double>(m) * e.eta1 + static_cast<double>(n) * e.eta2;
}

cplx eta_of(const Lattice& lattice, std::int64_t m, std::int64_t n, const EvalConfig& cfg) {
  const auto norm = normalize_to_tau(lattice);
  return eta_of(norm.tau, m, n, cfg) / norm.scale;
}

cplx legendre_defect(const ModularPoint& tau, const EvalConfig& cfg) {
  const auto e = eta_pair_from_half_periods(tau, cfg);
  return e.eta2 - tau.tau() * e.eta1 + kTwoPiI;
}

namespace {

double segment_distance(cplx p, cplx a, cplx b) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  double t = len2 > 0.0 ? ((p - a) * std::conj(ab)).real() / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

void check_path_clearance(const ModularPoint& tau, cplx start, cplx end) {
  const cplx t = tau.tau();
  auto coords = [&](cplx z) {
    const double y = z.imag() / t.imag();
    return std::pair{z.real() - y * t.real(), y};
  };
  const auto [x0, y0] = coords(start);
  const auto [x1, y1] = coords(end);
  const double xl = std::floor(std::min(x0, x1)) - 1, xh = std::ceil(std::max(x0, x1)) + 1;
  const double yl = std::floor(std::min(y0, y1)) - 1, yh = std::ceil(std::max(y0, y1)) + 1;
  if ((xh - xl) * (yh - yl) > 1e6) throw std::domain_error("period_integral_wp_power: path too long");
  for (double m = xl; m <= xh; m += 1.0)
    for (double n = yl; n <= yh; n += 1.0)
      if (segment_distance(m + n * t, start, end) < kPathPoleClearance)
        throw std::domain_error("period_integral_wp_power: path passes too close to a pole");
}

}  // namespace

cplx period_integral_wp_power(unsigned n, const ModularPoint& tau, std::int64_t m, std::int64_t k,
                              cplx z0, const EvalConfig& cfg) {
  cfg.validate();
  const cplx omega = static_cast<double>(m) + static_cast<double>(k) * tau.tau();
  if (n == 0) return omega;
  check_path_clearance(tau, z0, z0 + omega);
  const auto rule = gauss_legendre(cfg.quad_points);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const cplx u = z0 + 0.5 * (rule.nodes[i] + 1.0) * omega;
    const auto p = wp(tau, u, cfg);
    if (p.is_infinite()) throw std::domain_error("period_integral_wp_power: node on a pole");
    cplx pn = 1.0;
    for (unsigned e = 0; e < n; ++e) pn *= p.value();
    sum += rule.weights[i] * pn;
  }
  return 0.5 * omega * sum;
}

}  // namespace ezeta
