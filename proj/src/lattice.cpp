#include "ezeta/lattice.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ezeta {

double match_defect(const ExtComplex& x, const ExtComplex& y) {
  if (x.is_infinite() && y.is_infinite()) return 0.0;
  if (x.is_infinite() || y.is_infinite()) return std::numeric_limits<double>::infinity();
  return std::abs(x.value() - y.value()) / (1.0 + std::abs(x.value()));
}

std::ostream& operator<<(std::ostream& os, const ExtComplex& v) {
  if (v.is_infinite()) return os << "inf";
  return os << v.value();
}

ModularPoint::ModularPoint(cplx tau) : tau_(tau) {
  if (!(tau.imag() > 0.0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag()))
    throw std::invalid_argument("ModularPoint: Im(tau) must be positive");
}

Lattice::Lattice(cplx omega1, cplx omega2) : omega1_(omega1), omega2_(omega2) {
  if (omega1 == cplx(0.0, 0.0)) throw std::invalid_argument("Lattice: omega1 is zero");
  if (!((omega2 / omega1).imag() > 0.0))
    throw std::invalid_argument("Lattice: basis must satisfy Im(omega2/omega1) > 0");
}

Lattice Lattice::scaled(cplx alpha) const { return {alpha * omega1_, alpha * omega2_}; }

UnimodularMatrix::UnimodularMatrix(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) throw std::invalid_argument("UnimodularMatrix: determinant must be 1");
}

cplx UnimodularMatrix::automorphy(cplx tau) const {
  return c_.convert_to<double>() * tau + d_.convert_to<double>();
}

UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
          x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m) {
  return os << '[' << m.a_ << ',' << m.b_ << ';' << m.c_ << ',' << m.d_ << ']';
}

ComplexMatrix2 ComplexMatrix2::from(const UnimodularMatrix& m) {
  return {m.a().convert_to<double>(), m.b().convert_to<double>(), m.c().convert_to<double>(),
          m.d().convert_to<double>()};
}

ExtComplex mobius(const ComplexMatrix2& m, const ExtComplex& z) {
  if (m.determinant() == cplx(0.0, 0.0)) throw std::invalid_argument("mobius: singular matrix");
  if (z.is_infinite()) return safe_divide(m.a, m.c);
  const cplx w = z.value();
  const cplx den = m.c * w + m.d;
  if (den == cplx(0.0, 0.0)) return ExtComplex::infinity();
  return ExtComplex((m.a * w + m.b) / den);
}

ExtComplex mobius(const UnimodularMatrix& m, const ExtComplex& z) {
  return mobius(ComplexMatrix2::from(m), z);
}

Lattice act_on_basis(const UnimodularMatrix& gamma, const Lattice& lattice) {
  const auto g = ComplexMatrix2::from(gamma);
  return {g.a * lattice.omega1() + g.b * lattice.omega2(),
          g.c * lattice.omega1() + g.d * lattice.omega2()};
}

Normalization normalize_to_tau(const Lattice& lattice) {
  return {ModularPoint(lattice.omega2() / lattice.omega1()), lattice.omega1()};
}

namespace {

// Boundary slack for the tie-breaking convention; points closer than this
// to |tau| = 1 or Re tau = -1/2 count as lying on the boundary.
constexpr double kBoundaryEps = 1e-14;

// Largest translation we apply in one step; beyond this the double carries
// no fractional information anyway.
constexpr double kMaxShift = 9.0e15;

}  // namespace

FundamentalReduction reduce_to_fundamental(const ModularPoint& point) {
  cplx tau = point.tau();
  UnimodularMatrix gamma = UnimodularMatrix::identity();
  const UnimodularMatrix s = UnimodularMatrix::S();

  for (int iter = 0; iter < 100000; ++iter) {
    const double shift = std::floor(tau.real() + 0.5);
    if (std::abs(shift) > kMaxShift) throw std::domain_error("reduce_to_fundamental: Re(tau) too large");
    if (shift != 0.0) {
      tau -= shift;
      const auto k = static_cast<std::int64_t>(shift);
      gamma = UnimodularMatrix(1, -k, 0, 1) * gamma;
    }
    if (std::norm(tau) < 1.0 - kBoundaryEps) {
      tau = -1.0 / tau;
      gamma = s * gamma;
      continue;
    }
    break;
  }
  // Tie on the unit circle: keep the left half.
  if (std::abs(std::norm(tau) - 1.0) <= kBoundaryEps && tau.real() > kBoundaryEps) {
    tau = -1.0 / tau;
    gamma = s * gamma;
  }
  // Keep the imaginary part strictly positive in case rounding nudged it.
  if (!(tau.imag() > 0.0)) throw std::domain_error("reduce_to_fundamental: lost the upper half-plane");
  return {ModularPoint(tau), gamma};
}

CellReduction lattice_reduce_point(cplx z, const ModularPoint& point) {
  const cplx tau = point.tau();
  const double y = z.imag() / tau.imag();
  const double x = z.real() - y * tau.real();
  const double m = std::floor(x + 0.5);
  const double n = std::floor(y + 0.5);
  if (std::abs(m) > kMaxShift || std::abs(n) > kMaxShift)
    throw std::domain_error("lattice_reduce_point: coordinates out of range");
  const cplx z0 = cplx(x - m, 0.0) + (y - n) * tau;
  return {z0, static_cast<std::int64_t>(m), static_cast<std::int64_t>(n)};
}

}  // namespace ezeta
