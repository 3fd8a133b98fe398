#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <utility>

#include "ezeta/extended_complex.hpp"

namespace ezeta {

using BigInt = boost::multiprecision::cpp_int;

/// A point of the upper half-plane.
class ModularPoint {
 public:
  /// Throws std::invalid_argument unless Im(tau) > 0.
  explicit ModularPoint(cplx tau);

  cplx tau() const { return tau_; }

 private:
  cplx tau_;
};

/// Ordered lattice basis (omega1, omega2) with Im(omega2 / omega1) > 0.
class Lattice {
 public:
  /// Throws std::invalid_argument when omega1 == 0 or the basis is not
  /// positively oriented.
  Lattice(cplx omega1, cplx omega2);

  /// The lattice Z + tau Z.
  static Lattice normalized(const ModularPoint& tau) { return {1.0, tau.tau()}; }

  cplx omega1() const { return omega1_; }
  cplx omega2() const { return omega2_; }

  /// alpha * L.
  Lattice scaled(cplx alpha) const;

 private:
  cplx omega1_;
  cplx omega2_;
};

/// Integer 2x2 matrix [a b; c d] with ad - bc = 1.
class UnimodularMatrix {
 public:
  /// Throws std::invalid_argument if the determinant is not 1.
  UnimodularMatrix(BigInt a, BigInt b, BigInt c, BigInt d);

  static UnimodularMatrix identity() { return {1, 0, 0, 1}; }
  /// tau -> tau + 1.
  static UnimodularMatrix T() { return {1, 1, 0, 1}; }
  /// tau -> -1 / tau.
  static UnimodularMatrix S() { return {0, -1, 1, 0}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  UnimodularMatrix inverse() const { return {d_, -b_, -c_, a_}; }

  /// Automorphy factor c * tau + d.
  cplx automorphy(cplx tau) const;

  friend UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y);
  friend bool operator==(const UnimodularMatrix& x, const UnimodularMatrix& y) = default;
  friend std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m);

 private:
  BigInt a_, b_, c_, d_;
};

/// Complex 2x2 matrix acting by linear fractional transformations.
struct ComplexMatrix2 {
  cplx a, b, c, d;

  cplx determinant() const { return a * d - b * c; }
  static ComplexMatrix2 from(const UnimodularMatrix& m);
};

/// (a z + b) / (c z + d) on C u {inf}; inf -> a / c, and the pole of the map
/// goes to inf. Throws std::invalid_argument on a singular matrix.
ExtComplex mobius(const ComplexMatrix2& m, const ExtComplex& z);
ExtComplex mobius(const UnimodularMatrix& m, const ExtComplex& z);

/// Change of basis (omega1, omega2) -> (a omega1 + b omega2, c omega1 + d omega2).
Lattice act_on_basis(const UnimodularMatrix& gamma, const Lattice& lattice);

struct Normalization {
  ModularPoint tau;
  cplx scale;  // lattice == scale * (Z + tau Z)
};

/// tau = omega2 / omega1 and scale = omega1.
Normalization normalize_to_tau(const Lattice& lattice);

struct FundamentalReduction {
  ModularPoint tau;         // reduced point, equal to gamma * input
  UnimodularMatrix gamma;
};

/// Standard S/T reduction into |Re tau| <= 1/2, |tau| >= 1. Ties go to
/// Re tau in [-1/2, 1/2) and Re tau <= 0 on the unit circle.
FundamentalReduction reduce_to_fundamental(const ModularPoint& tau);

struct CellReduction {
  cplx z0;  // z - m - n tau, in {x + y tau : x, y in [-1/2, 1/2)}
  std::int64_t m;
  std::int64_t n;
};

/// Splits z into a lattice vector m + n tau plus a remainder in the
/// fundamental cell centred at the origin.
CellReduction lattice_reduce_point(cplx z, const ModularPoint& tau);

}  // namespace ezeta
