#pragma once

#include <complex>
#include <ostream>

namespace ezeta {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline const cplx kTwoPiI{0.0, 2.0 * kPi};

/// A point of the Riemann sphere C u {inf}.
///
/// Infinity is a tagged state, never encoded through NaN, so two poles
/// compare equal and finite arithmetic never leaks into the sentinel.
class ExtComplex {
 public:
  constexpr ExtComplex() = default;
  constexpr ExtComplex(cplx v) : value_(v) {}  // NOLINT(implicit)
  constexpr ExtComplex(double re) : value_(re, 0.0) {}  // NOLINT(implicit)

  static constexpr ExtComplex infinity() {
    ExtComplex r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Finite value; meaningless when is_infinite().
  constexpr cplx value() const { return value_; }

  friend bool operator==(const ExtComplex& a, const ExtComplex& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

 private:
  cplx value_{0.0, 0.0};
  bool infinite_ = false;
};

/// x / y with x/0 = inf for x != 0. 0/0 is reported as inf as well, which
/// is what every caller here wants at a removable pole of a quotient.
inline ExtComplex safe_divide(cplx num, cplx den) {
  if (den == cplx(0.0, 0.0)) return ExtComplex::infinity();
  return ExtComplex(num / den);
}

/// Scaled distance used by all inf-aware comparisons: 0 when both are inf,
/// +inf when exactly one is, |x - y| / (1 + |x|) otherwise.
double match_defect(const ExtComplex& x, const ExtComplex& y);

/// x matches y iff both are inf or |x - y| <= tol * (1 + |x|).
inline bool matches(const ExtComplex& x, const ExtComplex& y, double tol) {
  return match_defect(x, y) <= tol;
}

std::ostream& operator<<(std::ostream& os, const ExtComplex& v);

}  // namespace ezeta
