#pragma once

// Brute-force references used only by tests. They share nothing with the
// library's evaluation path beyond std::complex.

#include <cmath>
#include <complex>

namespace ezeta::oracle {

using cplx = std::complex<double>;

// Square truncation |m|, |n| <= radius of the lattice Z + tau Z minus 0.
template <class F>
void for_each_lattice_point(cplx tau, int radius, F&& f) {
  for (int m = -radius; m <= radius; ++m)
    for (int n = -radius; n <= radius; ++n)
      if (m != 0 || n != 0) f(cplx(m, 0.0) + static_cast<double>(n) * tau);
}

inline cplx wp_direct(cplx tau, cplx z, int radius) {
  cplx sum = 1.0 / (z * z);
  for_each_lattice_point(tau, radius, [&](cplx w) { sum += 1.0 / ((z - w) * (z - w)) - 1.0 / (w * w); });
  return sum;
}

inline cplx zeta_direct(cplx tau, cplx z, int radius) {
  cplx sum = 1.0 / z;
  for_each_lattice_point(tau, radius, [&](cplx w) { sum += 1.0 / (z - w) + 1.0 / w + z / (w * w); });
  return sum;
}

// 60 sum' w^-4 and 140 sum' w^-6.
inline cplx g2_direct(cplx tau, int radius) {
  cplx sum = 0.0;
  for_each_lattice_point(tau, radius, [&](cplx w) { sum += 1.0 / (w * w * w * w); });
  return 60.0 * sum;
}

inline cplx g3_direct(cplx tau, int radius) {
  cplx sum = 0.0;
  for_each_lattice_point(tau, radius, [&](cplx w) { sum += 1.0 / (w * w * w * w * w * w); });
  return 140.0 * sum;
}

// Plain divisor-sum q-expansion 1 - 24 sum sigma_1(n) q^n, divisors enumerated.
inline cplx e2_divisor_series(cplx tau, int terms) {
  const double pi = 3.14159265358979323846;
  const cplx q = std::exp(cplx(0.0, 2.0 * pi) * tau);
  cplx qn = 1.0, sum = 0.0;
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    long long s = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) s += d;
    sum += static_cast<double>(s) * qn;
  }
  return 1.0 - 24.0 * sum;
}

// Composite Simpson rule for a path integral of f along a -> b.
template <class F>
cplx simpson(F&& f, cplx a, cplx b, int intervals) {
  const cplx h = (b - a) / static_cast<double>(intervals);
  cplx sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + static_cast<double>(i) * h);
  return sum * h / 3.0;
}

}  // namespace ezeta::oracle
