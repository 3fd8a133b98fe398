#include "ezeta/lattice.hpp"

#include <gtest/gtest.h>

#include <random>

#include "ezeta/gamma_subgroups.hpp"

namespace ezeta {
namespace {

const cplx I{0.0, 1.0};

cplx finite(const ExtComplex& v) {
  EXPECT_TRUE(v.is_finite());
  return v.value();
}

TEST(Mobius, Examples) {
  EXPECT_EQ(finite(mobius(UnimodularMatrix::T(), I)), 1.0 + I);
  EXPECT_EQ(finite(mobius(UnimodularMatrix::S(), I)), I);
  EXPECT_NEAR(std::abs(finite(mobius(UnimodularMatrix::S(), 2.0 * I)) - 0.5 * I), 0.0, 1e-15);
}

TEST(Mobius, InfinitySentinel) {
  const UnimodularMatrix g(2, 1, 1, 1);
  // inf -> a / c
  EXPECT_EQ(finite(mobius(g, ExtComplex::infinity())), cplx(2.0));
  // z = -d / c -> inf
  EXPECT_TRUE(mobius(g, -1.0).is_infinite());
  // c = 0 keeps inf fixed
  EXPECT_TRUE(mobius(UnimodularMatrix::T(), ExtComplex::infinity()).is_infinite());
  EXPECT_EQ(ExtComplex::infinity(), ExtComplex::infinity());
  EXPECT_THROW(mobius(ComplexMatrix2{1.0, 2.0, 2.0, 4.0}, 1.0), std::invalid_argument);
}

TEST(Mobius, GroupActionProperty) {
  const auto gs = sample_words(60, 7);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0), v(0.3, 2.0);
  for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
    const cplx z(u(rng), v(rng));
    const cplx lhs = finite(mobius(gs[i] * gs[i + 1], z));
    const cplx rhs = finite(mobius(gs[i], mobius(gs[i + 1], z)));
    EXPECT_LT(std::abs(lhs - rhs), 1e-9 * (1.0 + std::abs(lhs)));
    EXPECT_GT(lhs.imag(), 0.0);
  }
}

TEST(UnimodularMatrix, RejectsBadDeterminant) {
  EXPECT_THROW(UnimodularMatrix(1, 1, 2, 1), std::invalid_argument);
  const UnimodularMatrix g(2, 1, 1, 1);
  EXPECT_EQ(g * g.inverse(), UnimodularMatrix::identity());
}

TEST(UnimodularMatrix, LongProductsDoNotOverflow) {
  UnimodularMatrix g = UnimodularMatrix::identity();
  const UnimodularMatrix st = UnimodularMatrix::S() * UnimodularMatrix(1, 3, 0, 1);
  for (int i = 0; i < 80; ++i) g = g * st;
  EXPECT_EQ(g.a() * g.d() - g.b() * g.c(), 1);
  EXPECT_GT(abs(g.a()), BigInt(1) << 64);
}

TEST(ActOnBasis, Examples) {
  const Lattice l(1.0, I);
  const auto same = act_on_basis(UnimodularMatrix::identity(), l);
  EXPECT_EQ(same.omega1(), 1.0 + 0.0 * I);
  EXPECT_EQ(same.omega2(), I);

  const cplx tau(0.2, 1.3);
  const auto shifted = act_on_basis(UnimodularMatrix::T(), Lattice(1.0, tau));
  EXPECT_EQ(shifted.omega1(), 1.0 + tau);
  EXPECT_EQ(shifted.omega2(), tau);

  // S sends (1, tau) to (-tau, 1); its normalization is -1/tau = S tau.
  const auto s = act_on_basis(UnimodularMatrix::S(), Lattice(1.0, tau));
  const auto norm = normalize_to_tau(s);
  EXPECT_LT(std::abs(norm.tau.tau() - finite(mobius(UnimodularMatrix::S(), tau))), 1e-15);
}

TEST(ActOnBasis, PreservesOrientation) {
  const auto gs = sample_words(100, 3);
  const Lattice l(cplx(0.7, -0.2), cplx(0.4, 1.1));
  for (const auto& g : gs) {
    const auto m = act_on_basis(g, l);
    EXPECT_GT((m.omega2() / m.omega1()).imag(), 0.0);
  }
}

TEST(NormalizeToTau, Examples) {
  auto n = normalize_to_tau(Lattice(1.0, I));
  EXPECT_EQ(n.tau.tau(), I);
  EXPECT_EQ(n.scale, cplx(1.0));
  n = normalize_to_tau(Lattice(2.0, 2.0 * I));
  EXPECT_EQ(n.tau.tau(), I);
  EXPECT_EQ(n.scale, cplx(2.0));
  n = normalize_to_tau(Lattice(1.0 + I, -1.0 + I));
  EXPECT_LT(std::abs(n.tau.tau() - I), 1e-15);
  EXPECT_EQ(n.scale, 1.0 + I);
}

TEST(NormalizeToTau, RejectsDegenerateBases) {
  EXPECT_THROW(Lattice(0.0, I), std::invalid_argument);
  EXPECT_THROW(Lattice(1.0, -I), std::invalid_argument);
  EXPECT_THROW(Lattice(1.0, 2.0), std::invalid_argument);
  EXPECT_THROW(ModularPoint(cplx(0.3, 0.0)), std::invalid_argument);
}

TEST(ReduceToFundamental, Examples) {
  auto r = reduce_to_fundamental(ModularPoint(I));
  EXPECT_EQ(r.tau.tau(), I);
  EXPECT_EQ(r.gamma, UnimodularMatrix::identity());

  r = reduce_to_fundamental(ModularPoint(5.0 + I));
  EXPECT_LT(std::abs(r.tau.tau() - I), 1e-15);
  EXPECT_EQ(r.gamma, UnimodularMatrix(1, -5, 0, 1));

  const ModularPoint p(cplx(0.1, 0.1));
  r = reduce_to_fundamental(p);
  EXPECT_GE(r.tau.tau().imag(), p.tau().imag());
  EXPECT_GE(std::abs(r.tau.tau()), 1.0 - 1e-14);
  EXPECT_LE(std::abs(r.tau.tau().real()), 0.5);
  EXPECT_LT(std::abs(finite(mobius(r.gamma, p.tau())) - r.tau.tau()), 1e-12);
}

TEST(ReduceToFundamental, BoundaryConvention) {
  // Re tau = +1/2 goes to -1/2.
  auto r = reduce_to_fundamental(ModularPoint(cplx(0.5, 1.2)));
  EXPECT_DOUBLE_EQ(r.tau.tau().real(), -0.5);
  // On the unit circle keep Re <= 0.
  const cplx on_circle = std::polar(1.0, 1.3);
  r = reduce_to_fundamental(ModularPoint(on_circle));
  EXPECT_LE(r.tau.tau().real(), 0.0);
  EXPECT_NEAR(std::abs(r.tau.tau()), 1.0, 1e-14);
}

TEST(ReduceToFundamental, RandomPointsLandInDomain) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-30.0, 30.0), lim(-6.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const ModularPoint p(cplx(re(rng), std::pow(10.0, lim(rng))));
    const auto r = reduce_to_fundamental(p);
    const cplx t = r.tau.tau();
    EXPECT_LE(std::abs(t.real()), 0.5 + 1e-12);
    EXPECT_GE(std::abs(t), 1.0 - 1e-12);
    const cplx back = finite(mobius(r.gamma, p.tau()));
    EXPECT_LT(std::abs(back - t), 1e-12 * std::max(1.0, std::abs(t)) * std::max(1.0, 1.0 / p.tau().imag()));
  }
}

TEST(LatticeReducePoint, Examples) {
  const ModularPoint tau(cplx(0.3, 1.1));
  const cplx t = tau.tau();

  auto r = lattice_reduce_point(0.25 + 0.25 * t, tau);
  EXPECT_LT(std::abs(r.z0 - (0.25 + 0.25 * t)), 1e-15);
  EXPECT_EQ(r.m, 0);
  EXPECT_EQ(r.n, 0);

  r = lattice_reduce_point(1.0, tau);
  EXPECT_LT(std::abs(r.z0), 1e-15);
  EXPECT_EQ(r.m, 1);
  EXPECT_EQ(r.n, 0);

  r = lattice_reduce_point(3.7 + 2.2 * t, tau);
  EXPECT_LT(std::abs(r.z0 - (-0.3 + 0.2 * t)), 1e-12);
  EXPECT_EQ(r.m, 4);
  EXPECT_EQ(r.n, 2);

  // Half-integers round down into [-1/2, 1/2).
  r = lattice_reduce_point(0.5 + 0.5 * t, tau);
  EXPECT_EQ(r.m, 1);
  EXPECT_EQ(r.n, 1);
}

TEST(LatticeReducePoint, RoundTripProperty) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  const ModularPoint tau(cplx(-0.4, 0.9));
  for (int i = 0; i < 300; ++i) {
    const cplx z(u(rng), u(rng));
    const auto r = lattice_reduce_point(z, tau);
    EXPECT_LT(std::abs(r.z0 + static_cast<double>(r.m) + static_cast<double>(r.n) * tau.tau() - z), 1e-12);
    const double y = r.z0.imag() / tau.tau().imag();
    const double x = r.z0.real() - y * tau.tau().real();
    EXPECT_GE(x, -0.5 - 1e-12);
    EXPECT_LT(x, 0.5 + 1e-12);
    EXPECT_GE(y, -0.5 - 1e-12);
    EXPECT_LT(y, 0.5 + 1e-12);
  }
}

}  // namespace
}  // namespace ezeta
