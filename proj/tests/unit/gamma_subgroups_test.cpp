#include "ezeta/gamma_subgroups.hpp"

#include <gtest/gtest.h>

#include <random>

namespace ezeta {
namespace {

std::vector<CongruenceGroup> groups() {
  return {CongruenceGroup::full(),      CongruenceGroup::gamma0(2),    CongruenceGroup::gamma0(4),
          CongruenceGroup::gamma0(7),   CongruenceGroup::gamma1(3),    CongruenceGroup::gamma1(5),
          CongruenceGroup::principal(2), CongruenceGroup::principal(3), CongruenceGroup::principal(4)};
}

TEST(Contains, Examples) {
  const UnimodularMatrix id = UnimodularMatrix::identity();
  for (const auto& g : groups()) EXPECT_TRUE(contains(g, id)) << g.to_string();
  EXPECT_TRUE(contains(CongruenceGroup::principal(2), UnimodularMatrix(1, 0, 2, 1)));
  EXPECT_TRUE(contains(CongruenceGroup::gamma0(2), UnimodularMatrix::T()));
  EXPECT_FALSE(contains(CongruenceGroup::principal(2), UnimodularMatrix::T()));
  EXPECT_FALSE(contains(CongruenceGroup::gamma0(2), UnimodularMatrix(2, 1, 1, 1)));
  EXPECT_FALSE(contains(CongruenceGroup::gamma0(3), UnimodularMatrix::S()));
  // -I lies in Gamma0(N) but not in Gamma1(N) for N > 2.
  EXPECT_TRUE(contains(CongruenceGroup::gamma0(5), UnimodularMatrix(-1, 0, 0, -1)));
  EXPECT_FALSE(contains(CongruenceGroup::gamma1(5), UnimodularMatrix(-1, 0, 0, -1)));
  EXPECT_TRUE(contains(CongruenceGroup::gamma1(5), UnimodularMatrix(6, 1, 5, 1)));
}

TEST(Contains, NegativeEntriesReduceCorrectly) {
  EXPECT_TRUE(contains(CongruenceGroup::principal(3), UnimodularMatrix(-2, 3, -3, 4)));
  EXPECT_TRUE(contains(CongruenceGroup::gamma1(3), UnimodularMatrix(-2, 3, -3, 4)));
}

TEST(Parse, RoundTrip) {
  for (const auto& g : groups()) EXPECT_EQ(CongruenceGroup::parse(g.to_string()), g);
  EXPECT_EQ(CongruenceGroup::parse("Gamma0(12)"), CongruenceGroup::gamma0(12));
  EXPECT_EQ(CongruenceGroup::parse("SL2Z"), CongruenceGroup::full());
  for (const char* bad : {"", "Gamma0", "Gamma0(0)", "Gamma2(3)", "gamma0(3)", "Gamma(x)", "Gamma0(3) "})
    EXPECT_THROW(CongruenceGroup::parse(bad), std::invalid_argument) << bad;
  EXPECT_THROW(CongruenceGroup::gamma0(0), std::invalid_argument);
}

TEST(SampleElements, AllMembersAndBounded) {
  for (const auto& g : groups()) {
    const auto xs = sample_elements(g, 100, 99);
    ASSERT_EQ(xs.size(), 100u);
    for (const auto& x : xs) {
      EXPECT_TRUE(contains(g, x)) << g.to_string() << " " << x;
      EXPECT_EQ(x.a() * x.d() - x.b() * x.c(), 1);
      for (const BigInt* e : {&x.a(), &x.b(), &x.c(), &x.d()}) EXPECT_LE(abs(*e), BigInt(1000000));
    }
  }
}

TEST(SampleElements, Deterministic) {
  const auto a = sample_elements(CongruenceGroup::gamma0(4), 50, 7);
  const auto b = sample_elements(CongruenceGroup::gamma0(4), 50, 7);
  EXPECT_EQ(a, b);
  const auto c = sample_elements(CongruenceGroup::gamma0(4), 50, 8);
  EXPECT_NE(a, c);
}

TEST(SampleElements, NontrivialLowerLeft) {
  // The sampler must actually exercise c != 0, otherwise weight checks
  // degenerate to translations.
  for (const auto& g : groups()) {
    int nonzero = 0;
    for (const auto& x : sample_elements(g, 100, 1)) nonzero += x.c() != 0;
    EXPECT_GT(nonzero, 50) << g.to_string();
  }
}

TEST(GroupPredicate, ClosedUnderProductAndInverse) {
  for (const auto& g : groups()) {
    const auto xs = sample_elements(g, 200, 12);
    const auto ys = sample_elements(g, 200, 13);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      EXPECT_TRUE(contains(g, xs[i] * ys[i]));
      EXPECT_TRUE(contains(g, xs[i].inverse()));
    }
  }
}

TEST(SampleWords, FullGroupElements) {
  const auto ws = sample_words(100, 3);
  ASSERT_EQ(ws.size(), 100u);
  for (const auto& w : ws) EXPECT_EQ(w.a() * w.d() - w.b() * w.c(), 1);
  EXPECT_EQ(ws, sample_words(100, 3));
}

TEST(Sublattice, Rules) {
  const cplx tau(0.2, 1.3);
  const Lattice l(1.0, tau);
  auto s = sublattice_of(CongruenceGroup::principal(3), l);
  EXPECT_EQ(s.index, 9);
  EXPECT_EQ(s.omega1, cplx(3.0));
  EXPECT_EQ(s.omega2, 3.0 * tau);

  s = sublattice_of(CongruenceGroup::gamma0(5), l);
  EXPECT_EQ(s.index, 5);
  EXPECT_EQ(s.omega1, cplx(1.0));
  EXPECT_EQ(s.omega2, 5.0 * tau);

  s = sublattice_of(CongruenceGroup::full(), l);
  EXPECT_EQ(s.index, 1);
  EXPECT_EQ(s.omega2, tau);

  EXPECT_THROW(sublattice_of(CongruenceGroup::gamma1(4), l), std::invalid_argument);
}

}  // namespace
}  // namespace ezeta
