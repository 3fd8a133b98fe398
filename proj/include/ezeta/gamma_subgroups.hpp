#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ezeta/lattice.hpp"

namespace ezeta {

/// A congruence subgroup of SL2(Z): the full group, Gamma0(N), Gamma1(N) or
/// the principal congruence subgroup Gamma(N).
struct CongruenceGroup {
  enum class Kind { full, gamma0, gamma1, gamma_principal };

  Kind kind = Kind::full;
  int level = 1;

  static CongruenceGroup full() { return {}; }
  static CongruenceGroup gamma0(int n);
  static CongruenceGroup gamma1(int n);
  static CongruenceGroup principal(int n);

  /// "SL2Z", "Gamma0(N)", "Gamma1(N)", "Gamma(N)". Throws std::invalid_argument.
  static CongruenceGroup parse(std::string_view spec);
  std::string to_string() const;

  friend bool operator==(const CongruenceGroup&, const CongruenceGroup&) = default;
};

bool contains(const CongruenceGroup& group, const UnimodularMatrix& gamma);

/// The sublattice L' preserved by the group, for (omega1, omega2) = basis of L.
struct SublatticeDescriptor {
  CongruenceGroup group;
  BigInt index;
  cplx omega1;  // basis of L'
  cplx omega2;
  std::string basis_rule;
};

/// Gamma(N): L' = N omega1 Z + N omega2 Z (index N^2); Gamma0(N):
/// L' = omega1 Z + N omega2 Z (index N); full group: L' = L. Gamma1(N) has
/// no rule and throws std::invalid_argument.
SublatticeDescriptor sublattice_of(const CongruenceGroup& group, const Lattice& lattice);

/// Entry bound for sample_elements; far below the 1e6 conditioning cap.
inline constexpr int kSampleEntryBound = 12;

/// Deterministic pseudo-random elements of the group: c is drawn on the
/// group's congruence shape, a coprime to c with the required residue, and
/// (b, d) completed from a d - b c = 1 by the extended Euclidean identity.
std::vector<UnimodularMatrix> sample_elements(const CongruenceGroup& group, std::size_t count,
                                              std::uint64_t seed);

/// Random words of length 1..max_length in S, T, T^-1 (elements of SL2(Z)).
std::vector<UnimodularMatrix> sample_words(std::size_t count, std::uint64_t seed, int max_length = 12);

}  // namespace ezeta
