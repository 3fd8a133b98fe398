#include "ezeta/gamma_subgroups.hpp"

#include <numeric>
#include <random>
#include <regex>
#include <stdexcept>

namespace ezeta {

namespace {

CongruenceGroup make(CongruenceGroup::Kind kind, int n) {
  if (n < 1) throw std::invalid_argument("CongruenceGroup: level must be >= 1");
  return {kind, n};
}

BigInt mod(const BigInt& x, int n) {
  BigInt r = x % n;
  if (r < 0) r += n;
  return r;
}

}  // namespace

CongruenceGroup CongruenceGroup::gamma0(int n) { return make(Kind::gamma0, n); }
CongruenceGroup CongruenceGroup::gamma1(int n) { return make(Kind::gamma1, n); }
CongruenceGroup CongruenceGroup::principal(int n) { return make(Kind::gamma_principal, n); }

CongruenceGroup CongruenceGroup::parse(std::string_view spec) {
  const std::string s(spec);
  if (s == "SL2Z") return full();
  static const std::regex re(R"((Gamma0|Gamma1|Gamma)\((\d{1,9})\))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("unknown group spec: " + s);
  const int n = std::stoi(m[2].str());
  if (m[1] == "Gamma0") return gamma0(n);
  if (m[1] == "Gamma1") return gamma1(n);
  return principal(n);
}

std::string CongruenceGroup::to_string() const {
  switch (kind) {
    case Kind::full: return "SL2Z";
    case Kind::gamma0: return "Gamma0(" + std::to_string(level) + ")";
    case Kind::gamma1: return "Gamma1(" + std::to_string(level) + ")";
    case Kind::gamma_principal: return "Gamma(" + std::to_string(level) + ")";
  }
  return {};
}

bool contains(const CongruenceGroup& group, const UnimodularMatrix& g) {
  const int n = group.level;
  switch (group.kind) {
    case CongruenceGroup::Kind::full: return true;
    case CongruenceGroup::Kind::gamma0: return mod(g.c(), n) == 0;
    case CongruenceGroup::Kind::gamma1:
      return mod(g.c(), n) == 0 && mod(g.a(), n) == mod(1, n) && mod(g.d(), n) == mod(1, n);
    case CongruenceGroup::Kind::gamma_principal:
      return mod(g.a(), n) == mod(1, n) && mod(g.b(), n) == 0 && mod(g.c(), n) == 0 &&
             mod(g.d(), n) == mod(1, n);
  }
  return false;
}

SublatticeDescriptor sublattice_of(const CongruenceGroup& group, const Lattice& lattice) {
  const double n = group.level;
  const cplx w1 = lattice.omega1(), w2 = lattice.omega2();
  switch (group.kind) {
    case CongruenceGroup::Kind::full:
      return {group, 1, w1, w2, "omega1 Z + omega2 Z"};
    case CongruenceGroup::Kind::gamma0:
      return {group, group.level, w1, n * w2, "omega1 Z + N omega2 Z"};
    case CongruenceGroup::Kind::gamma_principal:
      return {group, BigInt(group.level) * group.level, n * w1, n * w2, "N omega1 Z + N omega2 Z"};
    case CongruenceGroup::Kind::gamma1:
      break;
  }
  throw std::invalid_argument("sublattice_of: no sublattice rule for " + group.to_string());
}

namespace {

// Inverse of a modulo m (m >= 1, gcd(a, m) = 1), in [0, m).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = ((a % m) + m) % m, r1 = m;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return ((s0 % m) + m) % m;
}

}  // namespace

std::vector<UnimodularMatrix> sample_elements(const CongruenceGroup& group, std::size_t count,
                                              std::uint64_t seed) {
  using Kind = CongruenceGroup::Kind;
  std::mt19937_64 rng(seed);
  const std::int64_t n = group.kind == Kind::full ? 1 : group.level;
  const bool unipotent = group.kind == Kind::gamma1 || group.kind == Kind::gamma_principal;
  const std::int64_t b_step = group.kind == Kind::gamma_principal ? n : 1;
  const std::int64_t bound = kSampleEntryBound;

  std::uniform_int_distribution<std::int64_t> c_dist(-4, 4);
  std::uniform_int_distribution<std::int64_t> a_dist(-bound, bound);
  std::uniform_int_distribution<std::int64_t> t_dist(-std::max<std::int64_t>(1, bound / n),
                                                     std::max<std::int64_t>(1, bound / n));
  std::bernoulli_distribution coin(0.5);

  std::vector<UnimodularMatrix> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::int64_t c = n * c_dist(rng);
    std::int64_t a = unipotent ? 1 + n * t_dist(rng) : a_dist(rng);
    if (c == 0) {
      if (a != 1 && a != -1) continue;
      if (unipotent && ((a - 1) % n) != 0) continue;
      const std::int64_t b = b_step * t_dist(rng);
      out.emplace_back(a, b, 0, a);
      continue;
    }
    const std::int64_t modulus = b_step * std::abs(c);
    if (std::gcd(a, modulus) != 1) continue;
    std::int64_t d = inverse_mod(a, modulus);
    if (coin(rng)) d -= modulus;
    const BigInt b = (BigInt(a) * d - 1) / c;
    UnimodularMatrix g(a, b, c, d);
    if (!contains(group, g)) throw std::logic_error("sample_elements: produced a non-member");
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<UnimodularMatrix> sample_words(std::size_t count, std::uint64_t seed, int max_length) {
  if (max_length < 1) throw std::invalid_argument("sample_words: max_length must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(1, max_length);
  std::uniform_int_distribution<int> letter(0, 2);
  const UnimodularMatrix gens[3] = {UnimodularMatrix::S(), UnimodularMatrix::T(),
                                    UnimodularMatrix::T().inverse()};
  std::vector<UnimodularMatrix> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    UnimodularMatrix g = UnimodularMatrix::identity();
    const int len = len_dist(rng);
    for (int k = 0; k < len; ++k) g = g * gens[letter(rng)];
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace ezeta
