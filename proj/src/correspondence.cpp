#include "ezeta/correspondence.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace ezeta {

namespace {

constexpr std::uint64_t kProbeSeed = 0x5eedULL;
constexpr double kProbeZero = 1e-12;

// Both values finite, or the product is a pole.
ExtComplex times(const ExtComplex& x, cplx y) {
  if (x.is_infinite()) return y == cplx(0.0, 0.0) ? ExtComplex(0.0) : ExtComplex::infinity();
  return x.value() * y;
}

}  // namespace

ExtComplex zeta_eval(const EllipticZetaSpec& zeta, const ModularPoint& tau, cplx z, const EvalConfig& cfg) {
  const ExtComplex phi = zeta.phi(tau), psi = zeta.psi(tau);
  if (phi.is_infinite() || psi.is_infinite()) return ExtComplex::infinity();
  if (psi.value() == cplx(0.0, 0.0)) return phi.value() * z;
  const ExtComplex zw = zeta_w(tau, z, cfg);
  if (zw.is_infinite()) return zw;
  return phi.value() * z + psi.value() * zw.value();
}

ExtComplex zeta_eval_lattice(const EllipticZetaSpec& zeta, const Lattice& lattice, cplx z,
                             const EvalConfig& cfg) {
  const auto norm = normalize_to_tau(lattice);
  const ExtComplex phi = zeta.phi(norm.tau), psi = zeta.psi(norm.tau);
  if (phi.is_infinite() || psi.is_infinite()) return ExtComplex::infinity();
  const cplx w = norm.scale;
  const cplx phi_l = phi.value() * std::pow(w, zeta.weight_k - 1);
  const cplx psi_l = psi.value() * std::pow(w, zeta.weight_k + 1);
  if (psi_l == cplx(0.0, 0.0)) return phi_l * z;
  const ExtComplex zw = zeta_general(lattice, z, cfg);
  if (zw.is_infinite()) return zw;
  return phi_l * z + psi_l * zw.value();
}

ZetaQuasiPeriods quasi_periods(const EllipticZetaSpec& zeta, const ModularPoint& tau, const EvalConfig& cfg) {
  const ExtComplex phi = zeta.phi(tau), psi = zeta.psi(tau);
  if (phi.is_infinite() || psi.is_infinite()) return {ExtComplex::infinity(), ExtComplex::infinity()};
  const auto eta = eta_pair(tau, cfg);
  const cplx t = tau.tau();
  return {phi.value() + psi.value() * eta.eta1, phi.value() * t + psi.value() * eta.eta2};
}

std::pair<cplx, cplx> phi_psi_from_H(cplx h1, cplx htau, const ModularPoint& tau, const EvalConfig& cfg) {
  const auto eta = eta_pair(tau, cfg);
  const cplx t = tau.tau();
  // M^-1 = (1 / det) [eta1 -eta2; -1 tau]
  const cplx phi = (eta.eta1 * htau - eta.eta2 * h1) / kTwoPiI;
  const cplx psi = (t * h1 - htau) / kTwoPiI;
  return {phi, psi};
}

bool identically_zero(const TauFunction& f) {
  for (const auto& tau : sample_taus(8, kProbeSeed)) {
    const ExtComplex v = f(tau);
    if (v.is_infinite() || !(std::abs(v.value()) < kProbeZero)) return false;
  }
  return true;
}

FormDescriptor modular_from_zeta(const EllipticZetaSpec& zeta) {
  if (identically_zero(zeta.psi))
    throw std::invalid_argument("modular_from_zeta: Psi vanishes identically for " + zeta.name);
  auto eval = [phi = zeta.phi, psi = zeta.psi](const ModularPoint& t) -> ExtComplex {
    const ExtComplex p = phi(t), s = psi(t);
    if (s.is_infinite()) return p.is_infinite() ? ExtComplex::infinity() : ExtComplex(0.0);
    if (p.is_infinite()) return ExtComplex::infinity();
    return safe_divide(p.value(), s.value());
  };
  return {"Phi/Psi[" + zeta.name + "]", 2, zeta.group, eval, std::nullopt};
}

EquivariantFn equivariant_from_zeta(const EllipticZetaSpec& zeta, const EvalConfig& cfg) {
  auto h1 = [zeta, cfg](const ModularPoint& t) { return quasi_periods(zeta, t, cfg).h1; };
  if (identically_zero(h1))
    throw std::invalid_argument("equivariant_from_zeta: H(1) vanishes identically for " + zeta.name);
  auto eval = [zeta, cfg](const ModularPoint& t) -> ExtComplex {
    const auto h = quasi_periods(zeta, t, cfg);
    if (h.h1.is_infinite() || h.htau.is_infinite()) return ExtComplex::infinity();
    return safe_divide(h.htau.value(), h.h1.value());
  };
  return {"H(tau)/H(1)[" + zeta.name + "]", zeta.group, eval, identically_zero(zeta.psi)};
}

EquivariantFn m_transform(const FormDescriptor& form, const EvalConfig& cfg) {
  auto eval = [f = form.evaluator, cfg](const ModularPoint& t) -> ExtComplex {
    const ExtComplex fv = f(t);
    if (fv.is_infinite()) return t.tau();
    const auto eta = eta_pair(t, cfg);
    return safe_divide(t.tau() * fv.value() + eta.eta2, fv.value() + eta.eta1);
  };
  return {"M(" + form.name + ")", form.group, eval};
}

FormDescriptor m_inverse(const EquivariantFn& h, const EvalConfig& cfg) {
  auto offset = [ev = h.evaluator](const ModularPoint& t) -> ExtComplex {
    const ExtComplex v = ev(t);
    return v.is_infinite() ? v : ExtComplex(v.value() - t.tau());
  };
  if (h.trivial || identically_zero(offset))
    throw std::invalid_argument("m_inverse: h = tau has no associated form");
  auto eval = [ev = h.evaluator, cfg](const ModularPoint& t) -> ExtComplex {
    const ExtComplex hv = ev(t);
    const auto eta = eta_pair(t, cfg);
    if (hv.is_infinite()) return -eta.eta1;
    return safe_divide(eta.eta1 * hv.value() - eta.eta2, t.tau() - hv.value());
  };
  return {"Minv(" + h.name + ")", 2, h.group, eval, std::nullopt};
}

ExtComplex finite_difference(const TauFunction& f, const ModularPoint& tau, double step) {
  const ExtComplex up = f(ModularPoint(tau.tau() + step));
  const ExtComplex down = f(ModularPoint(tau.tau() - step));
  if (up.is_infinite() || down.is_infinite()) return ExtComplex::infinity();
  return (up.value() - down.value()) / (2.0 * step);
}

EquivariantFn h_from_form(const FormDescriptor& form) {
  if (form.weight == 0) throw std::invalid_argument("h_from_form: weight must be nonzero");
  TauFunction deriv = form.derivative ? *form.derivative : TauFunction([f = form.evaluator](const ModularPoint& t) {
    return finite_difference(f, t);
  });
  const double k = form.weight;
  auto eval = [f = form.evaluator, deriv, k](const ModularPoint& t) -> ExtComplex {
    const ExtComplex fv = f(t);
    if (fv.is_infinite()) return t.tau();
    const ExtComplex dv = deriv(t);
    if (dv.is_infinite()) return t.tau();
    const ExtComplex ratio = safe_divide(k * fv.value(), dv.value());
    if (ratio.is_infinite()) return ratio;
    return t.tau() + ratio.value();
  };
  return {"h_f(" + form.name + ")", form.group, eval};
}

EllipticZetaSpec lift_form_to_zeta(const FormDescriptor& form) {
  if (form.weight != 2) throw std::invalid_argument("lift_form_to_zeta: form must have weight 2");
  return {"lift(" + form.name + ")", -1, form.group, form.evaluator,
          [](const ModularPoint&) { return ExtComplex(1.0); }};
}

std::vector<ModularPoint> sample_taus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-0.5, 0.5);
  std::uniform_real_distribution<double> im(std::sqrt(3.0) / 2.0, 2.0);
  std::vector<ModularPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = re(rng);
    const double y = im(rng);
    out.emplace_back(cplx(x, y));
  }
  return out;
}

std::vector<UnimodularMatrix> verification_elements(const CongruenceGroup& group, std::size_t count,
                                                    std::uint64_t seed) {
  if (group.kind == CongruenceGroup::Kind::full) return sample_words(count, seed);
  return sample_elements(group, count, seed);
}

namespace {

double sanitize(double d) { return std::isnan(d) ? std::numeric_limits<double>::infinity() : d; }

template <class Defect>
VerificationReport check_pairs(std::span<const UnimodularMatrix> gammas, std::span<const ModularPoint> taus,
                               double tol, Defect&& defect) {
  if (gammas.size() != taus.size()) throw std::invalid_argument("check: gammas and taus differ in length");
  VerificationReport rep;
  rep.tol = tol;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    Witness w{gammas[i], taus[i].tau(), {}, {}};
    const std::optional<double> d = defect(gammas[i], taus[i], w);
    ++rep.samples;
    if (!d) {
      ++rep.skipped;
      continue;
    }
    const double dd = sanitize(*d);
    if (!rep.worst || dd > rep.max_defect) {
      rep.max_defect = dd;
      rep.worst = w;
    }
  }
  rep.passed = rep.max_defect <= tol;
  return rep;
}

}  // namespace

VerificationReport check_equivariance(const EquivariantFn& h, std::span<const UnimodularMatrix> gammas,
                                      std::span<const ModularPoint> taus, double tol) {
  return check_pairs(gammas, taus, tol, [&](const UnimodularMatrix& g, const ModularPoint& t, Witness& w) {
    const ExtComplex moved = mobius(g, t.tau());
    w.lhs = h(ModularPoint(moved.value()));
    w.rhs = mobius(g, h(t));
    return std::optional<double>(match_defect(w.lhs, w.rhs));
  });
}

VerificationReport verify_equivariance(const EquivariantFn& h, std::size_t samples, std::uint64_t seed,
                                       double tol) {
  if (samples < 1) throw std::invalid_argument("verify_equivariance: samples must be >= 1");
  const auto gammas = verification_elements(h.group, samples, seed);
  const auto taus = sample_taus(samples, seed + 1);
  return check_equivariance(h, gammas, taus, tol);
}

VerificationReport check_weight(const FormDescriptor& f, std::span<const UnimodularMatrix> gammas,
                                std::span<const ModularPoint> taus, double tol) {
  return check_pairs(gammas, taus, tol,
                     [&](const UnimodularMatrix& g, const ModularPoint& t, Witness& w) -> std::optional<double> {
                       const ExtComplex moved = mobius(g, t.tau());
                       w.lhs = f(ModularPoint(moved.value()));
                       w.rhs = times(f(t), std::pow(g.automorphy(t.tau()), f.weight));
                       if (w.lhs.is_infinite() || w.rhs.is_infinite())
                         return match_defect(w.lhs, w.rhs);
                       const cplx l = w.lhs.value(), r = w.rhs.value();
                       if (l == cplx(0.0, 0.0) && r == cplx(0.0, 0.0)) return std::nullopt;
                       if (r == cplx(0.0, 0.0)) return std::numeric_limits<double>::infinity();
                       return std::abs(l / r - 1.0);
                     });
}

VerificationReport verify_weight(const FormDescriptor& f, std::size_t samples, std::uint64_t seed, double tol) {
  if (samples < 1) throw std::invalid_argument("verify_weight: samples must be >= 1");
  const auto gammas = verification_elements(f.group, samples, seed);
  const auto taus = sample_taus(samples, seed + 1);
  return check_weight(f, gammas, taus, tol);
}

}  // namespace ezeta
