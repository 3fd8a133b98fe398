#include "ezeta/zeta_algebra.hpp"

#include <mutex>
#include <stdexcept>

#include "ezeta/eisenstein.hpp"

namespace ezeta {

namespace {

// Index i holds u_{i-1}.
class PhiPsiCache {
 public:
  PhiPsi get(int n) {
    std::lock_guard lock(mutex_);
    if (rows_.empty()) {
      // Tags follow weight(Phi_n) = 2n, weight(Psi_n) = 2(n - 1).
      rows_.push_back({WHPoly::zero(-2), WHPoly::zero(-4)});     // n = -1
      rows_.push_back({WHPoly::constant(1), WHPoly::zero(-2)});  // n = 0
      rows_.push_back({WHPoly::zero(2), WHPoly::constant(-1)});  // n = 1
    }
    while (static_cast<int>(rows_.size()) <= n + 1) {
      const int k = static_cast<int>(rows_.size()) - 2;  // next row is u_{k+1}
      const Rational a(2 * k - 1, 4 * (2 * k + 1));
      const Rational b(k - 1, 2 * (2 * k + 1));
      const PhiPsi& prev1 = rows_[k];      // u_{k-1}
      const PhiPsi& prev2 = rows_[k - 1];  // u_{k-2}
      const WHPoly g2 = WHPoly::g2();
      const WHPoly g3 = WHPoly::g3();
      PhiPsi next{a * (g2 * prev1.phi) + b * (g3 * prev2.phi),
                  a * (g2 * prev1.psi) + b * (g3 * prev2.psi)};
      rows_.push_back(std::move(next));
    }
    return rows_[n + 1];
  }

 private:
  std::mutex mutex_;
  std::vector<PhiPsi> rows_;
};

PhiPsiCache& cache() {
  static PhiPsiCache c;
  return c;
}

}  // namespace

PhiPsi phi_psi(int n) {
  if (n < -1) throw std::invalid_argument("phi_psi: n must be >= -1");
  return cache().get(n);
}

std::optional<RationalFn> f_n(int n) {
  if (n < 1) throw std::invalid_argument("f_n: n must be >= 1");
  auto pp = phi_psi(n);
  if (pp.psi.is_zero()) return std::nullopt;
  return RationalFn(std::move(pp.phi), std::move(pp.psi));
}

std::vector<ZetaTableRow> zeta_table(int max_n) {
  std::vector<ZetaTableRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    auto pp = phi_psi(n);
    rows.push_back({n, pp.phi, pp.psi, f_n(n), 2 * n, 2 * (n - 1)});
  }
  return rows;
}

namespace {

cplx to_cplx(const Rational& r) { return r.convert_to<double>(); }

cplx eval_at(const WHPoly& p, cplx g2, cplx g3) {
  cplx sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    cplx term = to_cplx(c);
    for (unsigned i = 0; i < m.g2; ++i) term *= g2;
    for (unsigned i = 0; i < m.g3; ++i) term *= g3;
    sum += term;
  }
  return sum;
}

}  // namespace

cplx eval_whpoly(const WHPoly& p, const ModularPoint& tau, const QSeriesConfig& cfg) {
  if (p.is_zero()) return 0.0;
  const auto g = g2_g3(tau, cfg);
  return eval_at(p, g.g2, g.g3);
}

cplx eval_whpoly_derivative(const WHPoly& p, const ModularPoint& tau, const QSeriesConfig& cfg) {
  if (p.is_zero()) return 0.0;
  const auto g = g2_g3(tau, cfg);
  const auto dg = g2_g3_prime(tau, cfg);
  return eval_at(p.partial_g2(), g.g2, g.g3) * dg.g2 + eval_at(p.partial_g3(), g.g2, g.g3) * dg.g3;
}

ExtComplex f_n_eval(int n, const ModularPoint& tau, const QSeriesConfig& cfg) {
  const auto pp = phi_psi(n);
  if (pp.psi.is_zero()) return ExtComplex::infinity();
  const auto g = g2_g3(tau, cfg);
  return safe_divide(eval_at(pp.phi, g.g2, g.g3), eval_at(pp.psi, g.g2, g.g3));
}

ExtComplex h_n_eval(int n, const ModularPoint& tau, const EvalConfig& cfg) {
  if (n < 1) throw std::invalid_argument("h_n_eval: n must be >= 1");
  const ExtComplex f = f_n_eval(n, tau, cfg.qseries);
  if (f.is_infinite()) return tau.tau();
  const auto eta = eta_pair(tau, cfg);
  const auto corr = safe_divide(-kTwoPiI, f.value() + eta.eta1);
  if (corr.is_infinite()) return corr;
  return tau.tau() + corr.value();
}

}  // namespace ezeta
