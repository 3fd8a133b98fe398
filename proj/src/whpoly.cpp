#include "ezeta/whpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace ezeta {

std::string rational_to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

WHPoly WHPoly::zero(std::optional<int> weight) {
  WHPoly p;
  p.weight_ = weight;
  return p;
}

WHPoly WHPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

WHPoly WHPoly::monomial(const Rational& c, unsigned g2_exp, unsigned g3_exp) {
  WHPoly p;
  const Monomial m{g2_exp, g3_exp};
  p.weight_ = m.weight();
  p.add_term(m, c);
  return p;
}

void WHPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational WHPoly::coefficient(unsigned g2_exp, unsigned g3_exp) const {
  const auto it = terms_.find(Monomial{g2_exp, g3_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

WHPoly WHPoly::partial_g2() const {
  WHPoly r = zero(weight_ ? std::optional<int>(*weight_ - 4) : std::nullopt);
  for (const auto& [m, c] : terms_)
    if (m.g2 > 0) r.add_term({m.g2 - 1, m.g3}, c * m.g2);
  return r;
}

WHPoly WHPoly::partial_g3() const {
  WHPoly r = zero(weight_ ? std::optional<int>(*weight_ - 6) : std::nullopt);
  for (const auto& [m, c] : terms_)
    if (m.g3 > 0) r.add_term({m.g2, m.g3 - 1}, c * m.g3);
  return r;
}

WHPoly WHPoly::operator-() const {
  WHPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

WHPoly operator+(const WHPoly& x, const WHPoly& y) {
  WHPoly r = x;
  for (const auto& [m, c] : y.terms_) r.add_term(m, c);
  if (x.is_zero() && !x.weight_) {
    r.weight_ = y.weight_;
  } else if (y.is_zero() && !y.weight_) {
    r.weight_ = x.weight_;
  } else if (x.weight_ && y.weight_ && *x.weight_ == *y.weight_) {
    r.weight_ = x.weight_;
  } else {
    r.weight_ = std::nullopt;
  }
  return r;
}

WHPoly operator*(const WHPoly& x, const WHPoly& y) {
  WHPoly r;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) r.add_term({mx.g2 + my.g2, mx.g3 + my.g3}, cx * cy);
  if (x.weight_ && y.weight_) r.weight_ = *x.weight_ + *y.weight_;
  return r;
}

WHPoly operator*(const Rational& s, const WHPoly& p) {
  WHPoly r = WHPoly::zero(p.weight_);
  for (const auto& [m, c] : p.terms_) r.add_term(m, s * c);
  return r;
}

namespace {

std::string power(const char* name, int e) {
  if (e == 1) return name;
  return std::string(name) + "^" + std::to_string(e);
}

// Body of a monomial, empty for the constant one.
std::string monomial_body(int g2_exp, int g3_exp) {
  std::vector<std::string> up, down;
  if (g2_exp > 0) up.push_back(power("g2", g2_exp));
  if (g3_exp > 0) up.push_back(power("g3", g3_exp));
  if (g2_exp < 0) down.push_back(power("g2", -g2_exp));
  if (g3_exp < 0) down.push_back(power("g3", -g3_exp));
  std::string s;
  for (std::size_t i = 0; i < up.size(); ++i) s += (i ? " " : "") + up[i];
  if (!down.empty()) {
    if (s.empty()) s = "1";
    s += "/";
    for (std::size_t i = 0; i < down.size(); ++i) s += (i ? " " : "") + down[i];
  }
  return s;
}

struct LaurentTerm {
  int g2, g3;
  Rational coeff;
};

std::string join_terms(const std::vector<LaurentTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    Rational c = t.coeff;
    if (!first) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    const std::string body = monomial_body(t.g2, t.g3);
    out += rational_to_string(c);
    if (!body.empty()) out += " " + body;
    first = false;
  }
  return out;
}

}  // namespace

std::string WHPoly::to_string() const {
  std::vector<LaurentTerm> out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.push_back({static_cast<int>(it->first.g2), static_cast<int>(it->first.g3), it->second});
  return join_terms(out);
}

RationalFn::RationalFn(WHPoly numerator, WHPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
}

bool operator==(const RationalFn& x, const RationalFn& y) {
  return x.num_ * y.den_ == y.num_ * x.den_;
}

std::string RationalFn::to_string() const {
  if (den_.size() == 1) {
    const auto& [dm, dc] = *den_.terms().begin();
    std::vector<LaurentTerm> out;
    for (auto it = num_.terms().rbegin(); it != num_.terms().rend(); ++it)
      out.push_back({static_cast<int>(it->first.g2) - static_cast<int>(dm.g2),
                     static_cast<int>(it->first.g3) - static_cast<int>(dm.g3), it->second / dc});
    return join_terms(out);
  }
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace ezeta
