#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace ezeta {

using Rational = boost::multiprecision::cpp_rational;

/// Exponents (a, b) of the monomial g2^a g3^b.
struct Monomial {
  unsigned g2 = 0;
  unsigned g3 = 0;

  /// g2 carries weight 4 and g3 weight 6.
  int weight() const { return 4 * static_cast<int>(g2) + 6 * static_cast<int>(g3); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial in g2, g3 with exact rational coefficients.
///
/// Zero coefficients are never stored. A polynomial optionally carries a
/// homogeneity tag: the common weight of all of its monomials. Products add
/// tags, sums keep a tag only when both sides agree. The zero polynomial
/// may carry any tag.
class WHPoly {
 public:
  WHPoly() = default;

  static WHPoly zero(std::optional<int> weight = std::nullopt);
  static WHPoly constant(const Rational& c);
  static WHPoly monomial(const Rational& c, unsigned g2_exp, unsigned g3_exp);
  static WHPoly g2() { return monomial(1, 1, 0); }
  static WHPoly g3() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::optional<int> weight() const { return weight_; }

  /// Coefficient of g2^a g3^b (zero if absent).
  Rational coefficient(unsigned g2_exp, unsigned g3_exp) const;

  WHPoly partial_g2() const;
  WHPoly partial_g3() const;

  WHPoly operator-() const;
  friend WHPoly operator+(const WHPoly& x, const WHPoly& y);
  friend WHPoly operator-(const WHPoly& x, const WHPoly& y) { return x + (-y); }
  friend WHPoly operator*(const WHPoly& x, const WHPoly& y);
  friend WHPoly operator*(const Rational& s, const WHPoly& p);

  /// Structural equality of the coefficient maps; tags are ignored.
  friend bool operator==(const WHPoly& x, const WHPoly& y) { return x.terms_ == y.terms_; }

  /// "15/4928 g2^3 + 1/55 g3^2"; highest g2 power first, "0" when empty.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
  std::optional<int> weight_;
};

/// Quotient of two WHPoly; the denominator is never the zero polynomial.
class RationalFn {
 public:
  /// Throws std::invalid_argument for a zero denominator.
  RationalFn(WHPoly numerator, WHPoly denominator);

  const WHPoly& numerator() const { return num_; }
  const WHPoly& denominator() const { return den_; }

  /// Exact p1 q2 == p2 q1; no canonical form is ever computed.
  friend bool operator==(const RationalFn& x, const RationalFn& y);

  /// When the denominator is a single monomial the quotient is printed as a
  /// sum of Laurent monomials ("-2/3 g3/g2"); otherwise as "(p) / (q)".
  std::string to_string() const;

 private:
  WHPoly num_;
  WHPoly den_;
};

/// "p/q", or "p" when q == 1.
std::string rational_to_string(const Rational& r);

}  // namespace ezeta
