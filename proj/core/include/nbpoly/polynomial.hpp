#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nbpoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Univariate polynomial with exact integer coefficients, stored dense in
// ascending degree. Always normalized: the top coefficient is nonzero and
// the zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int constant) : Polynomial(Integer(constant)) {}
  Polynomial(Integer constant);
  explicit Polynomial(std::vector<Integer> coefficients);

  static Polynomial monomial(Integer coefficient, std::size_t degree);
  static Polynomial variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;

  // Coefficient of x^k; 0 beyond the degree.
  Integer coefficient(std::size_t k) const;

  const std::vector<Integer>& coefficients() const { return coeffs_; }

  Integer evaluate(const Integer& t) const;
  Rational evaluate(const Rational& t) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);

  bool operator==(const Polynomial&) const = default;

  // "1 + 3x + x^2"; the zero polynomial prints as "0".
  std::string to_string() const;
  // Same terms with braced exponents: "1 + 3x + x^{2}".
  std::string to_latex() const;
  // Decimal coefficient strings in ascending degree; empty for zero.
  std::vector<std::string> coefficient_strings() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

// p(q(x)) by Horner evaluation over polynomial arguments.
Polynomial compose(const Polynomial& p, const Polynomial& q);

// (1+x)^n with exact binomial coefficients; n >= 0.
Polynomial binomial_power(int n);

inline constexpr int kMaxBinomial = 64;

// C(n, k) with exact integers, tabulated up to n = 64.
const Integer& binomial(int n, int k);

// Sparse exact-integer polynomial in x and y; stores only nonzero
// coefficients, keyed by (x-degree, y-degree) in lexicographic order.
class BivariatePolynomial {
 public:
  using Key = std::pair<int, int>;

  void add_term(int x_degree, int y_degree, const Integer& coefficient);
  Integer coefficient(int x_degree, int y_degree) const;

  // Univariate polynomial in x collecting all monomials with y-degree k.
  Polynomial coefficient_of_y(int k) const;

  Integer coefficient_sum() const;

  const std::map<Key, Integer>& terms() const { return terms_; }

  bool operator==(const BivariatePolynomial&) const = default;

  std::string to_string() const;
  std::string to_latex() const;

 private:
  std::map<Key, Integer> terms_;
};

}  // namespace nbpoly
