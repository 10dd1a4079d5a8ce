#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "nbpoly/polynomial.hpp"

using nbpoly::BivariatePolynomial;
using nbpoly::binomial;
using nbpoly::binomial_power;
using nbpoly::compose;
using nbpoly::Integer;
using nbpoly::Polynomial;
using nbpoly::Rational;

namespace {

Polynomial poly(std::vector<long long> coeffs) {
  std::vector<Integer> c(coeffs.begin(), coeffs.end());
  return Polynomial(std::move(c));
}

Polynomial random_poly(std::mt19937_64& rng) {
  std::vector<Integer> c(rng() % 7);
  for (Integer& v : c) v = static_cast<long long>(rng() % 19) - 9;
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("normalization and accessors") {
  CHECK(Polynomial().is_zero());
  CHECK(poly({1, 3, 1, 0, 0}) == poly({1, 3, 1}));
  CHECK(poly({0, 0}).is_zero());
  CHECK(!Polynomial().degree().has_value());
  CHECK(poly({1, 3, 1}).degree() == 2);
  CHECK(poly({1, 3, 1}).coefficient(1) == 3);
  CHECK(poly({1, 3, 1}).coefficient(7) == 0);
  CHECK(Polynomial::monomial(4, 3) == poly({0, 0, 0, 4}));
  CHECK(Polynomial::monomial(0, 3).is_zero());
  CHECK(Polynomial::variable() == poly({0, 1}));
}

TEST_CASE("ring arithmetic examples") {
  const Polynomial p = poly({1, 3, 1});
  CHECK((p - p).is_zero());
  CHECK(poly({1, 1}) * poly({1, 1}) == poly({1, 2, 1}));
  CHECK(poly({1, 2}) * Polynomial::variable() == poly({0, 1, 2}));
  CHECK(-poly({1, -2}) == poly({-1, 2}));
  CHECK(p + 1 == poly({2, 3, 1}));
  CHECK(p - 1 == poly({0, 3, 1}));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial a = random_poly(rng);
    const Polynomial b = random_poly(rng);
    const Polynomial c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("compose") {
  CHECK(compose(poly({1, 2}), poly({0, 2, 1})) == poly({1, 4, 2}));
  CHECK(compose(poly({1, 3, 1}), poly({0, 2, 1})) == poly({1, 6, 7, 4, 1}));
  const Polynomial p = poly({3, -1, 0, 5});
  CHECK(compose(p, Polynomial::variable()) == p);
  CHECK(compose(Polynomial(), p).is_zero());

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_poly(rng);
    const Polynomial b = random_poly(rng);
    const Integer t = static_cast<long long>(rng() % 9) - 4;
    CHECK(compose(a, b).evaluate(t) == a.evaluate(b.evaluate(t)));
  }
}

TEST_CASE("binomial powers") {
  CHECK(binomial_power(0) == poly({1}));
  CHECK(binomial_power(2) == poly({1, 2, 1}));
  CHECK(binomial_power(4) == poly({1, 4, 6, 4, 1}));

  Polynomial product(1);
  for (int n = 0; n <= 20; ++n) {
    CHECK(binomial_power(n) == product);
    product *= poly({1, 1});
  }

  for (int n : {0, 1, 5, 13, 40, 64}) {
    const Polynomial row = binomial_power(n);
    Integer sum = 0;
    for (const Integer& c : row.coefficients()) sum += c;
    CHECK(sum == Integer(1) << n);
  }
}

TEST_CASE("exact large coefficients") {
  CHECK(binomial(63, 31) == Integer("916312070471295267"));
  CHECK(binomial_power(64).coefficient(32) == Integer("1832624140942590534"));
  // Past 64-bit territory.
  const Polynomial big = binomial_power(64) * binomial_power(64);
  CHECK(big.coefficient(64) == Integer("23951146041928082866135587776380551750"));
}

TEST_CASE("evaluation") {
  const Polynomial p = poly({1, 3, 1});
  CHECK(p.evaluate(Integer(1)) == 5);
  CHECK(p.evaluate(Integer(0)) == 1);
  CHECK(p.evaluate(Integer(-2)) == -1);
  CHECK(poly({1, 2}).evaluate(Rational(1, 2)) == Rational(2));
  CHECK(poly({0, 0, 1}).evaluate(Rational(2, 3)) == Rational(4, 9));
}

TEST_CASE("text forms") {
  CHECK(poly({1, 3, 1}).to_string() == "1 + 3x + x^2");
  CHECK(poly({1, 4, 2}).to_string() == "1 + 4x + 2x^2");
  CHECK(Polynomial().to_string() == "0");
  CHECK(poly({0, 1}).to_string() == "x");
  CHECK(poly({-1, -3}).to_string() == "-1 - 3x");
  CHECK(poly({0, 5, 0, -1}).to_string() == "5x - x^3");
  CHECK(poly({1, 4, 6, 4}).to_latex() == "1 + 4x + 6x^{2} + 4x^{3}");
  CHECK(poly({1, 3, 1}).coefficient_strings() == std::vector<std::string>{"1", "3", "1"});
  CHECK(Polynomial().coefficient_strings().empty());
}

TEST_CASE("bivariate polynomial") {
  BivariatePolynomial q;
  q.add_term(0, 0, 1);
  q.add_term(1, 1, 3);
  q.add_term(2, 1, 2);
  q.add_term(3, 1, 1);
  q.add_term(2, 2, 1);

  CHECK(q.coefficient(1, 1) == 3);
  CHECK(q.coefficient(5, 5) == 0);
  CHECK(q.coefficient_of_y(1) == poly({0, 3, 2, 1}));
  CHECK(q.coefficient_of_y(0) == poly({1}));
  CHECK(q.coefficient_of_y(2) == poly({0, 0, 1}));
  CHECK(q.coefficient_of_y(3).is_zero());
  CHECK(q.coefficient_sum() == 8);
  CHECK(q.to_string() == "1 + 3xy + 2x^2y + x^2y^2 + x^3y");
  CHECK(q.to_latex() == "1 + 3xy + 2x^{2}y + x^{2}y^{2} + x^{3}y");

  SUBCASE("zero coefficients are never stored") {
    BivariatePolynomial r;
    r.add_term(1, 1, 5);
    r.add_term(1, 1, -5);
    CHECK(r.terms().empty());
    CHECK(r == BivariatePolynomial());
    r.add_term(2, 0, 0);
    CHECK(r.terms().empty());
  }
}
