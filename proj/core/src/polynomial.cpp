#include "nbpoly/polynomial.hpp"

#include <array>
#include <stdexcept>

namespace nbpoly {

Polynomial::Polynomial(Integer constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

Polynomial Polynomial::monomial(Integer coefficient, std::size_t degree) {
  Polynomial p;
  if (coefficient != 0) {
    p.coeffs_.assign(degree + 1, Integer(0));
    p.coeffs_[degree] = std::move(coefficient);
  }
  return p;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Integer Polynomial::evaluate(const Integer& t) const {
  Integer result = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * t + *it;
  return result;
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational result = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * t + *it;
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Integer> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator-(const Polynomial& a) {
  Polynomial p;
  p.coeffs_.reserve(a.coeffs_.size());
  for (const Integer& c : a.coeffs_) p.coeffs_.push_back(-c);
  return p;
}

namespace {

// One monomial like "3x^2"; the coefficient magnitude must be nonzero.
std::string render_power(const std::string& var, std::size_t degree, bool braced) {
  if (degree == 0) return "";
  if (degree == 1) return var;
  if (braced) return var + "^{" + std::to_string(degree) + "}";
  return var + "^" + std::to_string(degree);
}

std::string render_term(const Integer& magnitude, const std::string& powers) {
  if (powers.empty()) return magnitude.str();
  if (magnitude == 1) return powers;
  return magnitude.str() + powers;
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [negative, body] = terms[i];
    if (i == 0)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  std::vector<std::pair<bool, std::string>> terms;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    terms.emplace_back(coeffs_[k] < 0, render_term(abs(coeffs_[k]), render_power("x", k, false)));
  }
  return join_terms(terms);
}

std::string Polynomial::to_latex() const {
  std::vector<std::pair<bool, std::string>> terms;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    terms.emplace_back(coeffs_[k] < 0, render_term(abs(coeffs_[k]), render_power("x", k, true)));
  }
  return join_terms(terms);
}

std::vector<std::string> Polynomial::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const Integer& c : coeffs_) out.push_back(c.str());
  return out;
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
  Polynomial result;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) result = result * q + Polynomial(*it);
  return result;
}

const Integer& binomial(int n, int k) {
  static const auto table = [] {
    std::array<std::array<Integer, kMaxBinomial + 1>, kMaxBinomial + 1> t{};
    for (int i = 0; i <= kMaxBinomial; ++i) {
      t[static_cast<std::size_t>(i)][0] = 1;
      for (int j = 1; j <= i; ++j)
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
            (j <= i - 1 ? t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]
                        : Integer(0));
    }
    return t;
  }();
  static const Integer zero = 0;
  if (n < 0 || k < 0 || k > n) return zero;
  if (n > kMaxBinomial) throw std::out_of_range("binomial table covers n <= 64");
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Polynomial binomial_power(int n) {
  if (n < 0) throw std::out_of_range("binomial_power requires n >= 0");
  std::vector<Integer> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = binomial(n, k);
  return Polynomial(std::move(coeffs));
}

void BivariatePolynomial::add_term(int x_degree, int y_degree, const Integer& coefficient) {
  if (x_degree < 0 || y_degree < 0) throw std::out_of_range("negative exponent");
  if (coefficient == 0) return;
  Key key{x_degree, y_degree};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coefficient);
    return;
  }
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

Integer BivariatePolynomial::coefficient(int x_degree, int y_degree) const {
  auto it = terms_.find(Key{x_degree, y_degree});
  return it == terms_.end() ? Integer(0) : it->second;
}

Polynomial BivariatePolynomial::coefficient_of_y(int k) const {
  Polynomial out;
  for (const auto& [key, coeff] : terms_)
    if (key.second == k)
      out += Polynomial::monomial(coeff, static_cast<std::size_t>(key.first));
  return out;
}

Integer BivariatePolynomial::coefficient_sum() const {
  Integer sum = 0;
  for (const auto& [key, coeff] : terms_) sum += coeff;
  return sum;
}

namespace {

std::string render_bivariate(const std::map<BivariatePolynomial::Key, Integer>& terms,
                             bool braced) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [key, coeff] : terms) {
    const std::string powers = render_power("x", static_cast<std::size_t>(key.first), braced) +
                               render_power("y", static_cast<std::size_t>(key.second), braced);
    parts.emplace_back(coeff < 0, render_term(abs(coeff), powers));
  }
  return join_terms(parts);
}

}  // namespace

std::string BivariatePolynomial::to_string() const { return render_bivariate(terms_, false); }

std::string BivariatePolynomial::to_latex() const { return render_bivariate(terms_, true); }

}  // namespace nbpoly
