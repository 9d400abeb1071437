#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hychrom/errors.hpp"
#include "hychrom/numeric.hpp"

namespace hychrom {

// Dense univariate polynomial with exact integer coefficients, constant term
// first. The zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static IntPolynomial monomial(int power, Int coeff = 1) {
    std::vector<Int> c(power + 1);
    c[power] = std::move(coeff);
    return IntPolynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const Int& coefficient(int i) const {
    static const Int zero = 0;
    if (i < 0 || i > degree()) return zero;
    return coeffs_[i];
  }

  const std::vector<Int>& coefficients() const { return coeffs_; }

  Int operator()(const Int& x) const {
    Int acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  void add_term(int power, const Int& coeff) {
    if (power >= static_cast<int>(coeffs_.size()))
      coeffs_.resize(power + 1, Int(0));
    coeffs_[power] += coeff;
    trim();
  }

  IntPolynomial& operator+=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size())
      coeffs_.resize(other.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
      coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size())
      coeffs_.resize(other.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
      coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    a += b;
    return a;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    a -= b;
    return a;
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(const Int& s, IntPolynomial p) {
    if (s == 0) return {};
    for (auto& c : p.coeffs_) c *= s;
    return p;
  }

  bool operator==(const IntPolynomial& other) const = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

// Serialized form: JSON array of decimal coefficient strings, constant first.
inline nlohmann::json polynomial_to_json(const IntPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& c : p.coefficients()) arr.push_back(to_decimal(c));
  return arr;
}

inline IntPolynomial polynomial_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw ParseError("polynomial is not an array");
  std::vector<Int> coeffs;
  for (const auto& item : arr) {
    if (!item.is_string()) throw ParseError("coefficient is not a string");
    coeffs.emplace_back(item.get<std::string>());
  }
  return IntPolynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Falling-factorial basis. ff_j(x) = x(x-1)...(x-j+1), ff_0 = 1.

// Signed Stirling numbers of the first kind: ff_j(x) = sum_i s(j,i) x^i.
// Row-major triangle up to row j = max_j.
inline std::vector<std::vector<Int>> stirling_first_signed(int max_j) {
  std::vector<std::vector<Int>> s(max_j + 1);
  s[0] = {Int(1)};
  for (int j = 1; j <= max_j; ++j) {
    s[j].assign(j + 1, Int(0));
    for (int i = 0; i < j; ++i) {
      // ff_{j} = ff_{j-1} * (x - (j-1))
      s[j][i + 1] += s[j - 1][i];
      s[j][i] -= Int(j - 1) * s[j - 1][i];
    }
  }
  return s;
}

// Stirling numbers of the second kind: x^i = sum_j S(i,j) ff_j(x).
inline std::vector<std::vector<Int>> stirling_second(int max_i) {
  std::vector<std::vector<Int>> S(max_i + 1);
  S[0] = {Int(1)};
  for (int i = 1; i <= max_i; ++i) {
    S[i].assign(i + 1, Int(0));
    for (int j = 1; j <= i; ++j) {
      S[i][j] = S[i - 1][j - 1];
      if (j < i) S[i][j] += Int(j) * S[i - 1][j];
    }
  }
  return S;
}

// counts[j] are coefficients in the falling-factorial basis.
inline IntPolynomial from_falling_factorial(const std::vector<Int>& counts) {
  int max_j = static_cast<int>(counts.size()) - 1;
  auto s = stirling_first_signed(max_j);
  IntPolynomial p;
  for (int j = 0; j <= max_j; ++j) {
    if (counts[j] == 0) continue;
    for (int i = 0; i <= j; ++i) p.add_term(i, counts[j] * s[j][i]);
  }
  return p;
}

// Exact expansion of p over the falling-factorial basis; returns counts[j]
// for j = 0..deg(p).
inline std::vector<Int> to_falling_factorial(const IntPolynomial& p) {
  int deg = p.degree();
  if (deg < 0) return {};
  auto S = stirling_second(deg);
  std::vector<Int> counts(deg + 1, Int(0));
  for (int i = 0; i <= deg; ++i) {
    const Int& c = p.coefficient(i);
    if (c == 0) continue;
    for (int j = 0; j <= i; ++j) counts[j] += c * S[i][j];
  }
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

}  // namespace hychrom
