#include "cyclemonoid/polynomial.hpp"

#include <stdexcept>

namespace cyclemonoid {

IntPolynomial IntPolynomial::constant(BigInt c) {
  IntPolynomial p;
  if (c != 0) p.coeffs.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt c) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs.assign(degree + 1, 0);
    p.coeffs[degree] = std::move(c);
  }
  return p;
}

void IntPolynomial::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  out.normalize();
  return out;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  out.normalize();
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPolynomial out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  out.normalize();
  return out;
}

IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) throw std::domain_error("exact_div: not divisible");
  IntPolynomial rem = num;
  IntPolynomial quot;
  quot.coeffs.assign(num.degree() - den.degree() + 1, 0);
  const BigInt& lead = den.coeffs.back();
  for (int d = num.degree(); d >= den.degree(); --d) {
    BigInt c = rem.at(d);
    if (c == 0) continue;
    if (c % lead != 0) throw std::domain_error("exact_div: not divisible");
    BigInt q = c / lead;
    quot.coeffs[d - den.degree()] = q;
    for (int i = 0; i <= den.degree(); ++i)
      rem.coeffs[d - den.degree() + i] -= q * den.coeffs[i];
  }
  rem.normalize();
  if (!rem.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  quot.normalize();
  return quot;
}

TruncatedSeries TruncatedSeries::from_polynomial(const IntPolynomial& p, int order) {
  TruncatedSeries s(order);
  for (int d = 0; d <= order; ++d) s.coeffs[d] = p.at(d);
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order != b.order) throw std::invalid_argument("series order mismatch");
  TruncatedSeries out(a.order);
  for (int d = 0; d <= a.order; ++d) out.coeffs[d] = a.coeffs[d] + b.coeffs[d];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order != b.order) throw std::invalid_argument("series order mismatch");
  TruncatedSeries out(a.order);
  for (int i = 0; i <= a.order; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; i + j <= a.order; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs.empty() || (coeffs[0] != 1 && coeffs[0] != -1))
    throw std::domain_error("series inverse requires a unit constant term");
  TruncatedSeries out(order);
  const BigInt u = coeffs[0];  // self-inverse unit
  out.coeffs[0] = u;
  for (int d = 1; d <= order; ++d) {
    BigInt acc = 0;
    for (int k = 1; k <= d; ++k) acc += coeffs[k] * out.coeffs[d - k];
    out.coeffs[d] = -u * acc;
  }
  return out;
}

TruncatedSeries series_of_rational(const IntPolynomial& num, const IntPolynomial& den, int order) {
  return TruncatedSeries::from_polynomial(num, order) *
         TruncatedSeries::from_polynomial(den, order).inverse();
}

}  // namespace cyclemonoid
