#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace cyclemonoid {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer polynomial, coefficient of degree d at index d. Trailing
// zeros are normalized away; the zero polynomial has no coefficients.
struct IntPolynomial {
  std::vector<BigInt> coeffs;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) { normalize(); }
  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(int degree, BigInt c = 1);

  void normalize();
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  BigInt at(int d) const { return d >= 0 && d < static_cast<int>(coeffs.size()) ? coeffs[d] : BigInt(0); }
  BigInt eval(const BigInt& x) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs == b.coeffs;
  }
};

// Exact division; throws when the divisor does not divide evenly (Bareiss
// pivots always do).
IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den);

// Power series over the integers truncated at order D (inclusive).
struct TruncatedSeries {
  std::vector<BigInt> coeffs;  // size order+1
  int order = 0;

  TruncatedSeries() = default;
  explicit TruncatedSeries(int d) : coeffs(d + 1, 0), order(d) {}
  static TruncatedSeries from_polynomial(const IntPolynomial& p, int order);

  BigInt at(int d) const { return d >= 0 && d <= order ? coeffs[d] : BigInt(0); }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order == b.order && a.coeffs == b.coeffs;
  }

  // Multiplicative inverse; requires a unit constant term (+1 or -1).
  TruncatedSeries inverse() const;
};

// num/den expanded to the given order; den must have a unit constant term.
TruncatedSeries series_of_rational(const IntPolynomial& num, const IntPolynomial& den, int order);

}  // namespace cyclemonoid
