#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace hc3 {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with exact integer coefficients, ascending
/// degree order. The zero polynomial has an empty coefficient list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial monomial(BigInt coeff, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const BigInt& coeff(int i) const;  // 0 outside the stored range
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial scaled(const BigInt& s) const;

  IntPolynomial derivative() const;

  /// p(x+1), exact Taylor shift.
  IntPolynomial shifted_by_one() const;

  /// Exact division; throws std::domain_error when the remainder is nonzero
  /// or the division leaves the integers.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  BigRat eval(const BigRat& x) const;
  double eval_double(double x) const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Descartes bound: sign variations in the coefficient sequence, an upper
/// bound (matching parity) on the number of positive real roots.
int descartes_bound(const IntPolynomial& p);

/// Exact count of distinct positive real roots via a Sturm chain over
/// rationals on (0, inf). Throws std::invalid_argument on the zero polynomial.
int count_positive_roots(const IntPolynomial& p);

/// R(t,k) = (t^k-1)(t^2k-1) + k t (t^(k-2)-1)(t^2k-1) - 2 k^2 t^k (t-1)(t^(k-1)-1),
/// the numerator polynomial controlling the sign of the TI curve's derivative.
IntPolynomial r_polynomial(int k);

struct RFactorizationReport {
  int k = 0;
  bool low_coefficients_vanish = false;   // x^0..x^3 of R(x+1) are zero
  bool higher_coefficients_positive = false;
  bool division_exact = false;            // (t-1)^4 divides R exactly
  bool quotient_nonnegative = false;      // quotient coefficients >= 0, sum > 0
  std::string violation;                  // first failing coefficient, if any
  bool pass() const {
    return low_coefficients_vanish && higher_coefficients_positive &&
           division_exact && quotient_nonnegative;
  }
};

/// Verifies, with exact integers, that R(t,k) = (t-1)^4 L(t) with L of
/// nonnegative coefficients and that all coefficients of R(x+1) above x^3 are
/// strictly positive.
RFactorizationReport verify_R_factorization(int k);

}  // namespace hc3
