#include "hc3/exact_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hc3 {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(BigInt coeff, int degree) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return IntPolynomial(std::move(c));
}

const BigInt& IntPolynomial::coeff(int i) const {
  static const BigInt zero{0};
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < coeffs_.size()) c[i] += coeffs_[i];
    if (i < o.coeffs_.size()) c[i] += o.coeffs_[i];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  return *this + o.scaled(BigInt(-1));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::scaled(const BigInt& s) const {
  std::vector<BigInt> c = coeffs_;
  for (auto& x : c) x *= s;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * BigInt(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted_by_one() const {
  // Plain binomial expansion; O(n^2) big-int multiplies, fine at our degrees.
  std::vector<BigInt> res(coeffs_.size());
  std::vector<BigInt> binom;  // row of Pascal's triangle for current i
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i == 0) {
      binom = {BigInt(1)};
    } else {
      std::vector<BigInt> next(i + 1, BigInt(1));
      for (std::size_t j = 1; j < i; ++j) next[j] = binom[j - 1] + binom[j];
      binom = std::move(next);
    }
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j <= i; ++j) res[j] += coeffs_[i] * binom[j];
  }
  return IntPolynomial(std::move(res));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) {
    throw std::domain_error("exact division failed: degree too small");
  }
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
  const BigInt& lead = divisor.coeffs_.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt& top = rem[i + divisor.coeffs_.size() - 1];
    if (top % lead != 0) throw std::domain_error("exact division failed: non-integer quotient");
    quot[i] = top / lead;
    if (quot[i] == 0) continue;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) {
      rem[i + j] -= quot[i] * divisor.coeffs_[j];
    }
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("exact division failed: nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

BigRat IntPolynomial::eval(const BigRat& x) const {
  BigRat acc{0};
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + BigRat(coeffs_[i]);
  }
  return acc;
}

double IntPolynomial::eval_double(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i].convert_to<double>();
  }
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
    else if (coeffs_[i] < 0) os << "-";
    first = false;
    BigInt a = abs(coeffs_[i]);
    if (i == 0 || a != 1) os << a.str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

int descartes_bound(const IntPolynomial& p) {
  int variations = 0;
  int last = 0;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    const int s = c > 0 ? 1 : -1;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

namespace {

using RatPoly = std::vector<BigRat>;  // ascending, trailing zeros trimmed

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const BigRat f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_at_zero(const RatPoly& p) {
  for (const auto& c : p) {
    if (c != 0) return c > 0 ? 1 : -1;  // first nonzero coefficient; p(0)=c0
  }
  return 0;
}

int sign_at_infinity(const RatPoly& p) {
  if (p.empty()) return 0;
  return p.back() > 0 ? 1 : -1;
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int count_positive_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no root count");
  // Strip roots at the origin; they are not positive.
  std::size_t first_nonzero = 0;
  while (p.coeff(static_cast<int>(first_nonzero)) == 0) ++first_nonzero;
  RatPoly f;
  for (int i = static_cast<int>(first_nonzero); i <= p.degree(); ++i) {
    f.emplace_back(p.coeff(i));
  }
  if (f.size() <= 1) return 0;

  // Sturm chain p0, p1 = p0', p_{i+1} = -rem(p_{i-1}, p_i). The chain counts
  // distinct roots in (0, inf) as V(0) - V(inf); 0 is not a root after the
  // strip above.
  std::vector<RatPoly> chain;
  chain.push_back(f);
  RatPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * BigRat(i);
  trim(d);
  chain.push_back(d);
  while (chain.back().size() > 0) {
    RatPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }

  std::vector<int> at0, atinf;
  at0.reserve(chain.size());
  atinf.reserve(chain.size());
  for (const auto& q : chain) {
    at0.push_back(sign_at_zero(q));
    atinf.push_back(sign_at_infinity(q));
  }
  return variations(at0) - variations(atinf);
}

IntPolynomial r_polynomial(int k) {
  if (k < 2) throw std::invalid_argument("r_polynomial requires k >= 2");
  auto t_pow_minus_one = [](int p) {
    if (p == 0) return IntPolynomial{};
    std::vector<BigInt> c(static_cast<std::size_t>(p) + 1);
    c[0] = -1;
    c.back() = 1;
    return IntPolynomial(std::move(c));
  };
  const IntPolynomial a = t_pow_minus_one(k) * t_pow_minus_one(2 * k);
  const IntPolynomial b =
      IntPolynomial::monomial(BigInt(k), 1) * t_pow_minus_one(k - 2) * t_pow_minus_one(2 * k);
  const IntPolynomial c = (IntPolynomial::monomial(BigInt(1), k) * IntPolynomial{-1, 1} *
                           t_pow_minus_one(k - 1))
                              .scaled(BigInt(-2) * k * k);
  return a + b + c;
}

RFactorizationReport verify_R_factorization(int k) {
  RFactorizationReport rep;
  rep.k = k;
  const IntPolynomial R = r_polynomial(k);
  const IntPolynomial R1 = R.shifted_by_one();

  rep.low_coefficients_vanish = true;
  for (int i = 0; i <= 3; ++i) {
    if (R1.coeff(i) != 0) {
      rep.low_coefficients_vanish = false;
      rep.violation = "coefficient of x^" + std::to_string(i) + " is " + R1.coeff(i).str();
      break;
    }
  }
  rep.higher_coefficients_positive = R1.degree() >= 4;
  for (int i = 4; i <= R1.degree() && rep.higher_coefficients_positive; ++i) {
    if (R1.coeff(i) <= 0) {
      rep.higher_coefficients_positive = false;
      rep.violation = "coefficient of x^" + std::to_string(i) + " is " + R1.coeff(i).str();
    }
  }

  const IntPolynomial t_minus_1{-1, 1};
  const IntPolynomial den = t_minus_1 * t_minus_1 * t_minus_1 * t_minus_1;
  try {
    const IntPolynomial L = R.divide_exact(den);
    rep.division_exact = true;
    rep.quotient_nonnegative = !L.is_zero();
    BigInt sum{0};
    for (int i = 0; i <= L.degree(); ++i) {
      if (L.coeff(i) < 0) {
        rep.quotient_nonnegative = false;
        rep.violation = "quotient coefficient of t^" + std::to_string(i) + " is " + L.coeff(i).str();
        break;
      }
      sum += L.coeff(i);
    }
    if (rep.quotient_nonnegative && sum <= 0) {
      rep.quotient_nonnegative = false;
      rep.violation = "quotient coefficient sum is not positive";
    }
  } catch (const std::domain_error& e) {
    rep.division_exact = false;
    rep.violation = e.what();
  }
  return rep;
}

}  // namespace hc3
