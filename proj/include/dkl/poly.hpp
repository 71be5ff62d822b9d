#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace dkl {

/// Integer polynomials in q with exact arithmetic.  Coefficients are kept
/// dense with no trailing zeros; the zero polynomial has an empty
/// coefficient vector and degree kNegInfDegree.
class IntPolynomial {
 public:
  static constexpr int kNegInfDegree = std::numeric_limits<int>::min();

  IntPolynomial() = default;
  IntPolynomial(long long constant);
  static IntPolynomial monomial(long long c, int exp);
  static IntPolynomial from_coeffs(std::vector<long long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;
  long long coeff(int k) const;
  long long constant_term() const { return coeff(0); }
  const std::vector<long long>& coeffs() const { return coeffs_; }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    a += b;
    return a;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    a -= b;
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  /// Multiplication by q^k, k >= 0.
  IntPolynomial shifted(int k) const;
  IntPolynomial scaled(long long c) const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
    return !(a == b);
  }

  /// Text form "1 + q + 3q^2"; "0" for the zero polynomial.
  std::string to_string() const;
  static IntPolynomial parse(const std::string& text);

 private:
  std::vector<long long> coeffs_;
  void trim();
};

/// Integer Laurent polynomials in v, where v^2 corresponds to q.  Terms are
/// kept sparse, sorted by exponent, with no zero coefficients.
class HalfLaurent {
 public:
  HalfLaurent() = default;
  static HalfLaurent term(long long c, int exp);

  /// Substitute q -> v^(2*dir) into p and multiply by v^shift.
  static HalfLaurent from_q_poly(const IntPolynomial& p, int dir, int shift);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;      // max exponent, kNegInfDegree when zero
  int low_degree() const;  // min exponent
  long long coeff(int e) const;
  const std::vector<std::pair<int, long long>>& terms() const { return terms_; }

  HalfLaurent bar() const;  // v -> v^{-1}
  HalfLaurent shifted(int k) const;
  HalfLaurent scaled(long long c) const;

  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) {
    a += b;
    return a;
  }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) {
    a -= b;
    return a;
  }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);

  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) {
    return !(a == b);
  }

  static constexpr int kNegInfDegree = IntPolynomial::kNegInfDegree;

  std::string to_string() const;  // "v^-1 - v", "0"

 private:
  std::vector<std::pair<int, long long>> terms_;
  void add_term(int e, long long c);
  friend class IntPolynomial;
};

}  // namespace dkl
