#pragma once

// Exact arithmetic in the formal deformation parameter q: Laurent polynomials
// with integer coefficients and their quotient field. All higher layers build
// on these scalars, so every identity asserted downstream is exact.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace slekit {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Laurent polynomial in q with integer coefficients.
///
/// Stored as the lowest exponent present plus a dense coefficient vector;
/// coeffs[i] is the coefficient of q^(min_exp + i). Canonical form: first and
/// last coefficients nonzero, and the zero polynomial is exactly
/// {min_exp = 0, coeffs = {}}.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // constant polynomial
  LaurentPoly(BigInt c);
  LaurentPoly(int min_exp, std::vector<BigInt> coeffs);

  static LaurentPoly q_power(int k);  // q^k

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  int min_exp() const { return min_exp_; }
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int exp) const;  // coefficient of q^exp (0 outside range)

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly shifted(int k) const;  // multiply by q^k

  /// Exact division; throws std::domain_error on nonzero remainder.
  LaurentPoly exact_div(const LaurentPoly& d) const;

  /// gcd in Z[q, q^-1], normalized to min_exp = 0 with positive lowest
  /// coefficient. Includes the integer content.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  BigInt content() const;  // gcd of coefficients, >= 0

  Rational eval(const Rational& q) const;  // q must be nonzero

  std::string to_string() const;  // human-readable, e.g. "q^2 - 2 + q^-2"
  std::string to_json() const;
  static LaurentPoly from_json(const std::string& text);

 private:
  void trim();

  int min_exp_ = 0;
  std::vector<BigInt> coeffs_;
};

/// Rational function in q: quotient of two Laurent polynomials.
///
/// Canonical form: gcd(num, den) = 1 over Z[q, q^-1], den has min_exp = 0 and
/// positive lowest-degree coefficient. Immutable after construction.
class QRat {
 public:
  QRat() : num_(), den_(1) {}
  QRat(long long c) : num_(c), den_(1) {}
  QRat(LaurentPoly p) : num_(std::move(p)), den_(1) {}
  QRat(LaurentPoly num, LaurentPoly den);

  static QRat q_power(int k) { return QRat(LaurentPoly::q_power(k)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  QRat operator-() const;
  QRat operator+(const QRat& o) const;
  QRat operator-(const QRat& o) const;
  QRat operator*(const QRat& o) const;
  QRat operator/(const QRat& o) const;  // throws on division by zero
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  QRat& operator/=(const QRat& o) { return *this = *this / o; }

  QRat inverse() const;

  /// Equality by cross-multiplication of canonical forms.
  bool operator==(const QRat& o) const;
  bool operator!=(const QRat& o) const { return !(*this == o); }

  /// Evaluate at an exact rational value of q (specialization hook used for
  /// rank computations; q must be nonzero).
  Rational eval(const Rational& q) const;

  std::string to_string() const;
  std::string to_json() const;
  static QRat from_json(const std::string& text);

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// q-integer [m] = (q^m - q^-m) / (q - q^-1), computed by exact division.
QRat qnum(int m);

/// q-factorial [n]! = [n][n-1]...[1]; [0]! = 1. Throws on negative n.
QRat qfact(int n);

}  // namespace slekit
