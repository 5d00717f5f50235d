#include "slekit/qfield.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace slekit {

using json = nlohmann::json;

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) coeffs_.push_back(BigInt(c));
}

LaurentPoly::LaurentPoly(BigInt c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

LaurentPoly::LaurentPoly(int min_exp, std::vector<BigInt> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::q_power(int k) {
  LaurentPoly p;
  p.min_exp_ = k;
  p.coeffs_.push_back(BigInt(1));
  return p;
}

void LaurentPoly::trim() {
  size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
  size_t hi = coeffs_.size();
  while (hi > lo && coeffs_[hi - 1] == 0) --hi;
  if (lo == hi) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  if (lo > 0 || hi < coeffs_.size()) {
    std::vector<BigInt> kept(coeffs_.begin() + lo, coeffs_.begin() + hi);
    coeffs_ = std::move(kept);
    min_exp_ += static_cast<int>(lo);
  }
}

bool LaurentPoly::is_one() const {
  return min_exp_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1;
}

BigInt LaurentPoly::coeff(int exp) const {
  if (is_zero() || exp < min_exp_ || exp > max_exp()) return BigInt(0);
  return coeffs_[exp - min_exp_];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(min_exp_, o.min_exp_);
  int hi = std::max(max_exp(), o.max_exp());
  std::vector<BigInt> c(static_cast<size_t>(hi - lo + 1));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[min_exp_ - lo + i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[o.min_exp_ - lo + i] += o.coeffs_[i];
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return LaurentPoly();
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return LaurentPoly(min_exp_ + o.min_exp_, std::move(c));
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return min_exp_ == o.min_exp_ && coeffs_ == o.coeffs_;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (is_zero()) return *this;
  LaurentPoly r(*this);
  r.min_exp_ += k;
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (is_zero()) return LaurentPoly();
  // Shift both to ordinary polynomials and long-divide; the q-power shift is a
  // unit and moves to the quotient.
  std::vector<BigInt> rem = coeffs_;
  const std::vector<BigInt>& div = d.coeffs_;
  if (rem.size() < div.size())
    throw std::domain_error("LaurentPoly: inexact division (degree)");
  std::vector<BigInt> quot(rem.size() - div.size() + 1);
  const BigInt& lead = div.back();
  for (size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + div.size() - 1];
    if (top == 0) continue;
    BigInt qc, r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw std::domain_error("LaurentPoly: inexact division (leading)");
    quot[k] = qc;
    for (size_t i = 0; i < div.size(); ++i) rem[k + i] -= qc * div[i];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::domain_error("LaurentPoly: inexact division (remainder)");
  return LaurentPoly(min_exp_ - d.min_exp_, std::move(quot));
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

// Ordinary-polynomial helpers on bare coefficient vectors (index = degree).

std::vector<BigInt> primitive_part(std::vector<BigInt> p) {
  BigInt g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : p) c /= g;
  return p;
}

void poly_trim(std::vector<BigInt>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Pseudo-remainder of a by b: lc(b)^(da-db+1) * a mod b.
std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const BigInt& lead = b.back();
  while (a.size() >= b.size()) {
    BigInt top = a.back();
    size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lead;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= top * b[i];
    poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  if (a.is_zero() || b.is_zero()) {
    const LaurentPoly& nz = a.is_zero() ? b : a;
    LaurentPoly g(0, nz.coeffs_);
    if (g.coeffs_[0] < 0)
      for (auto& c : g.coeffs_) c = -c;
    return g;
  }
  BigInt cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  // Primitive Euclidean algorithm on the ordinary-polynomial parts; q-power
  // shifts are units in Z[q, q^-1] and are dropped.
  std::vector<BigInt> f = primitive_part(a.coeffs_);
  std::vector<BigInt> g = primitive_part(b.coeffs_);
  if (f.size() < g.size()) std::swap(f, g);
  while (!g.empty()) {
    std::vector<BigInt> r = primitive_part(pseudo_rem(f, g));
    f = std::move(g);
    g = std::move(r);
  }
  for (auto& c : f) c *= cont;
  LaurentPoly out(0, std::move(f));
  if (!out.is_zero() && out.coeffs_[0] < 0)
    for (auto& c : out.coeffs_) c = -c;
  return out;
}

Rational LaurentPoly::eval(const Rational& q) const {
  if (is_zero()) return Rational(0);
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc *= q;
    acc += Rational(coeffs_[i]);
  }
  acc.canonicalize();
  // Multiply by q^min_exp (negative exponents via the inverse).
  if (min_exp_ != 0) {
    Rational p(1);
    Rational base = min_exp_ > 0 ? q : Rational(1) / q;
    for (int k = std::abs(min_exp_); k-- > 0;) p *= base;
    acc *= p;
    acc.canonicalize();
  }
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    int e = min_exp_ + static_cast<int>(i);
    BigInt abs_c = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (abs_c != 1 || e == 0) out << abs_c.get_str();
    if (e != 0) {
      if (abs_c != 1) out << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

std::string LaurentPoly::to_json() const {
  json j;
  j["min_exp"] = min_exp_;
  json arr = json::array();
  for (const auto& c : coeffs_) arr.push_back(c.get_str());
  j["coeffs"] = std::move(arr);
  return j.dump();
}

LaurentPoly LaurentPoly::from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<BigInt> coeffs;
  for (const auto& s : j.at("coeffs")) coeffs.emplace_back(s.get<std::string>());
  return LaurentPoly(j.at("min_exp").get<int>(), std::move(coeffs));
}

QRat::QRat(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
  canonicalize();
}

void QRat::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly g = LaurentPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  // All q-powers move into the numerator; the denominator becomes an ordinary
  // polynomial with positive lowest coefficient.
  int shift = den_.min_exp();
  if (shift != 0) {
    den_ = den_.shifted(-shift);
    num_ = num_.shifted(-shift);
  }
  if (den_.coeffs().front() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QRat QRat::operator-() const {
  QRat r(*this);
  r.num_ = -r.num_;
  return r;
}

QRat QRat::operator+(const QRat& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return QRat(num_ + o.num_, den_);
  return QRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator-(const QRat& o) const { return *this + (-o); }

QRat QRat::operator*(const QRat& o) const {
  if (is_zero() || o.is_zero()) return QRat();
  // Cross-reduce before multiplying to keep intermediate degrees small.
  LaurentPoly g1 = LaurentPoly::gcd(num_, o.den_);
  LaurentPoly g2 = LaurentPoly::gcd(o.num_, den_);
  LaurentPoly n1 = g1.is_one() ? num_ : num_.exact_div(g1);
  LaurentPoly d2 = g1.is_one() ? o.den_ : o.den_.exact_div(g1);
  LaurentPoly n2 = g2.is_one() ? o.num_ : o.num_.exact_div(g2);
  LaurentPoly d1 = g2.is_one() ? den_ : den_.exact_div(g2);
  return QRat(n1 * n2, d1 * d2);
}

QRat QRat::operator/(const QRat& o) const { return *this * o.inverse(); }

QRat QRat::inverse() const {
  if (is_zero()) throw std::domain_error("QRat: division by zero");
  return QRat(den_, num_);
}

bool QRat::operator==(const QRat& o) const { return num_ * o.den_ == o.num_ * den_; }

Rational QRat::eval(const Rational& q) const {
  Rational d = den_.eval(q);
  if (d == 0) throw std::domain_error("QRat: denominator vanishes at specialization");
  Rational r = num_.eval(q) / d;
  r.canonicalize();
  return r;
}

std::string QRat::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::string QRat::to_json() const {
  json j;
  j["num"] = json::parse(num_.to_json());
  j["den"] = json::parse(den_.to_json());
  return j.dump();
}

QRat QRat::from_json(const std::string& text) {
  json j = json::parse(text);
  return QRat(LaurentPoly::from_json(j.at("num").dump()),
              LaurentPoly::from_json(j.at("den").dump()));
}

QRat qnum(int m) {
  if (m == 0) return QRat();
  // (q^m - q^-m) / (q - q^-1), divisibility checked by exact_div.
  LaurentPoly numer = LaurentPoly::q_power(m) - LaurentPoly::q_power(-m);
  LaurentPoly denom = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
  return QRat(numer.exact_div(denom));
}

QRat qfact(int n) {
  if (n < 0) throw std::domain_error("qfact: negative argument");
  QRat r(1);
  for (int k = 2; k <= n; ++k) r *= qnum(k);
  return r;
}

}  // namespace slekit
