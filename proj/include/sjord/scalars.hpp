#pragma once

// Exact coefficient rings: Q, Q[h], Q(q) and Q(q)[h].

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sjord/errors.hpp"

namespace sjord {

using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
std::string to_string(const Rational& r);

class QRat;
inline bool is_zero(const QRat& x);

/// Dense univariate polynomial with coefficients in C; `Var` names the
/// indeterminate ('h' or 'q') so that Q[h] and Q[q] never mix silently.
template <class C, char Var>
class Poly {
 public:
  using coeff_type = C;
  static constexpr char variable = Var;

  Poly() = default;
  Poly(const C& c) {  // NOLINT(google-explicit-constructor): constants embed
    if (!sjord::is_zero(c)) coeffs_.push_back(c);
  }
  Poly(long c) : Poly(C(Rational(c))) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(const C& c, std::size_t k) {
    if (sjord::is_zero(c)) return {};
    std::vector<C> v(k + 1, C{});
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly var() { return monomial(C(Rational(1)), 1); }

  const std::vector<C>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  C coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : C{}; }
  const C& lead() const { return coeffs_.back(); }
  C constant_term() const { return coeff(0); }
  /// Lowest k with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!sjord::is_zero(coeffs_[k])) return static_cast<int>(k);
    return -1;
  }

  C evaluate(const C& x) const {
    C acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Exact division by Var^k; throws DivisibilityFailure on a nonzero low coefficient.
  Poly shift_down(std::size_t k) const {
    for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i)
      if (!sjord::is_zero(coeffs_[i])) throw DivisibilityFailure(std::string(1, Var) + "^" + std::to_string(k));
    if (coeffs_.size() <= k) return {};
    return Poly(std::vector<C>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, C{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sjord::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(const C& c, const Poly& p) {
    if (sjord::is_zero(c)) return {};
    Poly r = p;
    for (auto& x : r.coeffs_) x = c * x;
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && sjord::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

template <class C, char V>
bool is_zero(const Poly<C, V>& p) {
  return p.is_zero();
}

using HPoly = Poly<Rational, 'h'>;
using QPoly = Poly<Rational, 'q'>;

/// Quotient and remainder over Q; throws DivisionByZero for b = 0.
template <char V>
std::pair<Poly<Rational, V>, Poly<Rational, V>> divmod(const Poly<Rational, V>& a, const Poly<Rational, V>& b) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rational> rem = a.coeffs();
  if (a.degree() < b.degree()) return {{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational lead_inv = Rational(1) / b.lead();
  const auto bdeg = static_cast<std::size_t>(b.degree());
  for (std::size_t k = rem.size(); k-- > bdeg;) {
    if (is_zero(rem[k])) continue;
    Rational f = rem[k] * lead_inv;
    quot[k - bdeg] = f;
    for (std::size_t j = 0; j <= bdeg; ++j) rem[k - bdeg + j] -= f * b.coeffs()[j];
  }
  return {Poly<Rational, V>(std::move(quot)), Poly<Rational, V>(std::move(rem))};
}

/// Monic gcd over Q (zero only when both inputs are zero).
template <char V>
Poly<Rational, V> gcd(Poly<Rational, V> a, Poly<Rational, V> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rational(1) / a.lead()) * a;
}

/// Element of Q(q): reduced ratio with a monic denominator.
class QRat {
 public:
  QRat() : den_(Rational(1)) {}
  QRat(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  QRat(long c) : QRat(Rational(c)) {}                      // NOLINT(google-explicit-constructor)
  QRat(const QPoly& p) : num_(p), den_(Rational(1)) {}     // NOLINT(google-explicit-constructor)
  QRat(QPoly num, QPoly den);

  static QRat q() { return QRat(QPoly::var()); }
  /// q^k for any integer k.
  static QRat q_pow(int k);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QRat inverse() const;
  Rational evaluate(const Rational& x) const;
  /// Value at q = 1 of the reduced form; throws PoleAtOne.
  Rational limit_at_one() const;

  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a);
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  friend bool operator==(const QRat& a, const QRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void normalize();

  QPoly num_;
  QPoly den_;
};

inline bool is_zero(const QRat& x) { return x.is_zero(); }

/// Polynomials in h with Q(q) coefficients (entries during contraction).
using QHPoly = Poly<QRat, 'h'>;

/// q-number [n]_base with base = q^base_power.
QRat q_number(int n, int base_power = 1);
QRat q_factorial(int n, int base_power = 1);

/// Coefficientwise q -> 1; throws PoleAtOne naming the offending power of h.
HPoly limit_at_one(const QHPoly& p);

HPoly eval_h0(const HPoly& p);

std::string to_string(const HPoly& p);
std::string to_string(const QPoly& p);
std::string to_string(const QRat& x);
std::string to_string(const QHPoly& p);

}  // namespace sjord
