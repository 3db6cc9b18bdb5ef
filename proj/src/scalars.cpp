#include "sjord/scalars.hpp"

#include <sstream>

namespace sjord {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

// Renders sum_k c_k x^k with exponents offset by `shift`, descending order.
std::string render_terms(const std::vector<Rational>& coeffs, char var, int shift) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = coeffs.size(); idx-- > 0;) {
    const Rational& c = coeffs[idx];
    if (is_zero(c)) continue;
    const int k = static_cast<int>(idx) + shift;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (k != 1) os << '^' << k;
  }
  return first ? std::string("0") : os.str();
}

}  // namespace

std::string to_string(const HPoly& p) { return render_terms(p.coeffs(), 'h', 0); }
std::string to_string(const QPoly& p) { return render_terms(p.coeffs(), 'q', 0); }

std::string to_string(const QRat& x) {
  const QPoly& den = x.den();
  // monic monomial denominator q^k: render as a Laurent polynomial
  if (den.valuation() == den.degree()) return render_terms(x.num().coeffs(), 'q', -den.degree());
  return "(" + to_string(x.num()) + ")/(" + to_string(den) + ")";
}

std::string to_string(const QHPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const QRat& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << to_string(c) << ')';
    if (k >= 1) os << "*h";
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void QRat::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  if (den_.lead() != 1) {
    const Rational inv = Rational(1) / den_.lead();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

QRat QRat::q_pow(int k) {
  if (k >= 0) return QRat(QPoly::monomial(Rational(1), static_cast<std::size_t>(k)));
  return QRat(QPoly(Rational(1)), QPoly::monomial(Rational(1), static_cast<std::size_t>(-k)));
}

QRat QRat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return QRat(den_, num_);
}

Rational QRat::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (sjord::is_zero(d)) throw DivisionByZero();
  return num_.evaluate(x) / d;
}

Rational QRat::limit_at_one() const {
  Rational d = den_.evaluate(Rational(1));
  if (sjord::is_zero(d)) throw PoleAtOne(to_string(*this));
  return num_.evaluate(Rational(1)) / d;
}

QRat operator+(const QRat& a, const QRat& b) {
  if (a.den_ == b.den_) return QRat(a.num_ + b.num_, a.den_);
  return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator-(const QRat& a) {
  QRat r = a;
  r.num_ = -r.num_;
  return r;
}

QRat operator*(const QRat& a, const QRat& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.degree() == 0 && b.den_.degree() == 0) {
    QRat r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) { return a * b.inverse(); }

QRat q_number(int n, int base_power) {
  // [n]_b = (b^n - b^-n)/(b - b^-1), b = q^base_power
  const QRat top = QRat::q_pow(n * base_power) - QRat::q_pow(-n * base_power);
  const QRat bottom = QRat::q_pow(base_power) - QRat::q_pow(-base_power);
  return top / bottom;
}

QRat q_factorial(int n, int base_power) {
  QRat acc(1);
  for (int k = 1; k <= n; ++k) acc *= q_number(k, base_power);
  return acc;
}

HPoly limit_at_one(const QHPoly& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    try {
      out.push_back(p.coeffs()[k].limit_at_one());
    } catch (const PoleAtOne&) {
      throw PoleAtOne("coefficient of h^" + std::to_string(k) + " = " + to_string(p.coeffs()[k]));
    }
  }
  return HPoly(std::move(out));
}

HPoly eval_h0(const HPoly& p) { return HPoly(p.constant_term()); }

}  // namespace sjord
