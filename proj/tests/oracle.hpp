#pragma once

// Hand-built reference objects for tests. Nothing here calls the engine's
// constructions; matrices are assembled from matrix units and integer tables.

#include <initializer_list>
#include <random>
#include <vector>

#include "sjord/matrix.hpp"
#include "sjord/superlinalg.hpp"

namespace oracle {

using sjord::HMatrix;
using sjord::HPoly;
using sjord::QRat;
using sjord::Rational;
using sjord::SuperSpace;

inline HPoly h() { return HPoly::var(); }

/// c0 + c1 h + c2 h^2 + ...
inline HPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return HPoly(std::move(v));
}

inline QRat q() { return QRat::q(); }
inline QRat qp(int k) { return QRat::q_pow(k); }

/// (n+1)-dim space with parities (0,...,0,1).
inline SuperSpace fund(int n) {
  std::vector<std::uint8_t> p(static_cast<std::size_t>(n), 0);
  p.push_back(1);
  return SuperSpace(p);
}

/// Matrix unit E_ij, 1-based.
inline HMatrix E(const SuperSpace& v, std::size_t i, std::size_t j) {
  HMatrix m(v);
  m(i - 1, j - 1) = HPoly(1L);
  return m;
}

inline HMatrix I(const SuperSpace& v) { return HMatrix::identity(v); }

inline HMatrix scaled(const HPoly& c, const HMatrix& m) { return c * m; }

/// Plain Kronecker product with index (i, k) -> i * dim(w) + k.
inline HMatrix kron(const HMatrix& a, const HMatrix& b) {
  std::vector<std::uint8_t> p;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < b.dim(); ++k)
      p.push_back(static_cast<std::uint8_t>((a.space().parity(i) + b.space().parity(k)) % 2));
  HMatrix out{SuperSpace(p)};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l) out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
  return out;
}

/// Row-major table of small integer polynomials in h.
inline HMatrix table(const SuperSpace& v, const std::vector<std::vector<HPoly>>& rows) {
  HMatrix m(v);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline HPoly random_poly(std::mt19937& rng, int max_degree = 3) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-6, 6), den(1, 4);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int k = 0; k <= d; ++k) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    c.push_back(r);
  }
  return HPoly(std::move(c));
}

/// Random QPoly with small integer coefficients, never zero.
inline sjord::QPoly random_qpoly(std::mt19937& rng, int max_degree = 2) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-4, 4);
  for (;;) {
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) c.emplace_back(num(rng));
    sjord::QPoly p(std::move(c));
    if (!p.is_zero()) return p;
  }
}

inline QRat random_qrat(std::mt19937& rng) { return QRat(random_qpoly(rng), random_qpoly(rng)); }

/// Direct evaluation of num/den at q = x without going through the engine's reduction.
inline Rational value_at(const sjord::QPoly& num, const sjord::QPoly& den, const Rational& x) {
  auto ev = [&](const sjord::QPoly& p) {
    Rational acc = 0, pw = 1;
    for (const auto& c : p.coeffs()) {
      acc += c * pw;
      pw *= x;
    }
    return acc;
  };
  return ev(num) / ev(den);
}

}  // namespace oracle
