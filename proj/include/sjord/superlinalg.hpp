#pragma once

// Graded linear algebra: Koszul-signed Kronecker products, flips, graded
// commutators and truncated series of nilpotent / unipotent matrices.

#include <optional>
#include <vector>

#include "sjord/matrix.hpp"

namespace sjord {

/// (a ⊗ b) with entry ((i,k),(j,l)) = (-1)^{(p(k)+p(l)) p(j)} a_ij b_kl.
/// For homogeneous factors this realizes (a⊗b)(c⊗d) = (-1)^{|b||c|} ac ⊗ bd.
template <class S>
GradedMatrix<S> graded_kron(const GradedMatrix<S>& a, const GradedMatrix<S>& b) {
  const SuperSpace& v = a.space();
  const SuperSpace& w = b.space();
  std::optional<int> p;
  if (a.parity() && b.parity()) p = (*a.parity() + *b.parity()) % 2;
  GradedMatrix<S> out(tensor(v, w), p);
  const std::size_t dw = w.dim();
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) {
      const S& aij = a(i, j);
      if (is_zero(aij)) continue;
      for (std::size_t k = 0; k < dw; ++k)
        for (std::size_t l = 0; l < dw; ++l) {
          const S& bkl = b(k, l);
          if (is_zero(bkl)) continue;
          S value = aij * bkl;
          if (((w.parity(k) + w.parity(l)) * v.parity(j)) % 2 == 1) value = -value;
          out(i * dw + k, j * dw + l) = std::move(value);
        }
    }
  return out;
}

/// Ungraded Kronecker product on the tensor space (no Koszul signs).
template <class S>
GradedMatrix<S> kron(const GradedMatrix<S>& a, const GradedMatrix<S>& b) {
  std::optional<int> p;
  if (a.parity() && b.parity()) p = (*a.parity() + *b.parity()) % 2;
  GradedMatrix<S> out(tensor(a.space(), b.space()), p);
  const std::size_t dw = b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < dw; ++k)
        for (std::size_t l = 0; l < dw; ++l)
          if (!is_zero(b(k, l))) out(i * dw + k, j * dw + l) = a(i, j) * b(k, l);
    }
  return out;
}

/// Matrix of τ(x⊗y) = (-1)^{p(x)p(y)} y⊗x from V⊗W to W⊗V. The result is
/// stored on the codomain space W⊗V.
HMatrix graded_flip(const SuperSpace& v, const SuperSpace& w);
/// Plain permutation x⊗y -> y⊗x.
HMatrix plain_flip(const SuperSpace& v, const SuperSpace& w);

/// ab - (-1)^{|a||b|} ba; throws UndeclaredParity.
template <class S>
GradedMatrix<S> graded_commutator(const GradedMatrix<S>& a, const GradedMatrix<S>& b) {
  if (!a.parity() || !b.parity()) throw UndeclaredParity();
  if (*a.parity() * *b.parity() == 1) return a * b + b * a;
  return a * b - b * a;
}

enum class SeriesFn { SqrtOnePlus, Log, Exp };

/// Powers x^0, x^1, ..., x^{k-1} of a nilpotent x, stopping at the first
/// vanishing power; throws NotNilpotent when x^{dim} is nonzero.
template <class S>
std::vector<GradedMatrix<S>> nilpotent_powers(const GradedMatrix<S>& x) {
  std::vector<GradedMatrix<S>> out;
  out.push_back(GradedMatrix<S>::identity(x.space()));
  GradedMatrix<S> cur = x;
  while (!cur.is_zero()) {
    if (out.size() > x.dim()) throw NotNilpotent();
    out.push_back(cur);
    cur = cur * x;
  }
  return out;
}

/// Taylor series coefficient of the named function at order k.
Rational series_coefficient(SeriesFn fn, int k);

/// sqrt(1 + m), exp(m) for nilpotent m; log(m) for unipotent m. Exact.
template <class S>
GradedMatrix<S> unipotent_series(const GradedMatrix<S>& m, SeriesFn fn) {
  GradedMatrix<S> arg = m;
  if (fn == SeriesFn::Log) arg = m - GradedMatrix<S>::identity(m.space());
  const auto powers = nilpotent_powers(arg);
  GradedMatrix<S> out(m.space());
  for (std::size_t k = 0; k < powers.size(); ++k) {
    const Rational c = series_coefficient(fn, static_cast<int>(k));
    if (is_zero(c)) continue;
    out += S(c) * powers[k];
  }
  if (m.parity() == 0) out = out.with_parity(0);
  return out;
}

/// Inverse of a unipotent matrix via the finite Neumann series.
template <class S>
GradedMatrix<S> unipotent_inverse(const GradedMatrix<S>& u) {
  const GradedMatrix<S> n = GradedMatrix<S>::identity(u.space()) - u;
  GradedMatrix<S> out(u.space());
  for (const auto& p : nilpotent_powers(n)) out += p;
  return out.with_parity(0);
}

}  // namespace sjord
