#include "sjord/matrix.hpp"

#include "sjord/superlinalg.hpp"

namespace sjord {

SuperSpace SuperSpace::fundamental(int n) {
  if (n < 2) throw InvalidN(n);
  std::vector<std::uint8_t> p(static_cast<std::size_t>(n) + 1, 0);
  p.back() = 1;
  return SuperSpace(std::move(p));
}

SuperSpace tensor(const SuperSpace& v, const SuperSpace& w) {
  std::vector<std::uint8_t> p;
  p.reserve(v.dim() * w.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t k = 0; k < w.dim(); ++k) p.push_back(static_cast<std::uint8_t>((v.parity(i) + w.parity(k)) % 2));
  return SuperSpace(std::move(p));
}

SuperSpace tensor_power(const SuperSpace& v, int k) {
  SuperSpace out = v;
  for (int i = 1; i < k; ++i) out = tensor(out, v);
  return out;
}

HMatrix eval_h0(const HMatrix& m) {
  return m.map([](const HPoly& p) { return eval_h0(p); });
}

HMatrix divide_by_h(const HMatrix& m, int k) {
  return m.map([k](const HPoly& p) { return p.shift_down(static_cast<std::size_t>(k)); });
}

QHMatrix to_qh(const HMatrix& m) {
  return m.map([](const HPoly& p) {
    std::vector<QRat> c;
    c.reserve(p.coeffs().size());
    for (const auto& r : p.coeffs()) c.emplace_back(r);
    return QHPoly(std::move(c));
  });
}

QHMatrix to_qh(const QMatrix& m) {
  return m.map([](const QRat& x) { return QHPoly(x); });
}

HMatrix limit_at_one(const QHMatrix& m) {
  HMatrix out(m.space(), m.parity());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      try {
        out(i, j) = limit_at_one(m(i, j));
      } catch (const PoleAtOne& e) {
        throw PoleAtOne("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + e.what());
      }
    }
  return out;
}

HMatrix parity_operator(const SuperSpace& space) {
  HMatrix m(space, 0);
  for (std::size_t i = 0; i < space.dim(); ++i) m(i, i) = HPoly(space.parity(i) ? -1L : 1L);
  return m;
}

HMatrix graded_flip(const SuperSpace& v, const SuperSpace& w) {
  HMatrix m(tensor(w, v), 0);
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t k = 0; k < w.dim(); ++k) {
      const long sign = (v.parity(i) && w.parity(k)) ? -1 : 1;
      m(k * v.dim() + i, i * w.dim() + k) = HPoly(sign);
    }
  return m;
}

HMatrix plain_flip(const SuperSpace& v, const SuperSpace& w) {
  HMatrix m(tensor(w, v), 0);
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t k = 0; k < w.dim(); ++k) m(k * v.dim() + i, i * w.dim() + k) = HPoly(1L);
  return m;
}

Rational series_coefficient(SeriesFn fn, int k) {
  switch (fn) {
    case SeriesFn::Exp: {
      Rational c(1);
      for (int i = 2; i <= k; ++i) c /= i;
      return c;
    }
    case SeriesFn::Log: {
      if (k == 0) return Rational(0);
      return Rational(k % 2 == 1 ? 1 : -1, k);
    }
    case SeriesFn::SqrtOnePlus: {
      // binomial(1/2, k)
      Rational c(1);
      const Rational half(1, 2);
      for (int i = 0; i < k; ++i) c = c * (half - i) / (i + 1);
      return c;
    }
  }
  return Rational(0);
}

}  // namespace sjord
