#include <doctest.h>

#include "oracle.hpp"
#include "sjord/classical.hpp"
#include "sjord/kernels.hpp"
#include "sjord/superlinalg.hpp"

using namespace sjord;
using oracle::E;
using oracle::h;

namespace {

// Matrix units of sl(2|1) fund, tagged with their degree.
HMatrix unit(std::size_t i, std::size_t j) {
  const SuperSpace v = oracle::fund(2);
  return E(v, i, j).with_parity((v.parity(i - 1) + v.parity(j - 1)) % 2);
}

}  // namespace

TEST_CASE("graded Kronecker product on sl(2|1) fund") {
  const SuperSpace v = oracle::fund(2);
  const HMatrix e2 = unit(2, 3), f2 = unit(3, 2), id = oracle::I(v).with_parity(0);
  // (1⊗f2)(e2⊗1) = -(e2⊗f2)
  CHECK(graded_kron(id, f2) * graded_kron(e2, id) == -graded_kron(e2, f2));
  CHECK(graded_kron(id, id) == HMatrix::identity(tensor(v, v)));
  const HMatrix k = graded_kron(unit(1, 2), unit(2, 3));
  CHECK(k(0 * 3 + 1, 1 * 3 + 2) == HPoly(1L));
  // odd right factor passing an odd column index picks up a sign
  const HMatrix odd = graded_kron(unit(3, 3), unit(2, 3));
  CHECK(odd(2 * 3 + 1, 2 * 3 + 2) == HPoly(-1L));
}

TEST_CASE("graded flip") {
  const SuperSpace v = oracle::fund(2);
  const HMatrix tau = graded_flip(v, v);
  CHECK(tau * tau == HMatrix::identity(tensor(v, v)));
  CHECK(tau(8, 8) == HPoly(-1L));
  CHECK(tau(1, 3) == HPoly(1L));
  const SuperSpace even = SuperSpace::even(3);
  const HMatrix p = graded_flip(even, even);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t a = 0; a < 9; ++a) CHECK(p(i * 3 + k, a) == HPoly(a == k * 3 + i ? 1L : 0L));
  CHECK(plain_flip(v, v) * plain_flip(v, v) == HMatrix::identity(tensor(v, v)));
}

TEST_CASE("graded commutator") {
  const SuperSpace v = oracle::fund(2);
  const HMatrix h2 = E(v, 2, 2) + E(v, 3, 3);
  CHECK(graded_commutator(unit(2, 3), unit(3, 2)) == h2);
  const HMatrix h1 = (E(v, 1, 1) - E(v, 2, 2)).with_parity(0);
  CHECK(graded_commutator(h1, unit(1, 2)) == HPoly(2L) * unit(1, 2));
  CHECK(graded_commutator(unit(2, 3), oracle::I(v).with_parity(0)).is_zero());
  CHECK_THROWS_AS(graded_commutator(HMatrix(v), unit(1, 2)), UndeclaredParity);
}

TEST_CASE("unipotent series") {
  const SuperSpace v = oracle::fund(2);
  const HMatrix e1 = unit(1, 2);
  const HMatrix hx = h() * e1;
  // sqrt(1 + h^2 e1^2) = 1, so T = 1 + h e1
  CHECK(unipotent_series((h() * h()) * (e1 * e1), SeriesFn::SqrtOnePlus) == oracle::I(v));
  CHECK(unipotent_series(oracle::I(v) + hx, SeriesFn::Log) == hx);
  CHECK(unipotent_series(HMatrix(v), SeriesFn::Exp) == oracle::I(v));
  CHECK(unipotent_inverse(oracle::I(v) + hx) == oracle::I(v) - hx);
  CHECK_THROWS_AS(nilpotent_powers(oracle::I(v)), NotNilpotent);
}

TEST_CASE("property: graded Kronecker sign rule on generator matrices") {
  const GeneratorTable t = classical_table(2);
  std::vector<HMatrix> gens;
  for (const auto& [label, m] : t.entries) gens.push_back(m);
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : gens)
        for (const auto& d : {gens[0], gens[3], gens.back()}) {
          const int sign = (*b.parity() * *c.parity()) % 2 == 1 ? -1 : 1;
          CHECK(graded_kron(a, b) * graded_kron(c, d) == HPoly(static_cast<long>(sign)) * graded_kron(a * c, b * d));
        }
}

TEST_CASE("property: graded Kronecker product is associative") {
  const GeneratorTable t = classical_table(2);
  std::vector<HMatrix> gens;
  for (const auto& [label, m] : t.entries) gens.push_back(m);
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : {gens[1], gens[4], gens.back()})
        CHECK(graded_kron(graded_kron(a, b), c) == graded_kron(a, graded_kron(b, c)));
}

TEST_CASE("property: graded Jacobi identity on classical generators") {
  for (int n : {2, 3}) {
    const GeneratorTable t = classical_table(n);
    std::vector<HMatrix> g;
    for (const auto& [label, m] : t.entries) g.push_back(m);
    for (const auto& x : g)
      for (const auto& y : g)
        for (const auto& z : g) {
          const int px = *x.parity(), py = *y.parity(), pz = *z.parity();
          auto sgn = [](int e) { return HPoly(e % 2 == 0 ? 1L : -1L); };
          const HMatrix lhs = sgn(px * pz) * graded_commutator(x, graded_commutator(y, z)) +
                              sgn(py * px) * graded_commutator(y, graded_commutator(z, x)) +
                              sgn(pz * py) * graded_commutator(z, graded_commutator(x, y));
          CHECK(lhs.is_zero());
        }
  }
}

TEST_CASE("property: series inverses") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const SuperSpace v = SuperSpace::even(4);
    HMatrix n(v);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) n(i, j) = oracle::random_poly(rng, 2);
    const HMatrix u = oracle::I(v) + n;
    CHECK(unipotent_series(unipotent_series(u, SeriesFn::Log), SeriesFn::Exp) == u);
    CHECK(unipotent_series(unipotent_series(n, SeriesFn::Exp), SeriesFn::Log) == n);
    const HMatrix s = unipotent_series(n, SeriesFn::SqrtOnePlus);
    CHECK(s * s == u);
    CHECK(unipotent_inverse(u) * u == oracle::I(v));
  }
}

TEST_CASE("property: parallel matmul equals the serial reference") {
  std::mt19937 rng(99);
  for (std::size_t n : {5, 24, 40}) {
    std::vector<HPoly> a(n * n), b(n * n), c1(n * n), c2(n * n);
    std::bernoulli_distribution sparse(0.4);
    for (auto& x : a) x = sparse(rng) ? oracle::random_poly(rng, 2) : HPoly();
    for (auto& x : b) x = sparse(rng) ? oracle::random_poly(rng, 2) : HPoly();
    kernels::matmul_serial<HPoly>(a, b, c1, n);
    kernels::matmul_parallel<HPoly>(a, b, c2, n);
    CHECK(c1 == c2);
  }
}

TEST_CASE("tensor product spaces") {
  const SuperSpace v = oracle::fund(2);
  const SuperSpace vv = tensor(v, v);
  CHECK(vv.dim() == 9);
  CHECK(vv.parity(8) == 0);
  CHECK(vv.parity(2) == 1);
  CHECK(tensor_power(v, 3).dim() == 27);
  CHECK(parity_operator(v) == oracle::I(v) - HPoly(2L) * E(v, 3, 3));
}
