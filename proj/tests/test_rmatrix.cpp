#include <doctest.h>

#include "oracle.hpp"
#include "sjord/rmatrix.hpp"

using namespace sjord;
using oracle::E;
using oracle::h;
using oracle::q;
using oracle::qp;

namespace {

// The q-deformed R-matrix on fund⊗fund of sl(2|1), entered by hand.
QMatrix displayed_rq() {
  const SuperSpace vv = tensor(oracle::fund(2), oracle::fund(2));
  QMatrix r(vv);
  const QRat one(1L), d = q() - qp(-1);
  const std::vector<QRat> diag{q(), one, one, one, q(), one, one, one, -qp(-2)};
  for (std::size_t i = 0; i < 9; ++i) r(i, i) = diag[i];
  r(1, 3) = d;
  r(2, 6) = d;
  r(5, 7) = d;
  return r;
}

// The contracted matrix, entered by hand.
HMatrix displayed_rh() {
  const SuperSpace vv = tensor(oracle::fund(2), oracle::fund(2));
  const HPoly o(1L), z, hh = h(), m = -h(), h2 = h() * h();
  return oracle::table(vv, {{o, hh, z, m, h2, z, z, z, z},
                            {z, o, z, z, hh, z, z, z, z},
                            {z, z, o, z, z, z, z, z, z},
                            {z, z, z, o, m, z, z, z, z},
                            {z, z, z, z, o, z, z, z, z},
                            {z, z, z, z, z, o, z, z, z},
                            {z, z, z, z, z, z, o, z, z},
                            {z, z, z, z, z, z, z, o, z},
                            {z, z, z, z, z, z, z, z, HPoly(-1L)}});
}

Status status_of(const CheckReport& r, const std::string& id) {
  const Check* c = r.find(id);
  REQUIRE_MESSAGE(c != nullptr, id);
  return c->status;
}

}  // namespace

TEST_CASE("deformed exponential") {
  const SuperSpace v = oracle::fund(2);
  const QHMatrix x = to_qh(h() * E(v, 1, 2));
  CHECK(deformed_exponential(x) == to_qh(oracle::I(v)) + x);
  QHMatrix g = to_qh(oracle::I(v));
  g(0, 1) = QHPoly::monomial(QRat(1L) / (q() - QRat(1L)), 1);
  CHECK(contraction_transform(2) == g);
}

TEST_CASE("q-deformed R-matrix of sl(2|1)") {
  const QMatrix r = rq_fundamental(2);
  CHECK(r == displayed_rq());
  CHECK(r(0, 0) == q());
  CHECK(r(8, 8) == -qp(-2));
  CHECK(r(1, 3) == q() - qp(-1));
}

TEST_CASE("contraction reproduces the reference R_h entry by entry") {
  const HMatrix c = contract(rq_fundamental(2), contraction_transform(2));
  CHECK(c == displayed_rh());
  CHECK(printed_rh_contracted() == displayed_rh());
  CHECK(c(0, 1) == h());
  CHECK(c(0, 3) == -h());
  CHECK(c(0, 4) == h() * h());
  CHECK(c(8, 8) == HPoly(-1L));
  const QMatrix id = QMatrix::identity(tensor(oracle::fund(2), oracle::fund(2)));
  CHECK(contract(id, contraction_transform(2)) == HMatrix::identity(id.space()));
  const CheckReport rep = contraction_suite(2);
  CHECK(rep.passed());
  CHECK(rep.count(Status::Pass) >= 81);
  CHECK_THROWS_AS(contraction_suite(3), Unsupported);
}

TEST_CASE("universal R on fund⊗fund") {
  const DeformedTable dt = deformed_rep(2, "fund");
  const SuperSpace v = oracle::fund(2);
  const HMatrix e12 = E(v, 1, 2), h1 = E(v, 1, 1) - E(v, 2, 2);
  const HMatrix expect = HMatrix::identity(tensor(v, v)) +
                         h() * (oracle::kron(h1, e12) - oracle::kron(e12, h1)) +
                         (h() * h()) * oracle::kron(e12, e12);
  const HMatrix u = universal_rh_eval(dt);
  CHECK(u == expect);
  CHECK(eval_h0(u) == HMatrix::identity(tensor(v, v)));
  HMatrix dress = HMatrix::identity(tensor(v, v));
  dress(8, 8) = HPoly(-1L);
  CHECK(koszul_dressing(v) == dress);
  CHECK(dress * u == displayed_rh());
}

TEST_CASE("universal R uses only T and H_1N") {
  for (int n = 2; n <= 5; ++n) {
    const DeformedTable dt = deformed_rep(n, "fund");
    const SuperSpace& v = dt.table.space;
    const HMatrix x = dt.table.at(Label::E(1, n, n));
    const HMatrix th = dt.table.at(Label::T()) * dt.table.at(Label::H(1, n));
    const HMatrix a = unipotent_series(-h() * oracle::kron(x, th), SeriesFn::Exp);
    const HMatrix b = unipotent_series(h() * oracle::kron(th, x), SeriesFn::Exp);
    CHECK(universal_rh_eval(dt) == a * b);
    CHECK(universal_rh_eval(dt).space() == tensor(v, v));
  }
}

TEST_CASE("QYBE") {
  const SuperSpace v = oracle::fund(2);
  const SuperSpace vv = tensor(v, v);
  CHECK(qybe("I", HMatrix::identity(vv), v).ok());
  CHECK(qybe("P", plain_flip(v, v), v).ok());
  CHECK(qybe("R_h", displayed_rh(), v).ok());
  CHECK(qybe("R_q", rq_fundamental(2, -qp(-1)), v).ok());
  CHECK(!qybe("R_q printed", rq_fundamental(2), v).ok());
  HMatrix bad = HMatrix::identity(vv);
  bad(0, 1) = h();
  bad(1, 0) = h();
  CHECK(!qybe("bad", bad, v).ok());
}

TEST_CASE("property: conjugation by M⊗M preserves QYBE") {
  std::mt19937 rng(42);
  const SuperSpace v = oracle::fund(2);
  for (int trial = 0; trial < 8; ++trial) {
    const HPoly a = oracle::random_poly(rng, 1), b = oracle::random_poly(rng, 1);
    // even, determinant one, with an exact inverse
    HMatrix m = oracle::I(v), mi = oracle::I(v);
    m(0, 1) = a;
    m(1, 0) = b;
    m(1, 1) = HPoly(1L) + a * b;
    mi(0, 0) = HPoly(1L) + a * b;
    mi(0, 1) = -a;
    mi(1, 0) = -b;
    REQUIRE(m * mi == oracle::I(v));
    for (const HMatrix& r : {displayed_rh(), plain_flip(v, v)}) {
      const HMatrix conj = oracle::kron(mi, mi) * r * oracle::kron(m, m);
      CHECK(qybe("conjugated", conj, v).ok());
    }
  }
}

TEST_CASE("intertwining") {
  const DeformedTable dt = deformed_rep(2, "fund");
  const HMatrix r = displayed_rh();
  const HMatrix& T = dt.table.at(Label::T());
  CHECK(r * oracle::kron(T, T) == oracle::kron(T, T) * r);
  const CheckReport rep = intertwiner_check(dt);
  CHECK(rep.passed());
  CHECK(status_of(rep, "intertwiner[universal]:R*D=Dop*R") == Status::Pass);
  CHECK(status_of(rep, "intertwiner[contracted,dressed]:R*D=Dop*R") == Status::Pass);
}

TEST_CASE("L-operators and RLL") {
  const LOperator l2 = l_operator(2);
  REQUIRE(l2.dim() == 3);
  CHECK(l2.entries[0][0].is_leaf(Label::T()));
  CHECK(l2.entries[1][1].is_leaf(Label::TInv()));
  CHECK(l2.entries[2][2].is_leaf(Label::ParityF()));
  CHECK(l2.entries[1][0].is_scalar_zero());

  const DeformedTable dt = deformed_rep(2, "fund");
  const SuperSpace v = oracle::fund(2);
  const HMatrix l = l_matrix(l2, dt.table);
  CHECK(l.space() == tensor(v, v));
  CHECK(eval_h0(l)(2 * 3 + 2, 2 * 3 + 2) == HPoly(-1L));

  // R12 L1 L2 = L2 L1 R12 on aux⊗aux⊗rep, plain embeddings
  const HMatrix p23 = oracle::kron(oracle::I(v), plain_flip(v, v));
  const HMatrix L1 = p23 * oracle::kron(l, oracle::I(v)) * p23;
  const HMatrix L2 = oracle::kron(oracle::I(v), l);
  const HMatrix R12 = oracle::kron(displayed_rh(), oracle::I(v));
  CHECK(R12 * L1 * L2 == L2 * L1 * R12);

  const CheckReport r2 = frt_check(displayed_rh(), l2, dt, "");
  CHECK(r2.count(Status::Fail) == 0);
  CHECK(status_of(r2, "RLL") == Status::Pass);
  CHECK(status_of(r2, "Delta(L)=L⊗̇L:L(1,1)") == Status::Pass);

  CHECK_THROWS_AS(l_operator(4), Unsupported);
}

TEST_CASE("R-matrix suites") {
  const CheckReport r2 = rmatrix_suite(2);
  CHECK(r2.count(Status::Fail) == 0);
  CHECK(status_of(r2, "QYBE:R_h(contracted)") == Status::Pass);
  CHECK(status_of(r2, "QYBE:R_q") == Status::VariantPass);
  CHECK(status_of(r2, "RLL") == Status::Pass);
  CHECK(status_of(r2, "dressing*universal=contracted") == Status::Pass);
  const CheckReport r3 = rmatrix_suite(3);
  CHECK(r3.count(Status::Fail) == 0);
  CHECK(status_of(r3, "RLL:L(n=3)") == Status::VariantPass);
  for (int n : {4, 5}) CHECK(rmatrix_suite(n).passed());
  const CheckReport strict = rmatrix_suite(2, false);
  CHECK(status_of(strict, "QYBE:R_q") == Status::Fail);
}

TEST_CASE("h = 0 limits of R") {
  for (int n = 2; n <= 5; ++n) CHECK(rmatrix_classical_limit(deformed_rep(n, "fund")).passed());
}
