#include <doctest.h>

#include "oracle.hpp"
#include "sjord/hopf.hpp"

using namespace sjord;
using oracle::E;
using oracle::h;

namespace {

Status status_of(const CheckReport& r, const std::string& id) {
  const Check* c = r.find(id);
  REQUIRE_MESSAGE(c != nullptr, id);
  return c->status;
}

}  // namespace

TEST_CASE("group-like T") {
  const DeformedTable dt = deformed_rep(2, "fund");
  const CoproductTable ct(dt, coproduct_rules(2));
  const SuperSpace v = oracle::fund(2);
  const HMatrix T = oracle::I(v) + h() * E(v, 1, 2);
  CHECK(ct.delta(Label::T()) == oracle::kron(T, T));
  for (const Label& l : {Label::T(), Label::TInv(), Label::THalf(), Label::TInvHalf()}) {
    const HMatrix& x = dt.table.at(l);
    CHECK(ct.delta(l) == graded_kron(x, x));
  }
}

TEST_CASE("coproduct of F2 on sl(2|1)") {
  const DeformedTable dt = deformed_rep(2, "fund2");
  const CoproductTable ct(dt, coproduct_rules(2));
  const HMatrix& F2 = dt.table.at(Label::E(3, 2, 2));
  const HMatrix expect = graded_kron(F2, dt.table.at(Label::TInvHalf())) + graded_kron(dt.table.at(Label::THalf()), F2);
  CHECK(ct.delta(Label::E(3, 2, 2)) == expect);
}

TEST_CASE("coproduct of E24 at N = 3 is primitive") {
  const DeformedTable dt = deformed_rep(3, "fund");
  const CoproductTable ct(dt, coproduct_rules(3));
  const HMatrix& x = dt.table.at(Label::E(2, 4, 3));
  const HMatrix id = dt.table.identity().with_parity(0);
  CHECK(ct.delta(Label::E(2, 4, 3)) == graded_kron(x, id) + graded_kron(id, x));
}

TEST_CASE("classical limit of the coproduct") {
  const DeformedTable dt = deformed_rep(2, "fund");
  const CoproductTable ct(dt, coproduct_rules(2));
  const SuperSpace v = oracle::fund(2);
  const HMatrix h1 = E(v, 1, 1) - E(v, 2, 2);
  CHECK(eval_h0(ct.delta(Label::H(1, 2))) == oracle::kron(h1, oracle::I(v)) + oracle::kron(oracle::I(v), h1));
  for (const auto& [label, rule] : ct.rules()) CHECK(eval_h0(ct.delta(label)) == eval_h0(ct.delta_op(label)));
}

TEST_CASE("coproduct respects [F2, E3] = (T - T^-1)/2h") {
  const DeformedTable dt = deformed_rep(2, "fund");
  const CoproductTable ct(dt, coproduct_rules(2));
  const HMatrix& dF2 = ct.delta(Label::E(3, 2, 2));
  const HMatrix& dE3 = ct.delta(Label::E(1, 3, 2));
  const HMatrix rhs = divide_by_h(ct.delta(Label::T()) - ct.delta(Label::TInv()), 1);
  CHECK(HPoly(2L) * (dF2 * dE3 + dE3 * dF2) == rhs);
}

TEST_CASE("counit values") {
  CHECK(counit_value(Label::T()) == HPoly(1L));
  CHECK(counit_value(Label::TInv()) == HPoly(1L));
  CHECK(counit_value(Label::ParityF()) == HPoly(1L));
  CHECK(counit_value(Label::H(1, 2)).is_zero());
  CHECK(counit_value(Label::E(2, 3, 2)).is_zero());
  CHECK(counit(Expr(Label::T()) * Expr(Label::H(1, 2)) + Expr(3L)) == HPoly(3L));
}

TEST_CASE("derived antipodes match the closed forms") {
  const AntipodeRules s = derive_antipodes(2, coproduct_rules(2));
  for (const std::string rep : {"fund", "fund2"}) {
    const DeformedTable dt = deformed_rep(2, rep);
    const HMatrix& T = dt.table.at(Label::T());
    const HMatrix& Ti = dt.table.at(Label::TInv());
    const HMatrix& E2 = dt.table.at(Label::E(2, 3, 2));
    const HMatrix& E3 = dt.table.at(Label::E(1, 3, 2));
    const HMatrix& H2 = dt.table.at(Label::H(2, 3));
    const HMatrix id = dt.table.identity();
    CHECK(dt.eval(s.at(Label::T())) == Ti);
    CHECK(dt.eval(s.at(Label::TInv())) == T);
    CHECK(dt.eval(s.at(Label::E(2, 3, 2))) == -E2 - (HPoly(Rational(1, 2)) * h()) * ((T + Ti) * E3));
    CHECK(dt.eval(s.at(Label::H(2, 3))) == -H2 + HPoly(Rational(1, 2)) * (Ti * Ti - id));
    for (const auto& [label, printed] : printed_antipodes()) {
      if (!s.count(label)) continue;
      CHECK_MESSAGE(dt.eval(s.at(label)) == dt.eval(printed), label.name());
    }
  }
}

TEST_CASE("Hopf axioms, N = 2") {
  const CheckReport r = hopf_axiom_suite(deformed_rep(2, "fund"));
  CHECK(r.count(Status::Fail) == 0);
  CHECK(status_of(r, "hom:Prop1:[F2,E3]") == Status::Pass);
  CHECK(status_of(r, "coassoc:Delta(E_23)") == Status::Pass);
  CHECK(status_of(r, "counit:(eps⊗id)Delta(H_12)") == Status::Pass);
  CHECK(status_of(r, "antipode:m(S⊗id)Delta(T)") == Status::Pass);
  for (const char* g : {"H_12", "H_13", "H_23", "E_13", "E_21", "E_23", "E_31", "E_32", "T", "T^-1"})
    CHECK(status_of(r, std::string("Prop3:S(") + g + ")") == Status::Pass);
  std::size_t antipode = 0;
  for (const auto& c : r.checks)
    if (c.id.rfind("antipode:", 0) == 0) ++antipode;
  CHECK(antipode == 2 * deformed_labels(2).size());
  CHECK(hopf_axiom_suite(deformed_rep(2, "fund2")).count(Status::Fail) == 0);
}

TEST_CASE("Hopf axioms, N = 3, 4, 5") {
  const CheckReport r3 = hopf_axiom_suite(deformed_rep(3, "fund"));
  CHECK(r3.count(Status::Fail) == 0);
  CHECK(status_of(r3, "coassoc:Delta(E_24)") == Status::Pass);
  for (int n : {4, 5}) {
    const CheckReport r = hopf_axiom_suite(deformed_rep(n, "fund"));
    CHECK(r.count(Status::Fail) == 0);
    CHECK(r.find("counit:(eps⊗id)Delta(E_12)") != nullptr);
  }
}

TEST_CASE("general-N coproduct agrees with the sl(2|1) coproduct at N = 2") {
  const CheckReport r = coproduct_crosscheck();
  CHECK(r.count(Status::Fail) == 0);
  CHECK(status_of(r, "Eq4.2~Prop3:Delta(T)") == Status::Pass);
}
