#include <doctest.h>

#include "oracle.hpp"
#include "sjord/jordanian.hpp"

using namespace sjord;
using oracle::E;
using oracle::h;

namespace {

const Check& expect_check(const CheckReport& r, const std::string& id) {
  const Check* c = r.find(id);
  REQUIRE_MESSAGE(c != nullptr, id);
  return *c;
}

}  // namespace

TEST_CASE("N = 2 deformed generators in fund") {
  const DeformedTable dt = deformed_rep(2, "fund");
  const SuperSpace v = oracle::fund(2);
  const HMatrix T = oracle::I(v) + h() * E(v, 1, 2);
  const HMatrix Tinv = oracle::I(v) - h() * E(v, 1, 2);
  CHECK(dt.table.at(Label::T()) == T);
  CHECK(dt.table.at(Label::TInv()) == Tinv);
  CHECK(dt.table.at(Label::E(2, 1, 2)) == E(v, 2, 1));
  CHECK(dt.table.at(Label::H(1, 2)) == E(v, 1, 1) - E(v, 2, 2));
  CHECK(dt.table.at(Label::E(1, 2, 2)) == E(v, 1, 2));

  // [F2, E3] = (T - T^-1)/2h, both sides E12
  const HMatrix F2 = dt.table.at(Label::E(3, 2, 2)), E3 = dt.table.at(Label::E(1, 3, 2));
  CHECK(F2 * E3 + E3 * F2 == E(v, 1, 2));
  CHECK(divide_by_h(T - Tinv, 1) == HPoly(2L) * E(v, 1, 2));

  // [H1, E2] against its printed right-hand side, both -E23
  const HMatrix H1 = dt.table.at(Label::H(1, 2)), E2 = dt.table.at(Label::E(2, 3, 2));
  CHECK(H1 * E2 - E2 * H1 == -E(v, 2, 3));
  const HMatrix T2 = T * T, Tm2 = Tinv * Tinv;
  const HPoly half = HPoly(Rational(1, 2)), quarter = HPoly(Rational(1, 4));
  const HMatrix rhs = -(half * ((T + Tinv) * E2)) - (half * h()) * ((T - Tinv) * E3 * H1) -
                      (quarter * h()) * ((T2 - Tm2) * E3);
  CHECK(rhs == -E(v, 2, 3));

  CHECK((E3 * E3).is_zero());
  CHECK((F2 * F2).is_zero());
}

TEST_CASE("N = 3 deformed generators in fund") {
  const DeformedTable dt = deformed_rep(3, "fund");
  const SuperSpace v = oracle::fund(3);
  CHECK(dt.table.at(Label::H(1, 2)) == E(v, 1, 1) - E(v, 2, 2));
  const HMatrix T = oracle::I(v) + h() * E(v, 1, 3);
  CHECK(dt.table.at(Label::T()) == T);
  const HMatrix a = dt.table.at(Label::E(4, 3, 3)), b = dt.table.at(Label::E(1, 4, 3));
  CHECK(a * b + b * a == E(v, 1, 3));
}

TEST_CASE("property: T T^-1 = 1 and (T^1/2)^2 = T in every representation") {
  for (int n = 2; n <= 5; ++n)
    for (const std::string rep : {"fund", "fund2"}) {
      const DeformedTable dt = deformed_rep(n, rep);
      const HMatrix& T = dt.table.at(Label::T());
      const HMatrix& Ti = dt.table.at(Label::TInv());
      const HMatrix& Th = dt.table.at(Label::THalf());
      const HMatrix id = dt.table.identity();
      CHECK(T * Ti == id);
      CHECK(Ti * T == id);
      CHECK(Th * Th == T);
      CHECK(basic_identities(dt).passed());
    }
}

TEST_CASE("property: every deformed generator reduces to its classical source at h = 0") {
  for (int n = 2; n <= 5; ++n)
    for (const std::string rep : {"fund", "fund2"}) {
      const DeformedTable dt = deformed_rep(n, rep);
      for (const Label& l : deformed_labels(n)) {
        const HMatrix at0 = eval_h0(dt.table.at(l));
        if (auto c = classical_counterpart(l, n))
          CHECK(at0 == dt.source.at(*c));
        else if (l.kind == GenKind::ParityF)
          CHECK(at0 == parity_operator(dt.table.space));
        else
          CHECK(at0 == dt.table.identity());
      }
      CHECK(deformed_classical_limit(dt).passed());
    }
}

TEST_CASE("special-case formulas agree with the general map") {
  const CheckReport r2 = specialization_crosscheck(2);
  CHECK(r2.passed());
  CHECK(expect_check(r2, "Eq4.1~Eq2.16:E_23@fund2").status == Status::Pass);
  CHECK(expect_check(r2, "Eq4.1~Eq2.16:T@fund").status == Status::Pass);
  const CheckReport r3 = specialization_crosscheck(3);
  CHECK(r3.passed());
  for (const auto& c : r3.checks)
    if (c.status == Status::VariantPass) CHECK(c.variant.has_value());
}

TEST_CASE("deformed relation lists hold in fund and fund2") {
  for (int n : {2, 3})
    for (const std::string rep : {"fund", "fund2"}) {
      const CheckReport r = deformed_relations_suite(deformed_rep(n, rep));
      CHECK(r.count(Status::Fail) == 0);
      for (const auto& c : r.checks)
        if (c.status == Status::VariantPass) CHECK_MESSAGE(c.variant.has_value(), c.id);
    }
  const CheckReport r2 = deformed_relations_suite(deformed_rep(2, "fund"));
  CHECK(expect_check(r2, "Prop1:[F2,E3]").status == Status::Pass);
  CHECK(expect_check(r2, "Prop1:[H1,E2]").status == Status::Pass);
  CHECK(expect_check(r2, "Eq2.14:[H1,F1]").status == Status::Pass);
  const CheckReport r3 = deformed_relations_suite(deformed_rep(3, "fund"));
  CHECK(expect_check(r3, "Prop6:[E43,E14]").status == Status::Pass);
  CHECK_THROWS_AS(deformed_relations(4), Unsupported);
}

TEST_CASE("sl(2) sector holds for every N") {
  for (int n = 2; n <= 5; ++n) CHECK(sl2_sector_suite(deformed_rep(n, "fund")).passed());
  CHECK(sl2_sector_suite(deformed_rep(5, "fund2")).passed());
}

TEST_CASE("automorphism Phi") {
  for (int n : {2, 3}) {
    const CheckReport r = automorphism_Phi_check(deformed_rep(n, "fund"));
    CHECK(r.count(Status::Fail) == 0);
  }
  const CheckReport r = automorphism_Phi_check(deformed_rep(2, "fund"));
  CHECK(expect_check(r, "Prop2:Phi(E2)").status == Status::Pass);
  CHECK(expect_check(r, "Prop2:Phi(F3)").status == Status::Pass);
}

TEST_CASE("commutator table") {
  const DeformedTable dt = deformed_rep(4, "fund");
  CHECK(graded_commutator(dt.table.at(Label::T()), dt.table.at(Label::E(1, 2, 4))).is_zero());
  const auto table = commutator_table(dt);
  CHECK(!table.empty());
  CHECK(table.dump().find("E_25") != std::string::npos);
}
