#include <doctest.h>

#include "oracle.hpp"
#include "sjord/classical.hpp"

using namespace sjord;
using oracle::E;

namespace {

int par(const SuperSpace& v, int i) { return v.parity(static_cast<std::size_t>(i - 1)); }

}  // namespace

TEST_CASE("sl(2|1) fundamental representation") {
  const GeneratorTable t = fundamental_generators(2);
  const SuperSpace v = oracle::fund(2);
  CHECK(t.space == v);
  CHECK(t.eval(sl21::h1()) == E(v, 1, 1) - E(v, 2, 2));
  CHECK(t.eval(sl21::e1()) == E(v, 1, 2));
  CHECK(t.eval(sl21::f1()) == E(v, 2, 1));
  CHECK(t.eval(sl21::h2()) == E(v, 2, 2) + E(v, 3, 3));
  CHECK(t.eval(sl21::e2()) == E(v, 2, 3));
  CHECK(t.eval(sl21::f2()) == E(v, 3, 2));
  CHECK(*t.at(Label::e(2, 3, 2)).parity() == 1);
  CHECK(*t.at(Label::e(1, 2, 2)).parity() == 0);
}

TEST_CASE("sl(3|1) Cartan and parity") {
  const GeneratorTable t = classical_table(3);
  const SuperSpace v = oracle::fund(3);
  CHECK(t.at(Label::h(3, 4)) == E(v, 3, 3) + E(v, 4, 4));
  CHECK(t.at(Label::h(1, 3)) == t.at(Label::h(1, 2)) + t.at(Label::h(2, 3)));
  CHECK(t.at(Label::h(1, 3)) == E(v, 1, 1) - E(v, 3, 3));
  CHECK(*t.at(Label::e(2, 4, 3)).parity() == 1);
  CHECK(*t.at(Label::e(4, 3, 3)).parity() == 1);
}

TEST_CASE("composite roots") {
  const GeneratorTable t2 = classical_table(2);
  const SuperSpace v2 = oracle::fund(2);
  const HMatrix f1 = t2.eval(sl21::f1()), f2 = t2.eval(sl21::f2());
  CHECK(f2 * f1 - f1 * f2 == E(v2, 3, 1));
  CHECK(t2.eval(sl21::f3()) == E(v2, 3, 1));
  CHECK(classical_table(3).at(Label::e(1, 4, 3)) == E(oracle::fund(3), 1, 4));
}

TEST_CASE("property: composite e_ij is the matrix unit in fund") {
  for (int n = 2; n <= 5; ++n) {
    const GeneratorTable t = classical_table(n);
    const SuperSpace v = oracle::fund(n);
    for (int i = 1; i <= n + 1; ++i)
      for (int j = 1; j <= n + 1; ++j)
        if (i != j) CHECK(t.at(Label::e(i, j, n)) == E(v, static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  }
}

TEST_CASE("property: (-1)^F commutes with even and anticommutes with odd generators") {
  for (int n = 2; n <= 4; ++n) {
    const GeneratorTable t = classical_table(n);
    const HMatrix p = parity_operator(t.space);
    for (const auto& [label, m] : t.entries) {
      if (*m.parity() == 0)
        CHECK(p * m == m * p);
      else
        CHECK(p * m == -(m * p));
    }
  }
}

TEST_CASE("property: matrix-unit bracket table, N = 3") {
  const int n = 3;
  const GeneratorTable t = classical_table(n);
  const SuperSpace v = oracle::fund(n);
  auto unit = [&](int i, int j) { return E(v, static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
          if (i == j || k == l) continue;
          HMatrix expect(v);
          if (j == k) expect += unit(i, l);
          const int sign = ((par(v, i) + par(v, j)) * (par(v, k) + par(v, l))) % 2 == 1 ? -1 : 1;
          if (l == i) expect -= HPoly(static_cast<long>(sign)) * unit(k, j);
          CHECK(graded_commutator(t.at(Label::e(i, j, n)), t.at(Label::e(k, l, n))) == expect);
        }
}

TEST_CASE("tensor square representation") {
  const GeneratorTable t = classical_table(2);
  const GeneratorTable t2 = classical_tensor_rep(t, 2);
  const SuperSpace v = oracle::fund(2);
  const HMatrix e12 = E(v, 1, 2), id = oracle::I(v);
  CHECK(t2.at(Label::e(1, 2, 2)) == oracle::kron(e12, id) + oracle::kron(id, e12));
  const HMatrix sq = t2.at(Label::e(1, 2, 2)) * t2.at(Label::e(1, 2, 2));
  CHECK(sq == HPoly(2L) * oracle::kron(e12, e12));
  CHECK(!sq.is_zero());
}

TEST_CASE("relation suites pass in fund for N = 2, 3, 4") {
  for (int n = 2; n <= 4; ++n) {
    const GeneratorTable t = classical_table(n);
    const CheckReport rel = classical_relations_suite(t);
    CHECK(rel.passed());
    CHECK(rel.count(Status::Fail) == 0);
    const CheckReport phi = classical_automorphism_check(t);
    CHECK(phi.passed());
  }
  const CheckReport rel2 = classical_relations_suite(classical_table(2));
  REQUIRE(rel2.find("Eq2.1:[e1,[e1,e2]]") != nullptr);
  CHECK(rel2.find("Eq2.1:[e1,[e1,e2]]")->status == Status::Pass);
  REQUIRE(rel2.find("Eq2.3:[e3,f3]") != nullptr);
  CHECK(rel2.find("Eq2.3:[e3,f3]")->status == Status::Pass);
}

TEST_CASE("tensor bracket preservation, N = 2, 3") {
  for (int n : {2, 3}) CHECK(tensor_bracket_check(classical_table(n), 2).passed());
}

TEST_CASE("phi on sl(2|1)") {
  const auto img = phi_images(2, true);
  const GeneratorTable t = classical_table(2);
  const SuperSpace v = oracle::fund(2);
  const HMatrix pe2 = t.eval(img.at(Label::e(2, 3, 2)));
  const HMatrix pf2 = t.eval(img.at(Label::e(3, 2, 2)));
  CHECK(pe2 == E(v, 3, 1));
  CHECK(pf2 == -E(v, 1, 3));
  const HMatrix h3 = E(v, 1, 1) + E(v, 3, 3);
  CHECK(pe2 * pf2 + pf2 * pe2 == -h3);
  CHECK(t.eval(img.at(Label::h(1, 2))) == t.at(Label::h(1, 2)));
}

TEST_CASE("invalid rank") { CHECK_THROWS_AS(fundamental_generators(1), InvalidN); }
