#include "sjord/classical.hpp"

#include "sjord/superlinalg.hpp"

namespace sjord {

const HMatrix& GeneratorTable::at(const Label& l) const {
  auto it = entries.find(l);
  if (it == entries.end()) throw UnknownGenerator(l.name());
  return it->second;
}

void GeneratorTable::set(const Label& l, HMatrix m) {
  entries.insert_or_assign(l, std::move(m).with_parity(l.odd ? 1 : 0));
}

Evaluator<HMatrix> matrix_evaluator(const SuperSpace& space, std::function<HMatrix(const Label&)> leaf) {
  Evaluator<HMatrix> ev;
  ev.one = [space] { return HMatrix::identity(space); };
  ev.leaf = std::move(leaf);
  ev.div_h = [](const HMatrix& m, int k) { return divide_by_h(m, k); };
  return ev;
}

HMatrix GeneratorTable::eval(const Expr& e) const {
  return evaluate(e, matrix_evaluator(space, [this](const Label& l) { return at(l); }));
}

MatrixEval GeneratorTable::evaluator() const {
  return [this](const Expr& e) { return eval(e); };
}

namespace {

// Diagonal entries λ_p of the Cartan element h_ij (1-based p).
std::vector<int> cartan_weights(int n, int i, int j) {
  std::vector<int> w(static_cast<std::size_t>(n) + 2, 0);
  w[static_cast<std::size_t>(i)] += 1;
  w[static_cast<std::size_t>(j)] += (j == n + 1) ? 1 : -1;
  return w;
}

}  // namespace

GeneratorTable fundamental_generators(int n) {
  if (n < 2) throw InvalidN(n);
  GeneratorTable t;
  t.n = n;
  t.rep = "fund";
  t.space = SuperSpace::fundamental(n);
  auto unit = [&](int i, int j) {
    return HMatrix::unit(t.space, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  };
  for (int i = 1; i <= n; ++i) {
    t.set(Label::e(i, i + 1, n), unit(i, i + 1));
    t.set(Label::e(i + 1, i, n), unit(i + 1, i));
  }
  for (int i = 1; i <= n; ++i) {
    HMatrix simple = (i < n) ? unit(i, i) - unit(i + 1, i + 1) : unit(n, n) + unit(n + 1, n + 1);
    t.set(Label::h(i, i + 1), std::move(simple));
  }
  // composite Cartans by additivity along the chain
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n + 1; ++j) t.set(Label::h(i, j), t.at(Label::h(i, j - 1)) + t.at(Label::h(j - 1, j)));
  return t;
}

GeneratorTable composite_roots(const GeneratorTable& table) {
  GeneratorTable t = table;
  const int n = t.n;
  for (int d = 2; d <= n; ++d)
    for (int i = 1; i + d <= n + 1; ++i) {
      const int j = i + d;
      t.set(Label::e(i, j, n), graded_commutator(t.at(Label::e(i, j - 1, n)), t.at(Label::e(j - 1, j, n))));
      t.set(Label::e(j, i, n), graded_commutator(t.at(Label::e(j, j - 1, n)), t.at(Label::e(j - 1, i, n))));
    }
  return t;
}

GeneratorTable classical_table(int n) { return composite_roots(fundamental_generators(n)); }

GeneratorTable classical_tensor_rep(const GeneratorTable& table, int k) {
  if (k != 2 && k != 3) throw Unsupported("tensor power must be 2 or 3");
  GeneratorTable t;
  t.n = table.n;
  t.rep = "fund" + std::to_string(k);
  t.space = tensor_power(table.space, k);
  const HMatrix id = table.identity();
  for (const auto& [label, x] : table.entries) {
    HMatrix acc(t.space);
    for (int pos = 0; pos < k; ++pos) {
      HMatrix term = (pos == 0) ? x : id;
      for (int q = 1; q < k; ++q) term = graded_kron(term, q == pos ? x : id);
      acc += term;
    }
    t.set(label, std::move(acc));
  }
  return t;
}

namespace sl21 {
Expr h1() { return Label::h(1, 2); }
Expr h2() { return Label::h(2, 3); }
Expr h3() { return Label::h(1, 3); }
Expr e1() { return Label::e(1, 2, 2); }
Expr e2() { return Label::e(2, 3, 2); }
Expr e3() { return Label::e(1, 3, 2); }
Expr f1() { return Label::e(2, 1, 2); }
Expr f2() { return Label::e(3, 2, 2); }
Expr f3() { return Label::e(3, 1, 2); }
}  // namespace sl21

namespace {

std::vector<Relation> sl21_presentation() {
  using namespace sl21;
  std::vector<Relation> r;
  const Expr h[] = {h1(), h2()};
  const Expr e[] = {e1(), e2()};
  const Expr f[] = {f1(), f2()};
  const int a[2][2] = {{2, -1}, {-1, 0}};
  const std::string hn[] = {"h1", "h2"}, en[] = {"e1", "e2"}, fn[] = {"f1", "f2"};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.push_back({"Eq2.1:[" + hn[i] + "," + hn[j] + "]", comm(h[i], h[j]), Expr(0L)});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      r.push_back({"Eq2.1:[" + hn[i] + "," + en[j] + "]", comm(h[i], e[j]), Expr(static_cast<long>(a[i][j])) * e[j]});
      r.push_back({"Eq2.1:[" + hn[i] + "," + fn[j] + "]", comm(h[i], f[j]), Expr(static_cast<long>(-a[i][j])) * f[j]});
    }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.push_back({"Eq2.1:[" + en[i] + "," + fn[j] + "]", comm(e[i], f[j]), i == j ? h[i] : Expr(0L)});
  r.push_back({"Eq2.1:[e2,e2]", comm(e2(), e2()), Expr(0L)});
  r.push_back({"Eq2.1:[f2,f2]", comm(f2(), f2()), Expr(0L)});
  r.push_back({"Eq2.1:[e1,[e1,e2]]", comm(e1(), comm(e1(), e2())), Expr(0L)});
  r.push_back({"Eq2.1:[f1,[f1,f2]]", comm(f1(), comm(f1(), f2())), Expr(0L)});
  r.push_back({"Eq2.2:e3", e3(), e1() * e2() - e2() * e1()});
  r.push_back({"Eq2.2:f3", f3(), f2() * f1() - f1() * f2()});
  r.push_back({"Eq2.3:[e1,e3]", comm(e1(), e3()), Expr(0L)});
  r.push_back({"Eq2.3:[f3,f1]", comm(f3(), f1()), Expr(0L)});
  r.push_back({"Eq2.3:[e2,e3]", comm(e2(), e3()), Expr(0L)});
  r.push_back({"Eq2.3:[f2,f3]", comm(f2(), f3()), Expr(0L)});
  r.push_back({"Eq2.3:e3^2", pow(e3(), 2), Expr(0L)});
  r.push_back({"Eq2.3:f3^2", pow(f3(), 2), Expr(0L)});
  r.push_back({"Eq2.3:[e3,f3]", comm(e3(), f3()), h1() + h2()});
  r.push_back({"Eq2.3:[f1,e3]", comm(f1(), e3()), e2()});
  return r;
}

// Diagonal matrix Σ c_p E_pp with vanishing supertrace, in simple Cartans:
// coefficient of h_{k,k+1} is c_1 + ... + c_k.
Expr diagonal_as_cartan(int n, const std::vector<long>& c) {
  std::vector<Expr> terms;
  long run = 0;
  for (int k = 1; k <= n; ++k) {
    run += c[static_cast<std::size_t>(k)];
    if (run != 0) terms.push_back(Expr(run) * Expr(Label::h(k, k + 1)));
  }
  return Expr::sum(std::move(terms));
}

std::vector<Relation> matrix_unit_table(int n) {
  std::vector<Relation> r;
  std::vector<std::pair<int, int>> roots;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j)
      if (i != j) roots.emplace_back(i, j);
  std::vector<std::pair<int, int>> cartans;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) cartans.emplace_back(i, j);
  auto tag = [](int a, int b) { return std::to_string(a) + std::to_string(b); };

  for (const auto& [a, b] : cartans)
    for (const auto& [c, d] : cartans)
      r.push_back({"Eq3.1:[h" + tag(a, b) + ",h" + tag(c, d) + "]", comm(Label::h(a, b), Label::h(c, d)), Expr(0L)});
  for (const auto& [a, b] : cartans) {
    const auto w = cartan_weights(n, a, b);
    for (const auto& [i, j] : roots) {
      const long coef = w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(j)];
      r.push_back({"Eq3.1:[h" + tag(a, b) + ",e" + tag(i, j) + "]", comm(Label::h(a, b), Label::e(i, j, n)),
                   Expr(coef) * Expr(Label::e(i, j, n))});
    }
  }
  auto par = [n](int i, int j) { return ((i == n + 1) != (j == n + 1)) ? 1 : 0; };
  for (const auto& [i, j] : roots)
    for (const auto& [k, l] : roots) {
      // [e_ij, e_kl] = δ_jk e_il - (-1)^{|e_ij||e_kl|} δ_li e_kj
      const long sign = (par(i, j) && par(k, l)) ? -1 : 1;
      std::vector<long> diag(static_cast<std::size_t>(n) + 2, 0);
      std::vector<Expr> terms;
      if (j == k) {
        if (i == l)
          diag[static_cast<std::size_t>(i)] += 1;
        else
          terms.push_back(Label::e(i, l, n));
      }
      if (l == i) {
        if (k == j)
          diag[static_cast<std::size_t>(k)] -= sign;
        else
          terms.push_back(Expr(-sign) * Expr(Label::e(k, j, n)));
      }
      terms.push_back(diagonal_as_cartan(n, diag));
      r.push_back({"Eq3.1:[e" + tag(i, j) + ",e" + tag(k, l) + "]", comm(Label::e(i, j, n), Label::e(k, l, n)),
                   Expr::sum(std::move(terms))});
    }
  return r;
}

}  // namespace

std::vector<Relation> classical_relations(int n) {
  if (n < 2) throw InvalidN(n);
  std::vector<Relation> r;
  if (n == 2) r = sl21_presentation();
  auto table = matrix_unit_table(n);
  r.insert(r.end(), table.begin(), table.end());
  return r;
}

CheckReport classical_relations_suite(const GeneratorTable& table, bool allow_variants) {
  CheckReport rep{"classical-relations", table.n, table.rep};
  for (const auto& rel : classical_relations(table.n)) rep.add(check_relation(rel, table.evaluator(), allow_variants));
  return rep;
}

namespace {

// Index-reversal images of the Chevalley generators.
std::map<Label, Expr> phi_rule(int n) {
  std::map<Label, Expr> m;
  auto sigma = [n](int i) { return i <= n ? n + 1 - i : i; };
  for (int i = 1; i < n; ++i) {
    m[Label::e(i, i + 1, n)] = Label::e(sigma(i + 1), sigma(i), n);
    m[Label::e(i + 1, i, n)] = Label::e(sigma(i), sigma(i + 1), n);
    m[Label::h(i, i + 1)] = Label::h(sigma(i + 1), sigma(i));
  }
  m[Label::e(n, n + 1, n)] = Label::e(n + 1, 1, n);
  m[Label::e(n + 1, n, n)] = -Expr(Label::e(1, n + 1, n));
  m[Label::h(n, n + 1)] = -Expr(Label::h(1, n + 1));
  return m;
}

void complete_phi(int n, std::map<Label, Expr>& m) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n + 1; ++j) {
      Expr sum = m.at(Label::h(i, j - 1)) + m.at(Label::h(j - 1, j));
      m.emplace(Label::h(i, j), sum);
    }
  for (int d = 2; d <= n; ++d)
    for (int i = 1; i + d <= n + 1; ++i) {
      const int j = i + d;
      m.emplace(Label::e(i, j, n), comm(m.at(Label::e(i, j - 1, n)), m.at(Label::e(j - 1, j, n))));
      m.emplace(Label::e(j, i, n), comm(m.at(Label::e(j, j - 1, n)), m.at(Label::e(j - 1, i, n))));
    }
}

}  // namespace

std::map<Label, Expr> phi_images(int n, bool printed) {
  std::map<Label, Expr> m;
  if (printed && n == 2) {
    using namespace sl21;
    // (h1,h2,h3,e1,e2,e3,f1,f2,f3) -> (h1,-h3,-h2,e1,f3,-f2,f1,-e3,e2)
    m[Label::h(1, 2)] = h1();
    m[Label::h(2, 3)] = -h3();
    m[Label::h(1, 3)] = -h2();
    m[Label::e(1, 2, 2)] = e1();
    m[Label::e(2, 3, 2)] = f3();
    m[Label::e(1, 3, 2)] = -f2();
    m[Label::e(2, 1, 2)] = f1();
    m[Label::e(3, 2, 2)] = -e3();
    m[Label::e(3, 1, 2)] = e2();
  } else if (printed && n == 3) {
    // (e12,e21,h12,e23,e32,h23,e34,e43,h34) -> (e23,e32,h23,e12,e12,h12,e41,e14,-h14)
    m[Label::e(1, 2, 3)] = Label::e(2, 3, 3);
    m[Label::e(2, 1, 3)] = Label::e(3, 2, 3);
    m[Label::h(1, 2)] = Label::h(2, 3);
    m[Label::e(2, 3, 3)] = Label::e(1, 2, 3);
    m[Label::e(3, 2, 3)] = Label::e(1, 2, 3);
    m[Label::h(2, 3)] = Label::h(1, 2);
    m[Label::e(3, 4, 3)] = Label::e(4, 1, 3);
    m[Label::e(4, 3, 3)] = Label::e(1, 4, 3);
    m[Label::h(3, 4)] = -Expr(Label::h(1, 4));
  } else {
    m = phi_rule(n);
  }
  complete_phi(n, m);
  return m;
}

CheckReport classical_automorphism_check(const GeneratorTable& table, bool allow_variants) {
  const int n = table.n;
  if (n < 2) throw InvalidN(n);
  CheckReport rep{"classical-automorphism", n, table.rep};
  const bool has_printed = (n == 2 || n == 3);
  const auto printed = phi_images(n, has_printed);
  const auto rule = phi_images(n, false);
  const bool differs = has_printed && n == 3;
  auto lookup = [](const std::map<Label, Expr>& m) {
    return LabelMap([&m](const Label& l) -> std::optional<Expr> {
      auto it = m.find(l);
      if (it == m.end()) return std::nullopt;
      return it->second;
    });
  };
  const std::string note = "φ(e_32) = e_21 (printed e_12), φ(e_43) = -e_14 (printed e_14)";
  if (n == 2) {
    // printed composite images agree with brackets of Chevalley images
    auto chev = phi_rule(2);
    complete_phi(2, chev);
    for (const Label& l : {Label::e(1, 3, 2), Label::e(3, 1, 2), Label::h(1, 3)})
      rep.add(compare("phi:image " + l.name(), table.eval(printed.at(l)), table.eval(chev.at(l))));
  }
  for (const auto& rel : classical_relations(n)) {
    Relation img{"phi:" + rel.id, substitute(rel.lhs, lookup(printed)), substitute(rel.rhs, lookup(printed))};
    if (differs)
      img.alt = Relation::Alternative{substitute(rel.lhs, lookup(rule)), substitute(rel.rhs, lookup(rule)), note};
    rep.add(check_relation(img, table.evaluator(), allow_variants));
  }
  return rep;
}

CheckReport tensor_bracket_check(const GeneratorTable& source, int k) {
  const GeneratorTable rho = classical_tensor_rep(source, k);
  CheckReport rep{"tensor-bracket-preservation", source.n, rho.rep};
  const HMatrix id = source.identity();
  auto lift = [&](const HMatrix& m) {
    HMatrix acc(rho.space);
    for (int pos = 0; pos < k; ++pos) {
      HMatrix term = (pos == 0) ? m : id;
      for (int q = 1; q < k; ++q) term = graded_kron(term, q == pos ? m : id);
      acc += term;
    }
    return acc;
  };
  for (const auto& [a, xa] : source.entries)
    for (const auto& [b, xb] : source.entries) {
      const HMatrix lhs = graded_commutator(rho.at(a), rho.at(b));
      const HMatrix rhs = lift(graded_commutator(xa, xb));
      rep.add(compare("[" + a.name() + "," + b.name() + "]", lhs, rhs));
    }
  return rep;
}

}  // namespace sjord
