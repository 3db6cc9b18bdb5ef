#include "sjord/rmatrix.hpp"

#include "sjord/superlinalg.hpp"

namespace sjord {

namespace {

QRat one_over_q_minus_1(int base_power) {
  std::vector<Rational> c(static_cast<std::size_t>(base_power) + 1, Rational(0));
  c.front() = -1;
  c.back() = 1;
  return QRat(QPoly(Rational(1)), QPoly(std::move(c)));
}

template <class S>
GradedMatrix<S> constant_matrix(const HMatrix& m) {
  return m.map([](const HPoly& p) { return S(p.constant_term()); }).with_parity(m.parity());
}

}  // namespace

QHMatrix deformed_exponential(const QHMatrix& x, int base_power) {
  const auto powers = nilpotent_powers(x);
  QHMatrix out(x.space());
  for (std::size_t k = 0; k < powers.size(); ++k)
    out += QHPoly(q_factorial(static_cast<int>(k), base_power).inverse()) * powers[k];
  return out.with_parity(0);
}

QHMatrix contraction_transform(int n) {
  if (n < 2) throw InvalidN(n);
  const SuperSpace v = SuperSpace::fundamental(n);
  const QHMatrix e = to_qh(HMatrix::unit(v, 0, static_cast<std::size_t>(n - 1)));
  return deformed_exponential(QHPoly::monomial(one_over_q_minus_1(1), 1) * e);
}

QMatrix rq_fundamental(int n, std::optional<QRat> corner) {
  if (n != 2) throw Unsupported("R_q is displayed for n = 2 only");
  const SuperSpace v = SuperSpace::fundamental(2);
  QMatrix r(tensor(v, v), 0);
  const QRat q = QRat::q();
  const QRat qq = q - QRat::q_pow(-1);
  for (std::size_t i = 0; i < 9; ++i) r(i, i) = QRat(1L);
  r(0, 0) = q;
  r(4, 4) = q;
  r(8, 8) = corner ? *corner : -QRat::q_pow(-2);
  r(1, 3) = qq;
  r(2, 6) = qq;
  r(5, 7) = qq;
  return r;
}

QMatrix rq_standard(int n, const QRat& odd_diagonal) {
  if (n < 2) throw InvalidN(n);
  const SuperSpace v = SuperSpace::fundamental(n);
  const std::size_t d = v.dim();
  QMatrix r(tensor(v, v), 0);
  const QRat q = QRat::q();
  const QRat qq = q - QRat::q_pow(-1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      r(i * d + j, i * d + j) = i != j ? QRat(1L) : (v.parity(i) == 1 ? odd_diagonal : q);
      if (i < j) r(i * d + j, j * d + i) = qq;
    }
  return r;
}

HMatrix contract(const QMatrix& rq, const QHMatrix& g) {
  const QHMatrix gi = unipotent_inverse(g);
  const QHMatrix conj = kron(gi, gi) * to_qh(rq) * kron(g, g);
  return limit_at_one(conj).with_parity(0);
}

HMatrix printed_rh_contracted() {
  const SuperSpace v = SuperSpace::fundamental(2);
  HMatrix r = HMatrix::identity(tensor(v, v));
  const HPoly h = HPoly::var();
  r(0, 1) = h;
  r(0, 3) = -h;
  r(0, 4) = h * h;
  r(1, 4) = h;
  r(3, 4) = -h;
  r(8, 8) = HPoly(-1L);
  return r;
}

HMatrix universal_rh_eval(const DeformedTable& dt) {
  const HMatrix& x = dt.table.at(Label::E(1, dt.n, dt.n));
  const HMatrix th = dt.table.at(Label::T()) * dt.table.at(Label::H(1, dt.n));
  const HPoly h = HPoly::var();
  const HMatrix a = unipotent_series((-h) * graded_kron(x, th), SeriesFn::Exp);
  const HMatrix b = unipotent_series(h * graded_kron(th, x), SeriesFn::Exp);
  return (a * b).with_parity(0);
}

HMatrix koszul_dressing(const SuperSpace& v) {
  const std::size_t d = v.dim();
  HMatrix m = HMatrix::identity(tensor(v, v));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (v.parity(i) * v.parity(k) == 1) m(i * d + k, i * d + k) = HPoly(-1L);
  return m;
}

template <class S>
Check qybe(const std::string& id, const GradedMatrix<S>& r, const SuperSpace& v, bool graded) {
  using M = GradedMatrix<S>;
  const M id1 = M::identity(v);
  M r12, r23, p23;
  if (graded) {
    r12 = graded_kron(r, id1);
    r23 = graded_kron(id1, r);
    p23 = graded_kron(id1, constant_matrix<S>(graded_flip(v, v)));
  } else {
    r12 = kron(r, id1);
    r23 = kron(id1, r);
    p23 = kron(id1, constant_matrix<S>(plain_flip(v, v)));
  }
  const M r13 = p23 * r12 * p23;
  return compare(id, r12 * r13 * r23, r23 * r13 * r12);
}

template Check qybe<HPoly>(const std::string&, const HMatrix&, const SuperSpace&, bool);
template Check qybe<QRat>(const std::string&, const QMatrix&, const SuperSpace&, bool);

namespace {

template <class S>
void add_qybe(CheckReport& rep, const std::string& name, const GradedMatrix<S>& r, const SuperSpace& v) {
  rep.add(qybe("QYBE:" + name, r, v, false));
  const bool graded = qybe("", r, v, true).ok();
  rep.notes.push_back("graded-embedding QYBE for " + name + ": " + (graded ? "holds" : "fails"));
}

// Keeps a passing check; otherwise tries lhs = rhs as the annotated variant.
Check with_variant(Check c, const HMatrix& lhs, const HMatrix& rhs, const std::string& note, bool allow) {
  if (c.ok() || !allow) return c;
  if (lhs == rhs) {
    c.status = Status::VariantPass;
    c.variant = note;
    c.witness.reset();
  } else {
    c.variant = "corrected form also fails: " + note;
  }
  return c;
}

}  // namespace

CheckReport qybe_check(const HMatrix& r, const SuperSpace& v, const std::string& name) {
  CheckReport rep{"qybe", 0, "fund"};
  add_qybe(rep, name, r, v);
  return rep;
}

CheckReport intertwiner_check(const DeformedTable& dt) {
  CheckReport rep{"intertwiner", dt.n, dt.rep};
  const CoproductTable ct(dt, coproduct_rules(dt.n));
  const SuperSpace& v = dt.table.space;
  const HMatrix dress = koszul_dressing(v);
  const HMatrix univ = universal_rh_eval(dt);
  std::vector<std::pair<std::string, HMatrix>> rs{{"universal", univ}, {"universal,dressed", dress * univ}};
  if (dt.n == 2 && dt.rep == "fund") {
    const HMatrix c = contract(rq_fundamental(2), contraction_transform(2));
    rs.insert(rs.begin(), {{"contracted", c}, {"contracted,dressed", dress * c}});
  }
  for (const auto& [name, r] : rs)
    for (const bool op_first : {false, true}) {
      const std::string dir = op_first ? "R*Dop=D*R" : "R*D=Dop*R";
      std::size_t held = 0;
      std::optional<Check> first_failure;
      for (const auto& [label, rule] : ct.rules()) {
        const HMatrix d = ct.delta(label);
        const HMatrix dop = ct.delta_op(label);
        Check c = op_first ? compare(label.name(), r * dop, d * r) : compare(label.name(), r * d, dop * r);
        if (c.ok())
          ++held;
        else if (!first_failure)
          first_failure = c;
      }
      const std::string id = "intertwiner[" + name + "]:" + dir;
      if (!first_failure) {
        rep.add(Check{id});
      } else {
        rep.notes.push_back(id + " holds for " + std::to_string(held) + " of " + std::to_string(ct.rules().size()) +
                            " generators; first failure at " + first_failure->id);
      }
    }
  return rep;
}

LOperator l_operator(int n, bool inverse_corner) {
  const SymbolTable s = deformed_symbols(n);
  auto x = [&](const char* t) { return parse_expr(t, s); };
  LOperator l;
  l.aux = SuperSpace::fundamental(n);
  if (n == 2) {
    l.entries = {{x("T"), x("-h*H1 + h/2*(T - T^-1)"), Expr(0L)},
                 {Expr(0L), x("T^-1"), Expr(0L)},
                 {Expr(0L), Expr(0L), x("P")}};
    return l;
  }
  if (n == 3) {
    // (h/2)(T + T^-1) h_13 = h H_13, and e_12, e_23 are undeformed.
    l.entries = {{x("T"), x("2*h*T^(-1/2)*E23"), x("-h*H13 + h/2*(T - T^-1)"), Expr(0L)},
                 {Expr(0L), Expr(1L), x("-2*h*T^(1/2)*E12"), Expr(0L)},
                 {Expr(0L), Expr(0L), x(inverse_corner ? "T^-1" : "T"), Expr(0L)},
                 {Expr(0L), Expr(0L), Expr(0L), x("P")}};
    return l;
  }
  throw Unsupported("L-operator is displayed for n = 2, 3 only");
}

HMatrix l_matrix(const LOperator& l, const GeneratorTable& table) {
  HMatrix out(tensor(l.aux, table.space), 0);
  for (std::size_t a = 0; a < l.dim(); ++a)
    for (std::size_t b = 0; b < l.dim(); ++b) {
      if (l.entries[a][b].is_scalar_zero()) continue;
      const HMatrix m = table.eval(l.entries[a][b]);
      if (m.parity().value_or(m.infer_parity().value_or(0)) != 0) throw Error("odd L-operator entry");
      out += kron(HMatrix::unit(l.aux, a, b).with_parity(0), m);
    }
  return out;
}

CheckReport frt_check(const HMatrix& r, const LOperator& l, const DeformedTable& dt, const std::string& tag,
                      bool allow_variants) {
  CheckReport rep{"frt", dt.n, dt.rep};
  const SuperSpace& w = dt.table.space;
  const HMatrix id_aux = HMatrix::identity(l.aux);
  const HMatrix id_w = HMatrix::identity(w);
  HMatrix l1(tensor(tensor(l.aux, l.aux), w), 0), l2 = l1;
  for (std::size_t a = 0; a < l.dim(); ++a)
    for (std::size_t b = 0; b < l.dim(); ++b) {
      if (l.entries[a][b].is_scalar_zero()) continue;
      const HMatrix m = dt.eval(l.entries[a][b]);
      const HMatrix u = HMatrix::unit(l.aux, a, b).with_parity(0);
      l1 += kron(kron(u, id_aux), m);
      l2 += kron(kron(id_aux, u), m);
    }
  const HMatrix r12 = kron(r, id_w);
  rep.add(compare("RLL" + tag, r12 * l1 * l2, l2 * l1 * r12));

  const CoproductTable ct(dt, coproduct_rules(dt.n));
  const AntipodeRules s = derive_antipodes(dt.n, ct.rules());
  const LabelMap lookup = [&s](const Label& x) -> std::optional<Expr> {
    auto it = s.find(x);
    if (it == s.end()) return std::nullopt;
    return it->second;
  };
  for (std::size_t a = 0; a < l.dim(); ++a)
    for (std::size_t b = 0; b < l.dim(); ++b) {
      const std::string at = "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")" + tag;
      HMatrix dot(tensor(w, w), 0), dot_t = dot;
      HMatrix s_right(w, 0), s_left(w, 0), s_right_t(w, 0), s_left_t(w, 0);
      for (std::size_t c = 0; c < l.dim(); ++c) {
        const Expr& ac = l.entries[a][c];
        const Expr& cb = l.entries[c][b];
        if (ac.is_scalar_zero() || cb.is_scalar_zero()) continue;
        dot += graded_kron(dt.eval(ac), dt.eval(cb));
        dot_t += graded_kron(dt.eval(cb), dt.eval(ac));
        const Expr s_ac = antipode_image(ac, lookup, false);
        const Expr s_cb = antipode_image(cb, lookup, false);
        s_right += dt.eval(ac * s_cb);
        s_left += dt.eval(s_ac * cb);
        s_right_t += dt.eval(s_cb * ac);
        s_left_t += dt.eval(cb * s_ac);
      }
      const HMatrix delta_ab = l.entries[a][b].is_scalar_zero() ? HMatrix(tensor(w, w), 0) : ct.eval(l.entries[a][b]);
      const std::string transposed = "transposed matrix coproduct Σ_c L_cb ⊗ L_ac";
      const std::string reversed = "entries multiplied in reverse order, matching the transposed coproduct";
      rep.add(with_variant(compare("Delta(L)=L⊗̇L:L" + at, delta_ab, dot), delta_ab, dot_t, transposed,
                           allow_variants));
      const HPoly eps = l.entries[a][b].is_scalar_zero() ? HPoly() : counit(l.entries[a][b]);
      rep.add(boolean_check("eps(L)=1:L" + at, eps == HPoly(a == b ? 1L : 0L), "counit " + to_string(eps)));
      const HMatrix expect = a == b ? HMatrix::identity(w) : HMatrix(w, 0);
      rep.add(with_variant(compare("L*S(L)=1:" + at, s_right, expect), s_right_t, expect, reversed, allow_variants));
      rep.add(with_variant(compare("S(L)*L=1:" + at, s_left, expect), s_left_t, expect, reversed, allow_variants));
    }
  return rep;
}

CheckReport contraction_suite(int n, bool allow_variants) {
  if (n != 2) throw Unsupported("unsupported N for the contraction suite (R_q is displayed for N = 2)");
  CheckReport rep{"contraction", 2, "fund"};
  rep.notes.push_back("the first R-matrix display of the sl(2|1) section is labelled R_h but has q-entries; read as R_q");
  const QHMatrix g = contraction_transform(2);
  const SuperSpace v = SuperSpace::fundamental(2);
  const QHMatrix g_expect = QHMatrix::identity(v) + QHPoly::monomial(one_over_q_minus_1(1), 1) *
                                                        to_qh(HMatrix::unit(v, 0, 1));
  rep.add(compare("G=I+h/(q-1)*e12", g, g_expect));
  rep.add(compare("G*G^-1=1", g * unipotent_inverse(g), QHMatrix::identity(v)));
  HMatrix got;
  try {
    got = contract(rq_fundamental(2), g);
  } catch (const PoleAtOne& e) {
    rep.add(boolean_check("contract:pole-free", false, e.what()));
    return rep;
  }
  rep.add(Check{"contract:pole-free"});
  const HMatrix want = printed_rh_contracted();
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      Check c{"R_h(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"};
      if (!(got(i, j) == want(i, j))) {
        c.status = Status::Fail;
        c.witness = Witness{i + 1, j + 1, to_string(got(i, j)), to_string(want(i, j))};
      }
      rep.add(std::move(c));
    }
  if (allow_variants) {
    const HMatrix alt = contract(rq_fundamental(2, -QRat::q_pow(-1)), g);
    rep.notes.push_back(std::string("R_q with (9,9) = -q^-1 contracts to ") +
                        (alt == want ? "the same matrix" : "a different matrix"));
  }
  rep.add(compare("contract(I)=I", contract(QMatrix::identity(tensor(v, v)), g), HMatrix::identity(tensor(v, v))));
  return rep;
}

CheckReport rmatrix_classical_limit(const DeformedTable& dt) {
  CheckReport rep{"rmatrix-classical-limit", dt.n, dt.rep};
  const SuperSpace& v = dt.table.space;
  const HMatrix id = HMatrix::identity(tensor(v, v));
  rep.add(compare("h=0:universal", eval_h0(universal_rh_eval(dt)), id));
  if (dt.rep == "fund") {
    const HMatrix c = dt.n == 2 ? contract(rq_fundamental(2), contraction_transform(2))
                                : contract(rq_standard(dt.n, -QRat::q_pow(-1)), contraction_transform(dt.n));
    rep.add(compare("h=0:contracted=dressing", eval_h0(c), koszul_dressing(v)));
  }
  return rep;
}

CheckReport rmatrix_suite(int n, bool allow_variants) {
  CheckReport rep{"rmatrix", n, "fund"};
  const DeformedTable dt = deformed_rep(n, "fund");
  const SuperSpace& v = dt.table.space;
  const HMatrix dress = koszul_dressing(v);
  const HMatrix univ = universal_rh_eval(dt);

  if (n == 2) {
    Check c = qybe("QYBE:R_q", rq_fundamental(2), v);
    if (!c.ok() && allow_variants) {
      const std::string note = "(9,9) entry -q^-1 in place of -q^-2";
      if (qybe("QYBE:R_q", rq_fundamental(2, -QRat::q_pow(-1)), v).ok()) {
        c.status = Status::VariantPass;
        c.variant = note;
        c.witness.reset();
      } else {
        c.variant = "corrected form also fails: " + note;
      }
    }
    rep.add(std::move(c));
    rep.notes.push_back(std::string("graded-embedding QYBE for R_q: ") +
                        (qybe("", rq_fundamental(2), v, true).ok() ? "holds" : "fails"));

    const HMatrix contracted = contract(rq_fundamental(2), contraction_transform(2));
    add_qybe(rep, "R_h(contracted)", contracted, v);

    const HPoly h = HPoly::var();
    const HMatrix e12 = HMatrix::unit(v, 0, 1);
    const HMatrix h1 = classical_table(2).at(Label::h(1, 2));
    const HMatrix expect =
        HMatrix::identity(tensor(v, v)) + h * (kron(h1, e12) - kron(e12, h1)) + (h * h) * kron(e12, e12);
    rep.add(compare("universal=I+h(h1⊗e12-e12⊗h1)+h^2 e12⊗e12", univ, expect));
    rep.add(compare("dressing*universal=contracted", dress * univ, contracted));
    add_qybe(rep, "R_h(universal)", univ, v);

    rep.absorb(frt_check(contracted, l_operator(2), dt, "", allow_variants));
    rep.absorb(intertwiner_check(dt));
  } else {
    add_qybe(rep, "R_h(universal)", univ, v);
    add_qybe(rep, "R_h(universal,dressed)", dress * univ, v);
  }

  if (n == 3) {
    // The L-operator comes from contracting the standard sl(3|1) R_q.
    const QMatrix rq = rq_standard(3, -QRat::q_pow(-1));
    rep.add(qybe("QYBE:R_q(standard)", rq, v));
    const HMatrix r = contract(rq, contraction_transform(3));
    add_qybe(rep, "R_h(contracted)", r, v);
    rep.notes.push_back(std::string("dressing*universal ") + (dress * univ == r ? "equals" : "differs from") +
                        " the contracted R_h");

    const CheckReport printed = frt_check(r, l_operator(3, false), dt, "", allow_variants);
    const CheckReport alt = frt_check(r, l_operator(3, true), dt, "", allow_variants);
    const bool p_ok = printed.find("RLL")->ok();
    const bool a_ok = alt.find("RLL")->ok();
    Check rll{"RLL:L(n=3)"};
    if (!p_ok) {
      const std::string note = "T^-1 at (3,3), as in the n = 2 display";
      rll.witness = printed.find("RLL")->witness;
      if (a_ok && allow_variants) {
        rll.status = Status::VariantPass;
        rll.variant = note;
        rll.witness.reset();
      } else {
        rll.status = Status::Fail;
        rll.variant = "corrected form also fails: " + note;
      }
    }
    rep.add(std::move(rll));
    rep.notes.push_back(std::string("L(n=3): RLL with the printed (3,3) = T ") + (p_ok ? "holds" : "fails") +
                        ", with T^-1 " + (a_ok ? "holds" : "fails"));
    // Only the n = 2 display asserts the matrix coproduct; for n = 3 it is informational.
    for (const auto& c : (a_ok ? alt : printed).checks) {
      if (c.id.rfind("eps", 0) == 0) {
        rep.add(c);
      } else if (c.id != "RLL" && c.status != Status::Pass) {
        std::string line = "L(n=3) " + c.id + ": " + to_string(c.status);
        if (c.variant) line += " (" + *c.variant + ")";
        rep.notes.push_back(line);
      }
    }
  }
  rep.absorb(rmatrix_classical_limit(dt));
  return rep;
}

}  // namespace sjord
