#include "sjord/jordanian.hpp"

#include "sjord/superlinalg.hpp"

namespace sjord {

namespace {

int delta(int a, int b) { return a == b ? 1 : 0; }

std::string idx(int i, int j) { return std::to_string(i) + std::to_string(j); }

}  // namespace

std::vector<Label> deformed_labels(int n) {
  if (n < 2) throw InvalidN(n);
  std::vector<Label> out{Label::T(),       Label::TInv(),     Label::THalf(),
                         Label::TInvHalf(), Label::H(1, n),    Label::E(n, 1, n),
                         Label::E(1, n, n)};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      out.push_back(Label::H(i, j));
      out.push_back(Label::E(i, j, n));
      out.push_back(Label::E(j, i, n));
    }
  for (int i = 1; i <= n; ++i) {
    out.push_back(Label::H(i, n + 1));
    out.push_back(Label::E(i, n + 1, n));
    out.push_back(Label::E(n + 1, i, n));
  }
  out.push_back(Label::ParityF());
  return out;
}

std::optional<Label> classical_counterpart(const Label& l, int n) {
  switch (l.kind) {
    case GenKind::H:
      return Label::h(l.i, l.j);
    case GenKind::E:
      return Label::e(l.i, l.j, n);
    default:
      return std::nullopt;
  }
}

std::vector<std::pair<Label, Expr>> deformation_map(int n, MapForm form) {
  if (n < 2) throw InvalidN(n);
  const Expr hv = h_var();
  const Expr h2_4 = Expr(HPoly::monomial(Rational(1, 4), 2));
  const Expr h2_2 = Expr(HPoly::monomial(Rational(1, 2), 2));
  auto e = [n](int i, int j) { return Expr(Label::e(i, j, n)); };
  auto hh = [](int i, int j) { return Expr(Label::h(i, j)); };
  const Expr root = Label::Root();
  const Expr e1n = e(1, n);
  const Expr h1n = hh(1, n);
  const Expr tail = Expr(2L) * h1n + Expr(1L);  // 2h_{1N} + 1
  const Expr sq = pow(e1n, 2) * h1n;             // e_{1N}^2 h_{1N}

  std::vector<std::pair<Label, Expr>> m;
  m.emplace_back(Label::T(), hv * e1n + root);
  m.emplace_back(Label::TInv(), -(hv * e1n) + root);
  m.emplace_back(Label::H(1, n), root * h1n);
  m.emplace_back(Label::E(n, 1, n), e(n, 1) - h2_4 * e1n * (pow(h1n, 2) - Expr(1L)));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      const long c = delta(i, 1) + delta(j, n);
      m.emplace_back(Label::H(i, j), hh(i, j) + Expr(c) * h2_2 * sq);
      m.emplace_back(Label::E(i, j, n), e(i, j));
      std::vector<Expr> sel;
      if (i == 1) sel.push_back(e(j, n));
      if (j == n) sel.push_back(-e(1, i));
      Expr tailed = Expr::sum(sel);
      if (form == MapForm::Corrected) tailed = tailed * e1n;
      m.emplace_back(Label::E(j, i, n), e(j, i) + h2_4 * tailed * tail);
    }
  for (int i = 1; i <= n; ++i) {
    const long c = delta(i, 1) - delta(i, n);
    m.emplace_back(Label::H(i, n + 1), hh(i, n + 1) + Expr(c) * h2_2 * sq);
    m.emplace_back(Label::E(i, n + 1, n),
                   e(i, n + 1) - Expr(static_cast<long>(delta(i, n))) * h2_4 * e(1, n + 1) * e1n * tail);
    const int sel = form == MapForm::Corrected ? delta(i, 1) : delta(i, n);
    m.emplace_back(Label::E(n + 1, i, n),
                   e(n + 1, i) + Expr(static_cast<long>(sel)) * h2_4 * e(n + 1, n) * e1n * tail);
  }
  return m;
}

SymbolTable classical_symbols(int n) {
  SymbolTable s;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j) {
      if (i != j) s.emplace("e" + idx(i, j), Expr(Label::e(i, j, n)));
      if (i < j) s.emplace("h" + idx(i, j), Expr(Label::h(i, j)));
    }
  if (n == 2) {
    s.emplace("h1", sl21::h1());
    s.emplace("h2", sl21::h2());
    s.emplace("h3", sl21::h3());
    s.emplace("e1", sl21::e1());
    s.emplace("e2", sl21::e2());
    s.emplace("e3", sl21::e3());
    s.emplace("f1", sl21::f1());
    s.emplace("f2", sl21::f2());
    s.emplace("f3", sl21::f3());
  }
  s.emplace("R", Expr(Label::Root()));
  return s;
}

SymbolTable deformed_symbols(int n, bool aliases) {
  SymbolTable s;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j) {
      if (i != j) s.emplace("E" + idx(i, j), Expr(Label::E(i, j, n)));
      if (i < j) s.emplace("H" + idx(i, j), Expr(Label::H(i, j)));
    }
  s.emplace("T", Expr(Label::T()));
  s.emplace("P", Expr(Label::ParityF()));
  s.emplace("Hl", Expr(Label::H(1, n)));
  s.emplace("Fl", Expr(Label::E(n, 1, n)));
  if (n == 2) {
    s.emplace("H1", Expr(Label::H(1, 2)));
    s.emplace("H2", Expr(Label::H(2, 3)));
    s.emplace("H3", Expr(Label::H(1, 3)));
    s.emplace("F1", Expr(Label::E(2, 1, 2)));
    s.emplace("E2", Expr(Label::E(2, 3, 2)));
    s.emplace("F2", Expr(Label::E(3, 2, 2)));
    s.emplace("E3", Expr(Label::E(1, 3, 2)));
    s.emplace("F3", Expr(Label::E(3, 1, 2)));
  }
  if (aliases && n == 3) {
    s.emplace("F31", Expr(Label::E(3, 1, 3)));
    s.emplace("F32", Expr(Label::E(3, 2, 3)));
    s.emplace("F41", Expr(Label::E(4, 1, 3)));
    s.emplace("F42", Expr(Label::E(4, 2, 3)));
  }
  return s;
}

std::vector<std::pair<Label, Expr>> special_case_map(int n) {
  const SymbolTable s = classical_symbols(n);
  std::vector<std::pair<Label, std::string>> src;
  if (n == 2) {
    src = {
        {Label::T(), "h*e1 + R"},
        {Label::TInv(), "-h*e1 + R"},
        {Label::H(1, 2), "R*h1"},
        {Label::E(2, 1, 2), "f1 - h^2/4*e1*(h1^2 - 1)"},
        {Label::H(2, 3), "h2 - h^2/2*e1^2*h1"},
        {Label::E(2, 3, 2), "e2 - h^2/4*e1*e3*(2*h1 + 1)"},
        {Label::E(3, 2, 2), "f2"},
        {Label::H(1, 3), "h3 + h^2/2*e1^2*h1"},
        {Label::E(1, 3, 2), "e3"},
        {Label::E(3, 1, 2), "f3 + h^2/4*e1*f2*(2*h1 + 1)"},
    };
  } else if (n == 3) {
    src = {
        {Label::T(), "h*e13 + R"},
        {Label::TInv(), "-h*e13 + R"},
        {Label::H(1, 3), "R*h13"},
        {Label::E(3, 1, 3), "e31 - h^2/4*e13*(h13^2 - 1)"},
        {Label::H(1, 2), "h12 + h^2/2*e13^2*h13"},
        {Label::E(1, 2, 3), "e12"},
        {Label::E(2, 1, 3), "e21 + h^2/4*e23*e13*(2*h13 + 1)"},
        {Label::H(2, 3), "h23 + h^2/2*e13^2*h13"},
        {Label::E(2, 3, 3), "e23"},
        {Label::E(3, 2, 3), "e32 - h^2/4*e12*e13*(2*h13 + 1)"},
        {Label::H(3, 4), "h34 - h^2/2*e13^2*h13"},
        {Label::E(3, 4, 3), "e34 - h^2/4*e13*e14*(2*h13 + 1)"},
        {Label::E(4, 3, 3), "e43"},
        {Label::H(2, 4), "h24"},
        {Label::E(2, 4, 3), "e24"},
        {Label::E(4, 2, 3), "e42"},
        {Label::H(1, 4), "h14 + h^2/2*e13^2*h13"},
        {Label::E(1, 4, 3), "e14"},
        {Label::E(4, 1, 3), "e41 + h^2/4*e13*e43*(2*h13 + 1)"},
    };
  } else {
    throw Unsupported("special-case formulas exist only for N = 2, 3");
  }
  std::vector<std::pair<Label, Expr>> out;
  for (const auto& [l, text] : src) out.emplace_back(l, parse_expr(text, s));
  return out;
}

GeneratorTable with_root(const GeneratorTable& classical) {
  GeneratorTable t = classical;
  const HMatrix& e = classical.at(Label::e(1, classical.n, classical.n));
  const HMatrix arg = HPoly::monomial(Rational(1), 2) * (e * e);
  t.set(Label::Root(), unipotent_series(arg, SeriesFn::SqrtOnePlus));
  return t;
}

DeformedTable deform(const GeneratorTable& classical, MapForm form) {
  const int n = classical.n;
  DeformedTable dt;
  dt.n = n;
  dt.rep = classical.rep;
  dt.form = form;
  dt.source = with_root(classical);
  GeneratorTable& t = dt.table;
  t.n = n;
  t.rep = classical.rep;
  t.space = classical.space;
  for (const auto& [label, expr] : deformation_map(n, form)) t.set(label, dt.source.eval(expr));
  const HMatrix log_t = unipotent_series(t.at(Label::T()), SeriesFn::Log);
  t.set(Label::THalf(), unipotent_series(HPoly(Rational(1, 2)) * log_t, SeriesFn::Exp));
  t.set(Label::TInvHalf(), unipotent_series(HPoly(Rational(-1, 2)) * log_t, SeriesFn::Exp));
  t.set(Label::E(1, n, n), divide_by_h(log_t, 1));
  t.set(Label::ParityF(), parity_operator(t.space));
  return dt;
}

DeformedTable deformed_rep(int n, const std::string& rep, MapForm form) {
  const GeneratorTable fund = classical_table(n);
  if (rep == "fund") return deform(fund, form);
  if (rep == "fund2") return deform(classical_tensor_rep(fund, 2), form);
  if (rep == "fund3") return deform(classical_tensor_rep(fund, 3), form);
  throw Unsupported("unknown representation " + rep);
}

CheckReport specialization_crosscheck(int n, bool allow_variants) {
  if (n != 2 && n != 3) throw Unsupported("special-case formulas exist only for N = 2, 3");
  CheckReport rep{"specialization-crosscheck", n, "fund,fund2"};
  const auto special = special_case_map(n);
  std::map<Label, Expr> printed, corrected;
  for (auto& [l, e] : deformation_map(n, MapForm::Printed)) printed.emplace(l, e);
  for (auto& [l, e] : deformation_map(n, MapForm::Corrected)) corrected.emplace(l, e);
  const std::string anchor = n == 2 ? "Eq2.16" : "Eq3.4-3.6";
  const GeneratorTable fund = classical_table(n);
  for (const auto& [name, table] :
       {std::pair<std::string, GeneratorTable>{"fund", with_root(fund)},
        std::pair<std::string, GeneratorTable>{"fund2", with_root(classical_tensor_rep(fund, 2))}}) {
    for (const auto& [label, expr] : special) {
      Relation rel{"Eq4.1~" + anchor + ":" + label.name() + "@" + name, printed.at(label), expr};
      std::string note;
      if (label.kind == GenKind::E && label.i > label.j && label.i <= n)
        note = "E_ji: tail (δ_i1 e_jN - δ_Nj e_1i) multiplied by e_1N";
      else if (label.kind == GenKind::E && label.i == n + 1)
        note = "E_{N+1,i}: selector δ_i1 instead of δ_iN";
      if (!note.empty()) rel.alt = Relation::Alternative{corrected.at(label), expr, note};
      rep.add(check_relation(rel, table.evaluator(), allow_variants));
    }
  }
  return rep;
}

CheckReport basic_identities(const DeformedTable& dt) {
  CheckReport rep{"deformed-basics", dt.n, dt.rep};
  const auto& t = dt.table;
  const HMatrix id = t.identity();
  const HMatrix& T = t.at(Label::T());
  const HMatrix& Ti = t.at(Label::TInv());
  const HMatrix& Th = t.at(Label::THalf());
  const HMatrix& Tih = t.at(Label::TInvHalf());
  rep.add(compare("T*T^-1=1", T * Ti, id));
  rep.add(compare("T^-1*T=1", Ti * T, id));
  rep.add(compare("(T^1/2)^2=T", Th * Th, T));
  rep.add(compare("(T^-1/2)^2=T^-1", Tih * Tih, Ti));
  rep.add(compare("T^1/2*T^-1/2=1", Th * Tih, id));
  for (const auto& [label, m] : t.entries)
    rep.add(boolean_check("parity:" + label.name(), m.parity_consistent(), "entry outside declared parity"));
  return rep;
}

namespace {

struct Entry {
  std::string id;
  std::string printed;
  std::string corrected;  // empty when no variant is recorded
  std::string note;
};

std::vector<Relation> build(int n, const std::vector<Entry>& entries) {
  const SymbolTable plain = deformed_symbols(n, false);
  const SymbolTable aliased = deformed_symbols(n, true);
  std::vector<Relation> out;
  for (const auto& en : entries) {
    Relation rel;
    try {
      rel = parse_relation(en.id, en.printed, plain);
    } catch (const UnknownGenerator& e) {
      rel.id = en.id;
      rel.defect = std::string("printed form names an undefined symbol: ") + e.what();
    }
    if (!en.corrected.empty()) {
      Relation alt = parse_relation(en.id, en.corrected, aliased);
      rel.alt = Relation::Alternative{alt.lhs, alt.rhs, en.note};
    }
    out.push_back(std::move(rel));
  }
  return out;
}

std::vector<Entry> sl2_entries() {
  return {
      {"Eq2.14:T*T^-1", "T*T^-1 = 1", "", ""},
      {"Eq2.14:T^-1*T", "T^-1*T = 1", "", ""},
      {"Eq2.14:[H1,T]", "[Hl,T] = T^2 - 1", "", ""},
      {"Eq2.14:[H1,T^-1]", "[Hl,T^-1] = T^-2 - 1", "", ""},
      {"Eq2.14:[T,F1]", "[T,Fl] = h/2*(Hl*T + T*Hl)", "", ""},
      {"Eq2.14:[T^-1,F1]", "[T^-1,Fl] = -h/2*(Hl*T^-1 + T^-1*Hl)", "", ""},
      {"Eq2.14:[H1,F1]", "[Hl,Fl] = -1/2*(T*Fl + Fl*T + T^-1*Fl + Fl*T^-1)", "", ""},
  };
}

std::vector<Entry> prop1_entries() {
  return {
      {"Prop1:[H1,H2]", "[H1,H2] = -1/4*(T-T^-1)^2*H1", "", ""},
      {"Prop1:[H1,H3]", "[H1,H3] = 1/4*(T-T^-1)^2*H1", "", ""},
      {"Prop1:[H2,H3]", "[H2,H3] = 0", "", ""},
      {"Prop1:[H1,E2]", "[H1,E2] = -1/2*(T+T^-1)*E2 - h/2*(T-T^-1)*E3*H1 - h/4*(T^2-T^-2)*E3", "", ""},
      {"Prop1:[H1,F3]", "[H1,F3] = -1/2*(T+T^-1)*F3 + h/2*(T-T^-1)*F2*H1 + h/4*(T^2-T^-2)*F2", "", ""},
      {"Prop1:[H1,F2]", "[H1,F2] = 1/2*(T+T^-1)*F2", "", ""},
      {"Prop1:[H1,E3]", "[H1,E3] = 1/2*(T+T^-1)*E3", "", ""},
      {"Prop1:[H2,T]", "[H2,T] = -1/4*(T^3-T^-1)", "", ""},
      {"Prop1:[H2,T^-1]", "[H2,T^-1] = -1/4*(T^-3-T)", "", ""},
      {"Prop1:[H3,T]", "[H3,T] = 1/4*(T^3-T^-1)", "", ""},
      {"Prop1:[H3,T^-1]", "[H3,T^-1] = 1/4*(T^-3-T)", "", ""},
      {"Prop1:[H2,F1]",
       "[H2,F1] = 1/4*(T+T^-1)^2*F1 - h/4*(T-T^-1)*H1^2 - h/4*(T^2-T^-2)*H1 - h/16*(T^2-T^-2)*(T+T^-1)", "", ""},
      {"Prop1:[H3,F1]",
       "[H3,F1] = -1/4*(T+T^-1)^2*F1 + h/4*(T-T^-1)*H1^2 + h/4*(T^2-T^-2)*H1 + h/16*(T^2-T^-2)*(T+T^-1)", "", ""},
      {"Prop1:[H2,E2]", "[H2,E2] = h/16*(T+T^-1)*(T^2-T^-2)*E3 + 1/8*(T-T^-1)^2*E2", "", ""},
      {"Prop1:[H3,F3]", "[H3,F3] = h/16*(T-T^-1)*(T^2-T^-2)*F2 - 1/8*(T-T^-1)^2*F3",
       "[H3,F3] = h/16*(T+T^-1)*(T^2-T^-2)*F2 - 1/8*(T-T^-1)^2*F3",
       "factor (T+T^-1) in the h/16 term, the Φ-image of [H2,E2]"},
      {"Prop1:[H2,F3]", "[H2,F3] = 1/8*(T^2+6+T^-2)*F3 - h/16*(T^2-T^-2)*(T+T^-1)*F2", "", ""},
      {"Prop1:[H3,E2]", "[H3,E2] = -1/8*(T^2+6+T^-2)*E2 - h/16*(T^2-T^-2)*(T+T^-1)*E3", "", ""},
      {"Prop1:[H2,F2]", "[H2,F2] = -1/8*(T-T^-1)^2*F2", "", ""},
      {"Prop1:[H3,E3]", "[H3,E3] = 1/8*(T-T^-1)^2*E3", "", ""},
      {"Prop1:[H3,F2]", "[H3,F2] = 1/8*(T^2+6+T^-2)*F2", "", ""},
      {"Prop1:[H2,E3]", "[H2,E3] = -1/8*(T^2+6+T^-2)*E3", "", ""},
      {"Prop1:[E2,F2]", "[E2,F2] = H2 - 1/16*(T-T^-1)^2 - h/4*(T-T^-1)*E3*F2", "", ""},
      {"Prop1:[E3,F3]", "[E3,F3] = H3 + 1/16*(T-T^-1)^2 + h/4*(T-T^-1)*F2*E3", "", ""},
      {"Prop1:[T,F2]", "[T,F2] = 0", "", ""},
      {"Prop1:[T^-1,F2]", "[T^-1,F2] = 0", "", ""},
      {"Prop1:[T,E3]", "[T,E3] = 0", "", ""},
      {"Prop1:[T^-1,E3]", "[T^-1,E3] = 0", "", ""},
      {"Prop1:F2^2", "F2^2 = 0", "", ""},
      {"Prop1:E3^2", "E3^2 = 0", "", ""},
      {"Prop1:[F2,F1]", "[F2,F1] = F3", "", ""},
      {"Prop1:[F1,E3]", "[F1,E3] = E2", "", ""},
      {"Prop1:E2^2", "E2^2 = h/4*(T-T^-1)*E3*E2", "", ""},
      {"Prop1:F3^2", "F3^2 = -h/4*(T-T^-1)*F2*F3", "", ""},
      {"Prop1:[E2,E3]", "[E2,E3] = 0", "", ""},
      {"Prop1:[F2,F3]", "[F2,F3] = 0", "", ""},
      {"Prop1:[T,E2]", "[T,E2] = h/2*(T^2+1)*E3", "", ""},
      {"Prop1:[T^-1,E2]", "[T^-1,E2] = -h/2*(T^-2+1)*E3", "", ""},
      {"Prop1:[T,F3]", "[T,F3] = -h/2*(T^2+1)*F2", "", ""},
      {"Prop1:[T^-1,F3]", "[T^-1,F3] = h/2*(T^-2+1)*F2", "", ""},
      {"Prop1:[F2,E3]", "[F2,E3] = 1/(2*h)*(T-T^-1)", "", ""},
      {"Prop1:[E2,F1]",
       "[E2,F1] = h/4*(T-T^-1)*E2 + h/2*(T-T^-1)*E3*F1 - h^2/4*E3*H1^2 - 3*h^2/8*(T+T^-1)*E3*H1 - h^2/2*E3"
       " - 15*h^2/64*(T-T^-1)^2*E3",
       "", ""},
      {"Prop1:[F3,F1]",
       "[F3,F1] = h/4*(T-T^-1)*F3 - h/2*(T-T^-1)*F2*F1 + h^2/4*F2*H1^2 + 3*h^2/8*(T+T^-1)*F2*H1 + h^2/2*F2"
       " + 15*h^2/64*(T-T^-1)^2*F2",
       "", ""},
      {"Prop1:[F3,E2]",
       "[F3,E2] = F1 - h/4*(T-T^-1)*F2*E2 + h/4*(T-T^-1)*E3*F3 - h/8*(T-T^-1)*H1^2 - h/8*(T^2-T^-2)*H1"
       " - h/16*H1*(T^2-T^-2) - 7*h/128*(T-T^-1)^3",
       "[F3,E2] = F1 - h/4*(T-T^-1)*F2*E2 + h/4*(T-T^-1)*E3*F3 - h/8*(T-T^-1)*H1^2 - h/8*(T^2-T^-2)*H1"
       " - h/16*H1*(T^2-T^-2) + 7*h/128*(T-T^-1)^3",
       "sign +7h/128 on (T-T^-1)^3, as in [E34,E41]; the printed sign is only visible once e_12^3 != 0"},
  };
}

std::vector<Entry> prop5_entries() {
  return {
      {"Prop5:[H13,E31]", "[H13,E31] = -1/2*((T+T^-1)*E31 + E31*(T+T^-1))", "", ""},
      {"Prop5:[H12,H23]", "[H12,H23] = 0", "", ""},
      {"Prop5:[H12,H13]", "[H12,H13] = -1/4*(T-T^-1)^2*H13", "", ""},
      {"Prop5:[H23,H13]", "[H23,H13] = -1/4*(T-T^-1)^2*H13", "", ""},
      {"Prop5:[H12,E12]", "[H12,E12] = 2*E12 + 1/8*(T-T^-1)^2*E12", "", ""},
      {"Prop5:[H12,E23]", "[H12,E23] = -E23 + 1/8*(T-T^-1)^2*E23", "", ""},
      {"Prop5:[H23,E12]", "[H23,E12] = -E12 + 1/8*(T-T^-1)^2*E12", "", ""},
      {"Prop5:[H23,E23]", "[H23,E23] = 2*E23 + 1/8*(T-T^-1)^2*E23", "", ""},
      {"Prop5:[H12,E21]", "[H12,E21] = -2*E21 - 1/8*(T-T^-1)^2*E21 + h/16*(T+T^-1)*(T^2-T^-2)*E23", "", ""},
      {"Prop5:[H23,E32]", "[H23,E32] = -2*E32 - 1/8*(T-T^-1)^2*E32 - h/16*(T+T^-1)*(T^2-T^-2)*E12", "", ""},
      {"Prop5:[H12,E32]", "[H12,E32] = E32 - 1/8*(T-T^-1)^2*E32 - h/16*(T+T^-1)*(T^2-T^-2)*E12", "", ""},
      {"Prop5:[H23,E21]", "[H23,E21] = E21 - 1/8*(T-T^-1)^2*E21 + h/16*(T+T^-1)*(T^2-T^-2)*E23", "", ""},
      {"Prop5:[H13,E12]", "[H13,E12] = 1/2*(T+T^-1)*E12", "", ""},
      {"Prop5:[H13,E23]", "[H13,E23] = 1/2*(T+T^-1)*E23", "", ""},
      {"Prop5:[H13,E21]", "[H13,E21] = -1/2*(T+T^-1)*E21 + h/2*(T-T^-1)*E23*H13 + h/4*(T^2-T^-2)*E23", "", ""},
      {"Prop5:[H13,E32]", "[H13,E32] = -1/2*(T+T^-1)*E32 - h/2*(T-T^-1)*E12*H13 - h/4*(T^2-T^-2)*E12", "", ""},
      {"Prop5:[E21,F31]",
       "[E21,F31] = h/4*(T-T^-1)*E21 - h/2*(T-T^-1)*E23*E31 + h^2/4*E23*H13^2 + 3*h^2/8*(T+T^-1)*E23*H13"
       " + h^2/2*E23 + 15*h^2/64*(T-T^-1)^2*E23",
       "[E21,E31] = h/4*(T-T^-1)*E21 - h/2*(T-T^-1)*E23*E31 + h^2/4*E23*H13^2 + 3*h^2/8*(T+T^-1)*E23*H13"
       " + h^2/2*E23 + 15*h^2/64*(T-T^-1)^2*E23",
       "F31 read as E31"},
      {"Prop5:[E32,F31]",
       "[E32,F31] = h/4*(T-T^-1)*E32 + h/2*(T-T^-1)*E12*E31 - h^2/4*E12*H13^2 - 3*h^2/8*(T+T^-1)*E12*H13"
       " - h^2/2*E12 - 15*h^2/64*(T-T^-1)^2*E12",
       "[E32,E31] = h/4*(T-T^-1)*E32 + h/2*(T-T^-1)*E12*E31 - h^2/4*E12*H13^2 - 3*h^2/8*(T+T^-1)*E12*H13"
       " - h^2/2*E12 - 15*h^2/64*(T-T^-1)^2*E12",
       "F31 read as E31"},
      {"Prop5:[H12,T]", "[H12,T] = -1/4*(T^3-T^-1)", "[H12,T] = 1/4*(T^3-T^-1)",
       "sign +1/4, as in [H3,T]"},
      {"Prop5:[H12,T^-1]", "[H12,T^-1] = -1/4*(T^-3-T)", "[H12,T^-1] = 1/4*(T^-3-T)",
       "sign +1/4, as in [H3,T^-1]"},
      {"Prop5:[H23,T]", "[H23,T] = -1/4*(T^3-T^-1)", "[H23,T] = 1/4*(T^3-T^-1)",
       "sign +1/4, as in [H3,T]"},
      {"Prop5:[H23,T^-1]", "[H23,T^-1] = -1/4*(T^-3-T)", "[H23,T^-1] = 1/4*(T^-3-T)",
       "sign +1/4, as in [H3,T^-1]"},
      {"Prop5:[H12,E31]",
       "[H12,E31] = -1/4*(T+T^-1)^2*E31 + h/4*(T-T^-1)*H13^2 + h/2*(T+T^-1)*E23*H13 + h/16*(T^3+T-T^-1-T^-3)",
       "[H12,E31] = -1/4*(T+T^-1)^2*E31 + h/4*(T-T^-1)*H13^2 + h/4*(T^2-T^-2)*H13 + h/16*(T^3+T-T^-1-T^-3)",
       "h/4*(T^2-T^-2)*H13 in place of the weight-inconsistent E23 term, as in [H3,F1]"},
      {"Prop5:[H23,E31]",
       "[H23,E31] = -1/4*(T+T^-1)^2*E31 + h/4*(T-T^-1)*H13^2 - h/2*(T+T^-1)*E12*H13 + h/16*(T^3+T-T^-1-T^-3)",
       "[H23,E31] = -1/4*(T+T^-1)^2*E31 + h/4*(T-T^-1)*H13^2 + h/4*(T^2-T^-2)*H13 + h/16*(T^3+T-T^-1-T^-3)",
       "h/4*(T^2-T^-2)*H13 in place of the weight-inconsistent E12 term, as in [H3,F1]"},
      {"Prop5:[F32,E21]",
       "[F32,E21] = F31 + h/4*(T-T^-1)*(E12*E21+E23*E32) - h/8*(T-T^-1)*H13^2 - h/4*(T-T^-1)"
       " - 3*h/16*(T^2-T^-2)*H13 - 9*h/128*(T-T^-1)^3",
       "[E32,E21] = E31 + h/4*(T-T^-1)*(E12*E21+E23*E32) - h/8*(T-T^-1)*H13^2 - h/4*(T-T^-1)"
       " - 3*h/16*(T^2-T^-2)*H13 - 9*h/128*(T-T^-1)^3",
       "F32, F31 read as E32, E31"},
      {"Prop5:[E12,E21]", "[E12,E21] = H12 + 1/16*(T-T^-1)^2 - h/4*(T-T^-1)*E23*E12", "", ""},
      {"Prop5:[E23,E32]", "[E23,E32] = H23 + 1/16*(T-T^-1)^2 + h/4*(T-T^-1)*E12*E23", "", ""},
      {"Prop5:[T,E12]", "[T,E12] = 0", "", ""},
      {"Prop5:[T^-1,E12]", "[T^-1,E12] = 0", "", ""},
      {"Prop5:[T,E23]", "[T,E23] = 0", "", ""},
      {"Prop5:[T^-1,E23]", "[T^-1,E23] = 0", "", ""},
      {"Prop5:[E23,E21]", "[E23,E21] = -h/4*(T-T^-1)*E23^2", "", ""},
      {"Prop5:[E12,E32]", "[E12,E32] = h/4*(T-T^-1)*E12^2", "", ""},
      {"Prop5:[T,E21]", "[T,E21] = -h/2*(T^2+1)*E23", "", ""},
      {"Prop5:[T^-1,E21]", "[T^-1,E21] = h/2*(T^-2+1)*E23", "", ""},
      {"Prop5:[T,E32]", "[T,E32] = h/2*(T^2+1)*E12", "", ""},
      {"Prop5:[T^-1,E32]", "[T^-1,E32] = -h/2*(T^-2+1)*E12", "", ""},
      {"Prop5:[E12,E23]", "[E12,E23] = 1/(2*h)*(T-T^-1)", "", ""},
  };
}

std::vector<Entry> prop6_entries() {
  return {
      {"Prop6:[H13,H34]", "[H13,H34] = -1/4*(T-T^-1)^2*H13", "", ""},
      {"Prop6:[H13,H14]", "[H13,H14] = 1/4*(T-T^-1)^2*H13", "", ""},
      {"Prop6:[H13,E14]", "[H13,E14] = 1/2*(T+T^-1)*E14", "", ""},
      {"Prop6:[H13,E43]", "[H13,E43] = 1/2*(T+T^-1)*E43", "", ""},
      {"Prop6:[H13,E41]", "[H13,E41] = -1/2*(T+T^-1)*E41 + h/2*(T-T^-1)*E43*H13 + h/4*(T^2-T^-2)*E43", "", ""},
      {"Prop6:[H13,E34]", "[H13,E34] = -1/2*(T+T^-1)*E34 - h/2*(T-T^-1)*E14*H13 - h/2*(T^2-T^-2)*E14",
       "[H13,E34] = -1/2*(T+T^-1)*E34 - h/2*(T-T^-1)*E14*H13 - h/4*(T^2-T^-2)*E14",
       "coefficient h/4 on (T^2-T^-2)E14, as in [H1,E2]"},
      {"Prop6:[H34,E14]", "[H34,E14] = -(1 + 1/8*(T-T^-1)^2)*E14", "", ""},
      {"Prop6:[H14,E43]", "[H14,E43] = (1 + 1/8*(T-T^-1)^2)*E43", "", ""},
      {"Prop6:[H34,E41]", "[H34,E41] = (1 + 1/8*(T-T^-1)^2)*E41 - h/16*(T^2-T^-2)*(T+T^-1)*E43", "", ""},
      {"Prop6:[H34,E34]", "[H34,E34] = 1/8*(T-T^-1)^2*E34 + h/16*(T^2-T^-2)*(T-T^-1)*E14",
       "[H34,E34] = 1/8*(T-T^-1)^2*E34 + h/16*(T^2-T^-2)*(T+T^-1)*E14",
       "factor (T+T^-1) in the h/16 term, as in [H2,E2]"},
      {"Prop6:[H34,E43]", "[H34,E43] = -1/8*(T-T^-1)^2*E43", "", ""},
      {"Prop6:[H34,T]", "[H34,T] = -1/4*(T^3-T^-1)", "", ""},
      {"Prop6:[H34,T^-1]", "[H34,T^-1] = -1/4*(T^-3-T)", "", ""},
      {"Prop6:[H14,T]", "[H14,T] = 1/4*(T^3-T^-1)", "", ""},
      {"Prop6:[H14,T^-1]", "[H14,T^-1] = 1/4*(T^-3-T)", "", ""},
      {"Prop6:[H34,E31]",
       "[H34,E31] = 1/4*(T+T^-1)^2*E31 - h/4*(T-T^-1)*H13^2 - h/4*(T^2-T^-2)*H13 - h/16*(T^2-T^-2)*(T+T^-1)", "",
       ""},
      {"Prop6:[H14,E31]",
       "[H14,E31] = -1/4*(T+T^-1)^2*E31 + h/4*(T-T^-1)*H13^2 + h/4*(T^2-T^-2)*H13 + h/16*(T^2-T^-2)*(T+T^-1)", "",
       ""},
      {"Prop6:[H14,E34]", "[H14,E34] = -(1 + 1/8*(T-T^-1)^2)*E34 - h/16*(T^2-T^-2)*(T+T^-1)*E43",
       "[H14,E34] = -(1 + 1/8*(T-T^-1)^2)*E34 - h/16*(T^2-T^-2)*(T+T^-1)*E14",
       "E43 read as E14 in the h/16 term, as in [H3,E2]"},
      {"Prop6:[T,E34]", "[T,E34] = h/2*(T^2+1)*E14", "", ""},
      {"Prop6:[T^-1,E34]", "[T^-1,E34] = -h/2*(T^-2+1)*E14", "", ""},
      {"Prop6:[T,E41]", "[T,E41] = -h/2*(T^2+1)*E43", "", ""},
      {"Prop6:[T^-1,E41]", "[T^-1,E41] = h/2*(T^-2+1)*E43", "", ""},
      {"Prop6:[E43,E14]", "[E43,E14] = 1/(2*h)*(T-T^-1)", "", ""},
      {"Prop6:[E34,E43]", "[E34,E43] = H34 - 1/16*(T-T^-1)^2 - h/4*(T-T^-1)*E14*E43", "", ""},
      {"Prop6:[E14,E41]", "[E14,E41] = H14 + 1/16*(T-T^-1)^2 + h/4*(T-T^-1)*E43*E14", "", ""},
      {"Prop6:[E43,E31]",
       "[E43,E31] = h/4*(T-T^-1)*E34 + h/2*(T-T^-1)*E14*E31 - h^2/4*E14*H13^2 - 3*h^2/8*(T+T^-1)*E14*H13"
       " - h^2/2*E14 - 15*h^2/64*(T-T^-1)^2*E14",
       "[E34,E31] = h/4*(T-T^-1)*E34 + h/2*(T-T^-1)*E14*E31 - h^2/4*E14*H13^2 - 3*h^2/8*(T+T^-1)*E14*H13"
       " - h^2/2*E14 - 15*h^2/64*(T-T^-1)^2*E14",
       "left side read as [E34,E31], as in [E2,F1]"},
      {"Prop6:[E41,E31]",
       "[E41,E31] = h/4*(T-T^-1)*E41 - h/2*(T-T^-1)*E43*E31 + h^2/4*E43*H13^2 + 3*h^2/8*(T+T^-1)*E43*H13"
       " + h^2/2*E43 + 15*h^2/64*(T-T^-1)^2*E43",
       "", ""},
      {"Prop6:[E43,E32]", "[E43,E32] = F42 + h/4*(T-T^-1)*E12*E43",
       "[E43,E32] = E42 + h/4*(T-T^-1)*E12*E43", "F42 read as E42"},
      {"Prop6:E34^2", "E34^2 = h/4*(T-T^-1)*E14*E34", "", ""},
      {"Prop6:E41^2", "E41^2 = -h/4*(T-T^-1)*E43*E41", "", ""},
      {"Prop6:[T,E14]", "[T,E14] = 0", "", ""},
      {"Prop6:[T^-1,E14]", "[T^-1,E14] = 0", "", ""},
      {"Prop6:[T,E43]", "[T,E43] = 0", "", ""},
      {"Prop6:[T^-1,E43]", "[T^-1,E43] = 0", "", ""},
      {"Prop6:[T,E24]", "[T,E24] = 0", "", ""},
      {"Prop6:[T^-1,E24]", "[T^-1,E24] = 0", "", ""},
      {"Prop6:[T,E42]", "[T,E42] = 0", "", ""},
      {"Prop6:[T^-1,E42]", "[T^-1,E42] = 0", "", ""},
      {"Prop6:[E34,E41]",
       "[E34,E41] = F31 - h/4*(T-T^-1)*E43*E34 + h/4*(T-T^-1)*E14*F41 - h/8*(T-T^-1)*H13^2"
       " - h/8*(T^2-T^-2)*H13^2 - h/16*H13*(T^2-T^-2) + 7*h/128*(T-T^-1)^3",
       "[E34,E41] = F31 - h/4*(T-T^-1)*E43*E34 + h/4*(T-T^-1)*E14*F41 - h/8*(T-T^-1)*H13^2"
       " - h/8*(T^2-T^-2)*H13 - h/16*H13*(T^2-T^-2) + 7*h/128*(T-T^-1)^3",
       "F31, F41 read as E31, E41; H13 in place of H13^2, as in [F3,E2]"},
  };
}

}  // namespace

std::vector<Relation> sl2_sector_relations(int n) { return build(n, sl2_entries()); }

std::vector<Relation> deformed_relations(int n) {
  if (n != 2 && n != 3) throw Unsupported("unsupported N for printed relation list");
  std::vector<Relation> out = build(n, sl2_entries());
  auto more = build(n, n == 2 ? prop1_entries() : prop5_entries());
  out.insert(out.end(), more.begin(), more.end());
  if (n == 3) {
    auto six = build(n, prop6_entries());
    out.insert(out.end(), six.begin(), six.end());
  }
  return out;
}

CheckReport deformed_relations_suite(const DeformedTable& dt, bool allow_variants) {
  CheckReport rep{"deformed-relations", dt.n, dt.rep};
  for (const auto& rel : deformed_relations(dt.n)) rep.add(check_relation(rel, dt.table.evaluator(), allow_variants));
  return rep;
}

CheckReport sl2_sector_suite(const DeformedTable& dt) {
  CheckReport rep{"sl2-sector", dt.n, dt.rep};
  for (const auto& rel : sl2_sector_relations(dt.n)) rep.add(check_relation(rel, dt.table.evaluator(), false));
  return rep;
}

CheckReport deformed_classical_limit(const DeformedTable& dt) {
  CheckReport rep{"classical-limit", dt.n, dt.rep};
  const HMatrix id = dt.table.identity();
  for (const Label& l : deformed_labels(dt.n)) {
    const HMatrix got = eval_h0(dt.table.at(l));
    if (auto c = classical_counterpart(l, dt.n))
      rep.add(compare("h=0:" + l.name(), got, dt.source.at(*c)));
    else if (l.kind == GenKind::ParityF)
      rep.add(compare("h=0:" + l.name(), got, parity_operator(dt.table.space)));
    else
      rep.add(compare("h=0:" + l.name(), got, id));
  }
  return rep;
}

namespace {

// Φ obtained by pushing φ through the deformation map.
GeneratorTable lifted_phi(const DeformedTable& dt) {
  const auto images = phi_images(dt.n, false);
  GeneratorTable image = dt.source;
  image.entries.clear();
  for (const auto& [label, m] : dt.source.entries) {
    if (label.kind == GenKind::Root) continue;
    image.set(label, dt.source.eval(images.at(label)));
  }
  return deform(image, dt.form).table;
}

}  // namespace

CheckReport automorphism_Phi_check(const DeformedTable& dt, bool allow_variants) {
  const int n = dt.n;
  if (n != 2 && n != 3) throw Unsupported("Φ is listed only for N = 2, 3");
  CheckReport rep{"automorphism-Phi", n, dt.rep};
  const GeneratorTable lifted = lifted_phi(dt);
  const SymbolTable sym = deformed_symbols(n);

  struct Image {
    std::string id;
    Label label;
    std::string printed;
    std::string corrected;
    std::string note;
  };
  std::vector<Image> list;
  if (n == 2) {
    list = {{"Prop2:Phi(T)", Label::T(), "T", "", ""},
            {"Prop2:Phi(T^-1)", Label::TInv(), "T^-1", "", ""},
            {"Prop2:Phi(F1)", Label::E(2, 1, 2), "F1", "", ""},
            {"Prop2:Phi(H1)", Label::H(1, 2), "H1", "", ""},
            {"Prop2:Phi(E2)", Label::E(2, 3, 2), "F3", "", ""},
            {"Prop2:Phi(F2)", Label::E(3, 2, 2), "-E3", "", ""},
            {"Prop2:Phi(H2)", Label::H(2, 3), "-H3", "", ""},
            {"Prop2:Phi(E3)", Label::E(1, 3, 2), "-F2", "", ""},
            {"Prop2:Phi(F3)", Label::E(3, 1, 2), "E2", "", ""},
            {"Prop2:Phi(H3)", Label::H(1, 3), "-H2", "", ""}};
  } else {
    list = {{"Eq3.7:Phi(E12)", Label::E(1, 2, 3), "E23", "", ""},
            {"Eq3.7:Phi(E21)", Label::E(2, 1, 3), "E32", "", ""},
            {"Eq3.7:Phi(H12)", Label::H(1, 2), "H23", "", ""},
            {"Eq3.7:Phi(E23)", Label::E(2, 3, 3), "E12", "", ""},
            {"Eq3.7:Phi(E32)", Label::E(3, 2, 3), "E12", "E21", "image E21 (printed E12)"},
            {"Eq3.7:Phi(H23)", Label::H(2, 3), "H12", "", ""},
            {"Eq3.7:Phi(E34)", Label::E(3, 4, 3), "E41", "", ""},
            {"Eq3.7:Phi(E43)", Label::E(4, 3, 3), "E14", "-E14", "image -E14 (printed E14)"},
            {"Eq3.7:Phi(H34)", Label::H(3, 4), "-H14", "", ""}};
  }
  for (const auto& im : list) {
    Relation rel{im.id, parse_expr(im.printed, sym), im.label};
    if (!im.corrected.empty()) rel.alt = Relation::Alternative{parse_expr(im.corrected, sym), im.label, im.note};
    auto eval = [&](const Expr& e) {
      if (e.kind() == Expr::Kind::Leaf && e.label() == im.label) return lifted.at(im.label);
      return dt.eval(e);
    };
    rep.add(check_relation(rel, eval, allow_variants));
  }

  for (const auto& rel : deformed_relations(n))
    rep.add(check_relation(Relation{"Phi:" + rel.id, rel.lhs, rel.rhs, rel.alt, rel.defect}, lifted.evaluator(),
                           allow_variants));

  const auto phi = phi_images(n, false);
  for (const Label& l : deformed_labels(n)) {
    const HMatrix got = eval_h0(lifted.at(l));
    if (auto c = classical_counterpart(l, n))
      rep.add(compare("h=0:Phi(" + l.name() + ")", got, dt.source.eval(phi.at(*c))));
  }
  return rep;
}

nlohmann::ordered_json commutator_table(const DeformedTable& dt) {
  nlohmann::ordered_json out;
  out["n"] = dt.n;
  out["rep"] = dt.rep;
  const auto labels = deformed_labels(dt.n);
  auto names = nlohmann::ordered_json::array();
  for (const auto& l : labels) names.push_back(l.name());
  out["generators"] = names;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a; b < labels.size(); ++b) {
      const HMatrix c = graded_commutator(dt.table.at(labels[a]), dt.table.at(labels[b]));
      auto entries = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t j = 0; j < c.dim(); ++j)
          if (!c(i, j).is_zero()) entries.push_back({i + 1, j + 1, to_string(c(i, j))});
      rows.push_back({{"a", labels[a].name()}, {"b", labels[b].name()}, {"entries", std::move(entries)}});
    }
  out["commutators"] = std::move(rows);
  return out;
}

}  // namespace sjord
