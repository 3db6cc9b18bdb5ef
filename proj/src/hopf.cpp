#include "sjord/hopf.hpp"

#include "sjord/superlinalg.hpp"

namespace sjord {

namespace {

int delta(int a, int b) { return a == b ? 1 : 0; }

// T^{k/2}, k in [-2, 2].
Expr t_half_power(int k) {
  switch (k) {
    case 0:
      return Expr(1L);
    case 1:
      return Expr(Label::THalf());
    case -1:
      return Expr(Label::TInvHalf());
    case 2:
      return Expr(Label::T());
    case -2:
      return Expr(Label::TInv());
    default:
      throw Error("T exponent out of range: " + std::to_string(k) + "/2");
  }
}

// Exponent (in halves) when e is a pure power of T^{1/2}.
std::optional<int> t_half_exponent(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Scalar:
      if (e.scalar() == HPoly(1L)) return 0;
      return std::nullopt;
    case Expr::Kind::Leaf:
      switch (e.label().kind) {
        case GenKind::T:
          return 2;
        case GenKind::TInv:
          return -2;
        case GenKind::THalf:
          return 1;
        case GenKind::TInvHalf:
          return -1;
        default:
          return std::nullopt;
      }
    case Expr::Kind::Power: {
      auto b = t_half_exponent(e.children().front());
      if (!b) return std::nullopt;
      return *b * e.exponent();
    }
    case Expr::Kind::Product: {
      int acc = 0;
      for (const auto& c : e.children()) {
        auto k = t_half_exponent(c);
        if (!k) return std::nullopt;
        acc += *k;
      }
      return acc;
    }
    default:
      return std::nullopt;
  }
}

Expr t_inverse(int halves) {
  if (halves == 0) return Expr(1L);
  const int k = -halves;
  Expr unit = t_half_power(k > 0 ? (k % 2 == 0 ? 2 : 1) : (k % 2 == 0 ? -2 : -1));
  const int reps = (k % 2 == 0) ? std::abs(k) / 2 : std::abs(k);
  return reps == 1 ? unit : pow(unit, reps);
}

CoproductRule group_like(const Label& l) { return {l, {{Expr(l), Expr(l)}}}; }

CoproductRule primitive(const Label& l) { return {l, {{Expr(l), Expr(1L)}, {Expr(1L), Expr(l)}}}; }

// x ⊗ T^{a/2} + T^{b/2} ⊗ x
CoproductRule twisted_primitive(const Label& l, int a, int b) {
  return {l, {{Expr(l), t_half_power(a)}, {t_half_power(b), Expr(l)}}};
}

// T^{-1/2} H + H T^{-1/2} and its T^{1/2} counterpart, with H = H_{1N}.
Expr sym_half(const Expr& h1n, int sign) {
  const Expr t = t_half_power(sign);
  return t * h1n + h1n * t;
}

// (h/4) T^-1 Y ⊗ (T^{-1/2}H + H T^{-1/2}) - (h/4) (T^{1/2}H + H T^{1/2}) ⊗ T Y, times `sign`.
void add_tail(CoproductRule& r, const Expr& y, int n, long sign) {
  const Expr h1n = Label::H(1, n);
  const HPoly c = HPoly::monomial(Rational(sign, 4), 1);
  r.terms.push_back({Expr(Label::TInv()) * y, sym_half(h1n, -1), c});
  r.terms.push_back({sym_half(h1n, 1), Expr(Label::T()) * y, -c});
}

// -(c/4) (T H ⊗ (1 - T^2) + (1 - T^-2) ⊗ T^-1 H)
void add_cartan_tail(CoproductRule& r, int n, long c) {
  if (c == 0) return;
  const Expr h1n = Label::H(1, n);
  const Expr T = Label::T();
  const Expr Ti = Label::TInv();
  const HPoly k(Rational(-c, 4));
  r.terms.push_back({T * h1n, Expr(1L) - pow(T, 2), k});
  r.terms.push_back({Expr(1L) - pow(Ti, 2), Ti * h1n, k});
}

void add_common(CoproductRules& rules, int n) {
  for (const Label& l : {Label::T(), Label::TInv(), Label::THalf(), Label::TInvHalf(), Label::ParityF()})
    rules.emplace(l, group_like(l));
  rules.emplace(Label::E(1, n, n), primitive(Label::E(1, n, n)));
  rules.emplace(Label::H(1, n), twisted_primitive(Label::H(1, n), 2, -2));
  rules.emplace(Label::E(n, 1, n), twisted_primitive(Label::E(n, 1, n), 2, -2));
}

CoproductRules sl21_rules() {
  const SymbolTable s = deformed_symbols(2);
  auto x = [&](const char* text) { return parse_expr(text, s); };
  CoproductRules rules;
  add_common(rules, 2);
  auto add = [&](const char* gen, std::vector<std::pair<const char*, const char*>> terms) {
    const Expr g = x(gen);
    CoproductRule r{g.label(), {}};
    for (const auto& [l, rt] : terms) r.terms.push_back({x(l), x(rt)});
    rules.insert_or_assign(r.generator, std::move(r));
  };
  add("E2", {{"E2", "T^(1/2)"},
             {"T^(-1/2)", "E2"},
             {"h/4*T^-1*E3", "T^(-1/2)*H1 + H1*T^(-1/2)"},
             {"-h/4*(T^(1/2)*H1 + H1*T^(1/2))", "T*E3"}});
  add("F2", {{"F2", "T^(-1/2)"}, {"T^(1/2)", "F2"}});
  add("E3", {{"E3", "T^(-1/2)"}, {"T^(1/2)", "E3"}});
  add("F3", {{"F3", "T^(1/2)"},
             {"T^(-1/2)", "F3"},
             {"-h/4*T^-1*F2", "T^(-1/2)*H1 + H1*T^(-1/2)"},
             {"h/4*(T^(1/2)*H1 + H1*T^(1/2))", "T*F2"}});
  add("H2", {{"H2", "1"}, {"1", "H2"}, {"1/4*T*H1", "1 - T^2"}, {"1/4*(1 - T^-2)", "T^-1*H1"}});
  add("H3", {{"H3", "1"}, {"1", "H3"}, {"-1/4*T*H1", "1 - T^2"}, {"-1/4*(1 - T^-2)", "T^-1*H1"}});
  return rules;
}

}  // namespace

CoproductRules general_coproduct_rules(int n, CoproductForm form) {
  if (n < 2) throw InvalidN(n);
  CoproductRules rules;
  add_common(rules, n);
  auto E = [n](int i, int j) { return Expr(Label::E(i, j, n)); };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      const int c = delta(i, 1) + delta(j, n);
      CoproductRule hr = primitive(Label::H(i, j));
      add_cartan_tail(hr, n, c);
      rules.emplace(hr.generator, std::move(hr));
      rules.emplace(Label::E(i, j, n), twisted_primitive(Label::E(i, j, n), -c, c));
      CoproductRule low = twisted_primitive(Label::E(j, i, n), c, -c);
      std::vector<Expr> y;
      if (i == 1) y.push_back(-E(j, n));
      if (j == n) y.push_back(E(1, i));
      if (!y.empty()) add_tail(low, Expr::sum(y), n, 1);
      rules.emplace(low.generator, std::move(low));
    }
  for (int i = 1; i <= n; ++i) {
    const int c = delta(i, 1) - delta(i, n);
    CoproductRule hr = primitive(Label::H(i, n + 1));
    add_cartan_tail(hr, n, c);
    rules.emplace(hr.generator, std::move(hr));
    CoproductRule up = twisted_primitive(Label::E(i, n + 1, n), -c, c);
    if (i == n) add_tail(up, form == CoproductForm::Corrected ? E(1, n + 1) : E(1, n), n, 1);
    rules.emplace(up.generator, std::move(up));
    CoproductRule down = twisted_primitive(Label::E(n + 1, i, n), c, -c);
    if (i == 1) add_tail(down, E(n + 1, n), n, -1);
    rules.emplace(down.generator, std::move(down));
  }
  return rules;
}

CoproductRules coproduct_rules(int n, CoproductForm form) {
  if (n == 2) return sl21_rules();
  return general_coproduct_rules(n, form);
}

HPoly counit_value(const Label& l) {
  switch (l.kind) {
    case GenKind::T:
    case GenKind::TInv:
    case GenKind::THalf:
    case GenKind::TInvHalf:
    case GenKind::ParityF:
      return HPoly(1L);
    default:
      return HPoly();
  }
}

HPoly counit(const Expr& e) {
  Evaluator<HPoly> ev;
  ev.one = [] { return HPoly(1L); };
  ev.leaf = counit_value;
  ev.div_h = [](const HPoly& p, int k) { return p.shift_down(static_cast<std::size_t>(k)); };
  return evaluate(e, ev);
}

HMatrix coproduct_matrix(const CoproductRule& rule, const GeneratorTable& table) {
  HMatrix out(tensor(table.space, table.space));
  for (const auto& t : rule.terms) {
    HMatrix k = graded_kron(table.eval(t.left), table.eval(t.right));
    out += (t.coefficient == HPoly(1L)) ? k : t.coefficient * k;
  }
  return out.with_parity(rule.generator.odd ? 1 : 0);
}

CoproductTable::CoproductTable(const DeformedTable& dt, CoproductRules rules)
    : dt_(&dt), rules_(std::move(rules)), space2_(tensor(dt.table.space, dt.table.space)) {}

const HMatrix& CoproductTable::delta(const Label& x) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
  }
  auto rule = rules_.find(x);
  if (rule == rules_.end()) throw UnknownGenerator("coproduct of " + x.name());
  HMatrix m = coproduct_matrix(rule->second, dt_->table);
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(x, std::move(m)).first->second;
}

HMatrix CoproductTable::delta_op(const Label& x) const {
  const HMatrix tau = graded_flip(dt_->table.space, dt_->table.space);
  return (tau * delta(x) * tau).with_parity(x.odd ? 1 : 0);
}

HMatrix CoproductTable::eval(const Expr& e) const {
  return evaluate(e, matrix_evaluator(space2_, [this](const Label& l) { return delta(l); }));
}

GeneratorTable CoproductTable::as_table() const {
  GeneratorTable t;
  t.n = dt_->n;
  t.rep = dt_->rep + "⊗" + dt_->rep;
  t.space = space2_;
  for (const auto& [label, rule] : rules_) t.set(label, delta(label));
  return t;
}

AntipodeRules known_antipodes(int n) {
  AntipodeRules s;
  s.emplace(Label::T(), Expr(Label::TInv()));
  s.emplace(Label::TInv(), Expr(Label::T()));
  s.emplace(Label::THalf(), Expr(Label::TInvHalf()));
  s.emplace(Label::TInvHalf(), Expr(Label::THalf()));
  s.emplace(Label::ParityF(), Expr(Label::ParityF()));
  s.emplace(Label::E(1, n, n), -Expr(Label::E(1, n, n)));
  return s;
}

Expr antipode_derive(const Label& x, const CoproductRules& rules, const AntipodeRules& known, bool koszul) {
  auto it = rules.find(x);
  if (it == rules.end()) throw NotSolvable(x.name());
  std::optional<int> a, b;
  std::vector<const CoproductTerm*> rest;
  for (const auto& t : it->second.terms) {
    const bool unit = t.coefficient == HPoly(1L);
    if (!a && unit && t.left.is_leaf(x)) {
      if ((a = t_half_exponent(t.right))) continue;
    }
    if (!b && unit && t.right.is_leaf(x)) {
      if ((b = t_half_exponent(t.left))) continue;
    }
    rest.push_back(&t);
  }
  if (!a || !b) throw NotSolvable(x.name());
  const LabelMap lookup = [&known](const Label& l) -> std::optional<Expr> {
    auto k = known.find(l);
    if (k == known.end()) return std::nullopt;
    return k->second;
  };
  std::vector<Expr> terms{t_inverse(*b) * Expr(x)};
  try {
    for (const auto* t : rest) terms.push_back(Expr(t->coefficient) * antipode_image(t->left, lookup, koszul) * t->right);
  } catch (const UnknownGenerator&) {
    throw NotSolvable(x.name());
  }
  return -(Expr::sum(std::move(terms)) * t_inverse(*a));
}

AntipodeRules derive_antipodes(int n, const CoproductRules& rules, bool koszul) {
  AntipodeRules s = known_antipodes(n);
  std::vector<Label> pending;
  for (const auto& [label, rule] : rules)
    if (!s.count(label)) pending.push_back(label);
  while (!pending.empty()) {
    std::vector<Label> next;
    for (const auto& l : pending) {
      try {
        s.emplace(l, antipode_derive(l, rules, s, koszul));
      } catch (const NotSolvable&) {
        next.push_back(l);
      }
    }
    if (next.size() == pending.size()) throw NotSolvable(next.front().name());
    pending = std::move(next);
  }
  return s;
}

AntipodeRules printed_antipodes() {
  const SymbolTable sym = deformed_symbols(2);
  AntipodeRules s;
  for (const auto& [gen, img] : std::vector<std::pair<Label, const char*>>{
           {Label::H(1, 2), "-T*H1*T^-1"},
           {Label::T(), "T^-1"},
           {Label::TInv(), "T"},
           {Label::E(2, 1, 2), "-T*F1*T^-1"},
           {Label::E(2, 3, 2), "-E2 - h/2*(T + T^-1)*E3"},
           {Label::E(3, 1, 2), "-F3 + h/2*(T + T^-1)*F2"},
           {Label::E(3, 2, 2), "-F2"},
           {Label::E(1, 3, 2), "-E3"},
           {Label::H(2, 3), "-H2 + 1/2*(T^-2 - 1)"},
           {Label::H(1, 3), "-H3 - 1/2*(T^-2 - 1)"}})
    s.emplace(gen, parse_expr(img, sym));
  return s;
}

namespace {

std::string tag(const Label& l) { return "Delta(" + l.name() + ")"; }

void homomorphism_checks(CheckReport& rep, const DeformedTable& dt, const CoproductTable& ct, bool allow_variants) {
  const GeneratorTable t2 = ct.as_table();
  const MatrixEval ev = t2.evaluator();
  std::vector<Relation> rels = (dt.n == 2 || dt.n == 3) ? deformed_relations(dt.n) : sl2_sector_relations(dt.n);
  const SymbolTable sym = deformed_symbols(dt.n);
  for (const char* basic : {"T*T^-1 = 1", "T^(1/2)*T^(1/2) = T", "T^(1/2)*T^(-1/2) = 1", "P*P = 1"})
    rels.push_back(parse_relation(basic, basic, sym));
  for (const auto& r : rels) {
    Check c = check_relation(r, ev, allow_variants);
    c.id = "hom:" + c.id;
    rep.add(std::move(c));
  }
  // Δ(T) = exp(h Δ(X)) ties the primitive X = h^-1 ln T to the group-like T.
  const HMatrix x2 = ct.delta(Label::E(1, dt.n, dt.n));
  rep.add(compare("hom:exp(h*Delta(X))=Delta(T)", unipotent_series(HPoly::var() * x2, SeriesFn::Exp),
                  ct.delta(Label::T())));
}

void coassociativity_checks(CheckReport& rep, const DeformedTable& dt, const CoproductTable& ct) {
  for (const auto& [label, rule] : ct.rules()) {
    HMatrix left(tensor_power(dt.table.space, 3)), right(tensor_power(dt.table.space, 3));
    for (const auto& t : rule.terms) {
      left += t.coefficient * graded_kron(ct.eval(t.left), dt.eval(t.right));
      right += t.coefficient * graded_kron(dt.eval(t.left), ct.eval(t.right));
    }
    rep.add(compare("coassoc:" + tag(label), left, right));
  }
}

void counit_checks(CheckReport& rep, const DeformedTable& dt, const CoproductRules& rules) {
  for (const auto& [label, rule] : rules) {
    HMatrix left(dt.table.space), right(dt.table.space);
    for (const auto& t : rule.terms) {
      left += (t.coefficient * counit(t.left)) * dt.eval(t.right);
      right += (t.coefficient * counit(t.right)) * dt.eval(t.left);
    }
    const HMatrix& x = dt.table.at(label);
    rep.add(compare("counit:(eps⊗id)" + tag(label), left, x));
    rep.add(compare("counit:(id⊗eps)" + tag(label), right, x));
  }
}

LabelMap lookup_in(const AntipodeRules& s) {
  return [&s](const Label& l) -> std::optional<Expr> {
    auto k = s.find(l);
    if (k == s.end()) return std::nullopt;
    return k->second;
  };
}

void antipode_checks(CheckReport& rep, const DeformedTable& dt, const CoproductRules& rules, const AntipodeRules& s,
                     bool koszul) {
  const LabelMap lk = lookup_in(s);
  for (const auto& [label, rule] : rules) {
    HMatrix left(dt.table.space), right(dt.table.space);
    for (const auto& t : rule.terms) {
      left += t.coefficient * dt.eval(antipode_image(t.left, lk, koszul) * t.right);
      right += t.coefficient * dt.eval(t.left * antipode_image(t.right, lk, koszul));
    }
    const HMatrix expect = counit_value(label) * dt.table.identity();
    rep.add(compare("antipode:m(S⊗id)" + tag(label), left, expect));
    rep.add(compare("antipode:m(id⊗S)" + tag(label), right, expect));
  }
}

void classical_limit_checks(CheckReport& rep, const DeformedTable& dt, const CoproductTable& ct) {
  const HMatrix id = dt.table.identity();
  for (const auto& [label, rule] : ct.rules()) {
    const HMatrix d0 = eval_h0(ct.delta(label));
    rep.add(compare("h=0:cocommutative:" + tag(label), d0, eval_h0(ct.delta_op(label))));
    const HMatrix x0 = eval_h0(dt.table.at(label));
    const HMatrix expect = counit_value(label).is_zero() ? graded_kron(x0, id) + graded_kron(id, x0)
                                                         : graded_kron(x0, x0);
    rep.add(compare("h=0:" + tag(label), d0, expect));
  }
}

}  // namespace

CheckReport hopf_axiom_suite(const DeformedTable& dt, bool allow_variants, std::size_t max_dim) {
  CheckReport rep{"hopf", dt.n, dt.rep};
  const CoproductRules rules = coproduct_rules(dt.n);
  const CoproductTable ct(dt, rules);
  const std::size_t d = dt.table.space.dim();

  for (const Label& l : {Label::T(), Label::TInv(), Label::THalf(), Label::TInvHalf(), Label::ParityF()})
    rep.add(compare("grouplike:" + tag(l), ct.delta(l), graded_kron(dt.table.at(l), dt.table.at(l))));

  if (d * d <= max_dim)
    homomorphism_checks(rep, dt, ct, allow_variants);
  else
    rep.notes.push_back("homomorphism checks skipped: dim V⊗V = " + std::to_string(d * d) + " exceeds cap");
  if (d * d * d <= max_dim)
    coassociativity_checks(rep, dt, ct);
  else
    rep.notes.push_back("coassociativity checks skipped: dim V⊗V⊗V = " + std::to_string(d * d * d) + " exceeds cap");
  counit_checks(rep, dt, rules);

  AntipodeRules s;
  try {
    s = derive_antipodes(dt.n, rules, false);
  } catch (const NotSolvable& e) {
    rep.add(boolean_check("antipode:derive", false, e.what()));
  }
  if (!s.empty()) antipode_checks(rep, dt, rules, s, false);

  if (dt.n == 2 && !s.empty()) {
    const AntipodeRules signed_s = derive_antipodes(2, rules, true);
    for (const auto& [label, img] : printed_antipodes()) {
      Relation r{"Prop3:S(" + label.name() + ")", s.at(label), img};
      r.alt = Relation::Alternative{signed_s.at(label), img, "antipode with the Koszul-signed anti-homomorphism rule"};
      rep.add(check_relation(r, dt.table.evaluator(), allow_variants));
    }
  }
  if (d * d <= max_dim) classical_limit_checks(rep, dt, ct);
  return rep;
}

CheckReport coproduct_crosscheck(bool allow_variants) {
  CheckReport rep{"coproduct-crosscheck", 2, "fund"};
  const DeformedTable dt = deformed_rep(2, "fund");
  const CoproductRules special = sl21_rules();
  const CoproductRules printed = general_coproduct_rules(2, CoproductForm::Printed);
  const CoproductRules corrected = general_coproduct_rules(2, CoproductForm::Corrected);
  const std::string note = "E_{1N} in the h-terms of Delta(E_{i,N+1}) read as E_{1,N+1}";
  for (const auto& [label, rule] : special) {
    const HMatrix want = coproduct_matrix(rule, dt.table);
    Check c = compare("Eq4.2~Prop3:" + tag(label), coproduct_matrix(printed.at(label), dt.table), want);
    if (!c.ok() && allow_variants) {
      Check alt = compare(c.id, coproduct_matrix(corrected.at(label), dt.table), want);
      if (alt.ok()) {
        c = alt;
        c.status = Status::VariantPass;
      }
      c.variant = alt.ok() ? note : "corrected form also fails: " + note;
    }
    rep.add(std::move(c));
  }
  return rep;
}

}  // namespace sjord
