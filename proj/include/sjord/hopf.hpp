#pragma once

// Coproducts as finite lists of expression pairs, counits, antipodes, and
// the Hopf-superalgebra axioms checked on tensor powers of a representation.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sjord/jordanian.hpp"

namespace sjord {

struct CoproductTerm {
  Expr left;
  Expr right;
  HPoly coefficient = HPoly(1L);
};

/// Δ(generator) = Σ coefficient · left ⊗ right.
struct CoproductRule {
  Label generator;
  std::vector<CoproductTerm> terms;
};

using CoproductRules = std::map<Label, CoproductRule>;

/// `Printed` reads the general-N display literally (with E_ji in the second
/// term of Δ(E_{i,N+1}) taken as E_{i,N+1}); `Corrected` also replaces E_{1N}
/// by E_{1,N+1} in its h-terms, matching the N = 2 display.
enum class CoproductForm { Printed, Corrected };

/// Rules for every deformed generator. For n = 2 the sl(2|1) display; otherwise
/// the general-N display in the requested form.
CoproductRules coproduct_rules(int n, CoproductForm form = CoproductForm::Corrected);
/// The general-N display evaluated at any n (used to cross-check n = 2).
CoproductRules general_coproduct_rules(int n, CoproductForm form);

/// ε on generators: 1 on the T family and (-1)^F, 0 elsewhere.
HPoly counit_value(const Label& l);
/// ε extended multiplicatively to expressions.
HPoly counit(const Expr& e);

/// Σ c · graded_kron(eval(left), eval(right)) on V⊗V.
HMatrix coproduct_matrix(const CoproductRule& rule, const GeneratorTable& table);

/// Δ-images of generators on V⊗V, cached per label. Safe for concurrent use.
class CoproductTable {
 public:
  CoproductTable(const DeformedTable& dt, CoproductRules rules);

  const DeformedTable& source() const { return *dt_; }
  const CoproductRules& rules() const { return rules_; }
  const HMatrix& delta(const Label& x) const;
  /// Δ^op(x) = τ Δ(x) τ with τ the graded flip.
  HMatrix delta_op(const Label& x) const;
  /// Δ extended homomorphically to an expression.
  HMatrix eval(const Expr& e) const;
  /// Every Δ(x) as a generator table on V⊗V.
  GeneratorTable as_table() const;

 private:
  const DeformedTable* dt_;
  CoproductRules rules_;
  SuperSpace space2_;
  mutable std::mutex mutex_;
  mutable std::map<Label, HMatrix> cache_;
};

using AntipodeRules = std::map<Label, Expr>;

/// S on T^{±1}, T^{±1/2}, (-1)^F and X = h^-1 ln T (stored under E_{1N}).
AntipodeRules known_antipodes(int n);

/// Solves m(S⊗id)Δ(x) = ε(x) for x given Δ(x) = x⊗A + B⊗x + Σ a_i⊗b_i with
/// A, B powers of T^{1/2}: S(x) = -(S(B)x + Σ S(a_i) b_i) A^-1.
/// Throws NotSolvable when the rule is not of that shape or an S(a_i) is unknown.
Expr antipode_derive(const Label& x, const CoproductRules& rules, const AntipodeRules& known, bool koszul = false);

/// Derives S for every generator with a rule, solving in dependency order.
AntipodeRules derive_antipodes(int n, const CoproductRules& rules, bool koszul = false);

/// Antipodes displayed for sl(2|1), including those of H_1, T^{±1}, F_1.
AntipodeRules printed_antipodes();

/// Homomorphism, coassociativity, counit and antipode axioms; cocommutativity
/// and group-likeness; for n = 2 derived against printed antipodes.
/// Checks on V⊗V and V⊗V⊗V are skipped (with a note) above max_dim.
CheckReport hopf_axiom_suite(const DeformedTable& dt, bool allow_variants = true, std::size_t max_dim = 216);

/// Compares the general-N coproducts at n = 2 with the sl(2|1) display.
CheckReport coproduct_crosscheck(bool allow_variants = true);

}  // namespace sjord
