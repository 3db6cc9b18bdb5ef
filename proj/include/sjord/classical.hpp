#pragma once

// The classical superalgebra sl(N|1): generators in the defining
// representation and its graded tensor powers, the relations they satisfy,
// and the automorphism φ.

#include <map>
#include <string>
#include <vector>

#include "sjord/expr.hpp"
#include "sjord/matrix.hpp"
#include "sjord/report.hpp"

namespace sjord {

/// Matrices of generators in one representation.
struct GeneratorTable {
  int n = 0;
  std::string rep;
  SuperSpace space;
  std::map<Label, HMatrix> entries;

  bool contains(const Label& l) const { return entries.count(l) != 0; }
  const HMatrix& at(const Label& l) const;
  void set(const Label& l, HMatrix m);
  HMatrix identity() const { return HMatrix::identity(space); }
  /// Evaluates an expression over the table's labels.
  HMatrix eval(const Expr& e) const;
  MatrixEval evaluator() const;
};

/// Evaluator over an arbitrary leaf map on `space`.
Evaluator<HMatrix> matrix_evaluator(const SuperSpace& space, std::function<HMatrix(const Label&)> leaf);

/// Chevalley generators e_{i,i+1}, e_{i+1,i} and every Cartan h_ij (i < j)
/// of sl(n|1) in the defining representation. h_{N,N+1} = E_NN + E_{N+1,N+1}.
GeneratorTable fundamental_generators(int n);

/// Adds e_ij, |i - j| >= 2, through e_ij = [e_{i,j-1}, e_{j-1,j}] and
/// e_ji = [e_{j,j-1}, e_{j-1,i}]. Works in any representation.
GeneratorTable composite_roots(const GeneratorTable& table);

/// fundamental_generators followed by composite_roots.
GeneratorTable classical_table(int n);

/// k-fold graded tensor power through x -> Σ 1⊗..⊗x⊗..⊗1 (k in {2, 3}).
GeneratorTable classical_tensor_rep(const GeneratorTable& table, int k);

/// Names of the sl(2|1) Chevalley aliases: e1 = e_12, e2 = e_23, e3 = e_13,
/// f1 = e_21, f2 = e_32, f3 = e_31, h1 = h_12, h2 = h_23, h3 = h_13.
namespace sl21 {
Expr h1();
Expr h2();
Expr h3();
Expr e1();
Expr e2();
Expr e3();
Expr f1();
Expr f2();
Expr f3();
}  // namespace sl21

/// Every classical relation: the sl(2|1) presentation lists for n = 2 and
/// the matrix-unit bracket table for all n.
std::vector<Relation> classical_relations(int n);

CheckReport classical_relations_suite(const GeneratorTable& table, bool allow_variants = true);

/// Images of all classical generators under φ. `printed` follows the
/// displayed lists (n = 2, 3); otherwise the index-reversal rule
/// e_{i,i+1} -> e_{σ(i+1),σ(i)}, e_{N,N+1} -> e_{N+1,1}, e_{N+1,N} -> -e_{1,N+1},
/// with composites generated by brackets of images.
std::map<Label, Expr> phi_images(int n, bool printed);

CheckReport classical_automorphism_check(const GeneratorTable& table, bool allow_variants = true);

/// [ρ(x), ρ(y)] = ρ([x, y]) for every generator pair, comparing a tensor
/// representation with brackets evaluated in its source.
CheckReport tensor_bracket_check(const GeneratorTable& source, int k);

}  // namespace sjord
