#pragma once

// R-matrices: the q-deformed R_q of sl(2|1), the contraction to R_h, the
// universal Jordanian R evaluated on V⊗V, L-operators, and the QYBE,
// intertwining and RLL checks.

#include <string>
#include <vector>

#include "sjord/hopf.hpp"

namespace sjord {

/// E_q(x) = Σ x^k / [k]_{q^b}! for nilpotent x, b = base_power (1 or 2).
QHMatrix deformed_exponential(const QHMatrix& x, int base_power = 1);

/// G = E_q(h ê_{1N} / (q - 1)) in the defining representation.
QHMatrix contraction_transform(int n);

/// Printed R_q on fund⊗fund for n = 2. `corner` replaces the (9,9) entry when set.
QMatrix rq_fundamental(int n, std::optional<QRat> corner = std::nullopt);

/// Standard sl(n|1) R_q on fund⊗fund: q on even diagonal pairs, `odd_diagonal`
/// on the odd one, q - q^-1 at ((i,j),(j,i)) for i < j. For n = 2 with
/// -q^-1 it differs from the display only in the (9,9) entry.
QMatrix rq_standard(int n, const QRat& odd_diagonal);

/// lim_{q->1} (G^-1⊗G^-1) R (G⊗G), plain Kronecker products.
HMatrix contract(const QMatrix& rq, const QHMatrix& g);

/// The contracted matrix as displayed for n = 2.
HMatrix printed_rh_contracted();

/// exp(-h X⊗TH) exp(h TH⊗X) on V⊗V, X = h^-1 ln T, H = H_{1N}.
HMatrix universal_rh_eval(const DeformedTable& dt);

/// diag((-1)^{p_i p_k}) on V⊗V.
HMatrix koszul_dressing(const SuperSpace& v);

/// R12 R13 R23 = R23 R13 R12 on V⊗V⊗V with plain embeddings; `graded`
/// embeds with graded_kron and the graded flip instead.
template <class S>
Check qybe(const std::string& id, const GradedMatrix<S>& r, const SuperSpace& v, bool graded = false);

CheckReport qybe_check(const HMatrix& r, const SuperSpace& v, const std::string& name);

/// R Δ(x) = Δ^op(x) R and R Δ^op(x) = Δ(x) R for every generator, for the
/// contracted and universal R and their Koszul dressings (n = 2, fund).
/// Combinations that hold for every generator are reported as checks;
/// the rest are summarised in the notes.
CheckReport intertwiner_check(const DeformedTable& dt);

/// Square matrix of algebra elements acting on aux ⊗ rep.
struct LOperator {
  SuperSpace aux;
  std::vector<std::vector<Expr>> entries;

  std::size_t dim() const { return aux.dim(); }
};

/// The displayed L-operator (n = 2, 3). For n = 3 `inverse_corner` puts
/// T^-1 at (3,3) instead of the printed T.
LOperator l_operator(int n, bool inverse_corner = false);

/// Σ E_ab ⊗ L_ab on aux ⊗ rep (plain embedding; entries must be even).
HMatrix l_matrix(const LOperator& l, const GeneratorTable& table);

/// RLL on aux⊗aux⊗rep and Δ(L_ab) = Σ_c L_ac ⊗ L_cb, each entry.
CheckReport frt_check(const HMatrix& r, const LOperator& l, const DeformedTable& dt, const std::string& tag,
                      bool allow_variants = true);

/// Full R-matrix suite for n = 2 (contraction, QYBE, universal R, FRT,
/// intertwiners) or n = 3 (universal R, L-operator variants).
CheckReport rmatrix_suite(int n, bool allow_variants = true);

/// Contraction reproduction: every entry of the contracted R_q against the display.
CheckReport contraction_suite(int n, bool allow_variants = true);

/// h = 0 limits of the contracted and universal R (dressed identity / identity).
CheckReport rmatrix_classical_limit(const DeformedTable& dt);

}  // namespace sjord
