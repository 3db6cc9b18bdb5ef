#pragma once

// The super-Jordanian deformation: the nonlinear map from classical sl(N|1)
// generators to T^{±1}, T^{±1/2}, H_ij, E_ij, and the deformed relation lists.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sjord/classical.hpp"
#include "sjord/parse.hpp"

namespace sjord {

/// Which general-N map to use. `Printed` follows the displayed general
/// formulas verbatim; `Corrected` restores the e_{1N} factor in E_ji and
/// selects δ_{i1} in E_{N+1,i}, agreeing with the N = 2, 3 special cases.
enum class MapForm { Printed, Corrected };

struct DeformedTable {
  int n = 0;
  std::string rep;
  MapForm form = MapForm::Corrected;
  /// Classical generators plus the element sqrt(1 + h^2 e_{1N}^2).
  GeneratorTable source;
  /// Deformed generators, T-family and (-1)^F. E_{1N} holds X = h^-1 ln T.
  GeneratorTable table;

  HMatrix eval(const Expr& e) const { return table.eval(e); }
};

/// Deformed generator labels in report order.
std::vector<Label> deformed_labels(int n);

/// The classical label a deformed label reduces to at h = 0 (nullopt for the
/// T family and (-1)^F, which reduce to the identity and the parity operator).
std::optional<Label> classical_counterpart(const Label& deformed, int n);

/// Deformed generators as expressions in classical labels and Label::Root().
/// T^{±1/2} and E_{1N} are series in T and are not listed.
std::vector<std::pair<Label, Expr>> deformation_map(int n, MapForm form);

/// Low-rank formulas displayed separately for N = 2 and N = 3.
std::vector<std::pair<Label, Expr>> special_case_map(int n);

/// Adds sqrt(1 + h^2 e_{1N}^2) to a classical table; throws NotNilpotent.
GeneratorTable with_root(const GeneratorTable& classical);

DeformedTable deform(const GeneratorTable& classical, MapForm form = MapForm::Corrected);

/// deform(classical_table(n)) or its graded tensor power (rep "fund", "fund2", "fund3").
DeformedTable deformed_rep(int n, const std::string& rep, MapForm form = MapForm::Corrected);

/// Classical symbols e12, h13, ... (with sl(2|1) aliases e1, f2, ... for n = 2) and R = sqrt(1+h^2e^2).
SymbolTable classical_symbols(int n);
/// Deformed symbols T, H12, E21, ... plus Hl = H_{1N}, Fl = E_{N1}, P = (-1)^F;
/// for n = 2 also H1, F1, E2, ... With `aliases`, undefined names used in
/// the N = 3 lists (F31, F32, F41, F42) resolve to E31, E32, E41, E42.
SymbolTable deformed_symbols(int n, bool aliases = false);

/// Special-case formulas against the general map, in fund and fund⊗².
CheckReport specialization_crosscheck(int n, bool allow_variants = true);

/// T T^-1 = 1, (T^{1/2})^2 = T, T^{1/2} T^{-1/2} = 1, parity of every entry.
CheckReport basic_identities(const DeformedTable& dt);

/// The sl(2)-sector relations for (T, H_{1N}, E_{N1}); valid for every N.
std::vector<Relation> sl2_sector_relations(int n);

/// Printed deformed relations for N = 2 and N = 3.
/// Throws Unsupported for other n.
std::vector<Relation> deformed_relations(int n);

CheckReport deformed_relations_suite(const DeformedTable& dt, bool allow_variants = true);
CheckReport sl2_sector_suite(const DeformedTable& dt);

/// Every deformed generator at h = 0 equals its classical source.
CheckReport deformed_classical_limit(const DeformedTable& dt);

/// Φ: printed images against the lift of φ through the deformation map,
/// relations under Φ, and Φ = φ at h = 0. n in {2, 3}.
CheckReport automorphism_Phi_check(const DeformedTable& dt, bool allow_variants = true);

/// Pairwise graded commutators of all deformed generators.
nlohmann::ordered_json commutator_table(const DeformedTable& dt);

}  // namespace sjord
