#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sjord/expr.hpp"
#include "sjord/matrix.hpp"

namespace sjord {

enum class Status { Pass, VariantPass, Fail };

std::string to_string(Status s);

/// First differing entry of a failed identity (1-based coordinates).
struct Witness {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string lhs;
  std::string rhs;
};

struct Check {
  std::string id;
  Status status = Status::Pass;
  std::optional<std::string> variant;
  std::optional<Witness> witness;

  bool ok() const { return status != Status::Fail; }
};

struct CheckReport {
  std::string suite;
  int n = 0;
  std::string rep;
  std::vector<std::string> notes;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t count(Status s) const;
  void add(Check c) { checks.push_back(std::move(c)); }
  /// Appends every check of `other`, prefixing ids with `prefix`.
  void absorb(const CheckReport& other, const std::string& prefix = {});
  const Check* find(const std::string& id) const;
};

/// JSON record per the report schema: suite, n, rep, checks[{id, status,
/// variant, witness}]. Notes are emitted under "notes" when present.
nlohmann::ordered_json to_json(const CheckReport& r);
std::string to_text(const CheckReport& r);

/// Compares two matrices; on mismatch the witness names the first differing entry.
template <class S>
Check compare(const std::string& id, const GradedMatrix<S>& lhs, const GradedMatrix<S>& rhs) {
  Check c{id};
  if (auto d = lhs.first_difference(rhs)) {
    c.status = Status::Fail;
    c.witness = Witness{d->first + 1, d->second + 1, to_string(lhs(d->first, d->second)),
                        to_string(rhs(d->first, d->second))};
  }
  return c;
}

Check boolean_check(const std::string& id, bool ok, const std::string& detail = {});

/// A printed identity lhs = rhs, optionally with a documented corrected form
/// that is tried only when the printed one fails.
struct Relation {
  struct Alternative {
    Expr lhs;
    Expr rhs;
    std::string note;
  };

  std::string id;
  Expr lhs;
  Expr rhs;
  std::optional<Alternative> alt;
  /// Set when the printed form cannot be evaluated at all (e.g. it names an
  /// undefined symbol); the printed check then fails with this note.
  std::optional<std::string> defect;
};

/// Evaluates an expression into a matrix.
using MatrixEval = std::function<HMatrix(const Expr&)>;

/// Printed form first; on failure the alternative (when allowed), reported as
/// a variant-pass carrying its note. Construction errors are recorded as fails.
Check check_relation(const Relation& rel, const MatrixEval& eval, bool allow_variants = true);

}  // namespace sjord
