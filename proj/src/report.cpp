#include "sjord/report.hpp"

#include <sstream>

namespace sjord {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::VariantPass:
      return "variant-pass";
    case Status::Fail:
      return "fail";
  }
  return "fail";
}

bool CheckReport::passed() const {
  for (const auto& c : checks)
    if (!c.ok()) return false;
  return true;
}

std::size_t CheckReport::count(Status s) const {
  std::size_t k = 0;
  for (const auto& c : checks) k += c.status == s;
  return k;
}

void CheckReport::absorb(const CheckReport& other, const std::string& prefix) {
  for (auto c : other.checks) {
    c.id = prefix + c.id;
    checks.push_back(std::move(c));
  }
  for (const auto& n : other.notes) notes.push_back(n);
}

const Check* CheckReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["n"] = r.n;
  j["rep"] = r.rep;
  if (!r.notes.empty()) j["notes"] = r.notes;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["status"] = to_string(c.status);
    cj["variant"] = c.variant ? nlohmann::ordered_json(*c.variant) : nlohmann::ordered_json(nullptr);
    if (c.witness) {
      cj["witness"] = {{"row", c.witness->row}, {"col", c.witness->col}, {"lhs", c.witness->lhs}, {"rhs", c.witness->rhs}};
    } else {
      cj["witness"] = nullptr;
    }
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string to_text(const CheckReport& r) {
  std::ostringstream os;
  os << "== " << r.suite << " (N=" << r.n << ", " << r.rep << "): " << r.count(Status::Pass) << " pass, "
     << r.count(Status::VariantPass) << " variant-pass, " << r.count(Status::Fail) << " fail\n";
  for (const auto& n : r.notes) os << "   note: " << n << '\n';
  for (const auto& c : r.checks) {
    os << "  [" << to_string(c.status) << "] " << c.id;
    if (c.variant) os << "  {" << *c.variant << "}";
    if (c.witness)
      os << "  at (" << c.witness->row << "," << c.witness->col << "): lhs=" << c.witness->lhs
         << " rhs=" << c.witness->rhs;
    os << '\n';
  }
  return os.str();
}

Check boolean_check(const std::string& id, bool ok, const std::string& detail) {
  Check c{id};
  if (!ok) {
    c.status = Status::Fail;
    if (!detail.empty()) c.variant = detail;
  }
  return c;
}

namespace {

Check try_identity(const std::string& id, const Expr& lhs, const Expr& rhs, const MatrixEval& eval) {
  try {
    return compare(id, eval(lhs), eval(rhs));
  } catch (const Error& e) {
    Check c{id, Status::Fail};
    c.variant = std::string("error: ") + e.what();
    return c;
  }
}

}  // namespace

Check check_relation(const Relation& rel, const MatrixEval& eval, bool allow_variants) {
  Check printed{rel.id};
  if (rel.defect) {
    printed.status = Status::Fail;
    printed.variant = *rel.defect;
  } else {
    printed = try_identity(rel.id, rel.lhs, rel.rhs, eval);
  }
  if (printed.ok() || !rel.alt || !allow_variants) return printed;
  Check alt = try_identity(rel.id, rel.alt->lhs, rel.alt->rhs, eval);
  if (!alt.ok()) {
    printed.variant = "corrected form also fails: " + rel.alt->note;
    if (!printed.witness) printed.witness = alt.witness;
    return printed;
  }
  alt.status = Status::VariantPass;
  alt.variant = rel.alt->note;
  return alt;
}

}  // namespace sjord
