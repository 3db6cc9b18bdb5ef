#include "sjord/runner.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "sjord/rmatrix.hpp"

namespace sjord {

namespace {

const std::vector<std::string> kSuites{"classical", "deformed", "hopf", "rmatrix", "contraction"};

int tensor_power_of(const std::string& rep) {
  if (rep == "fund") return 1;
  if (rep == "fund2") return 2;
  if (rep == "fund3") return 3;
  throw ConfigError("unknown representation " + rep);
}

std::vector<std::string> expand(const std::vector<std::string>& suites) {
  std::set<std::string> wanted;
  for (const auto& s : suites) {
    if (s == "all") {
      wanted.insert(kSuites.begin(), kSuites.end());
    } else if (std::find(kSuites.begin(), kSuites.end(), s) != kSuites.end()) {
      wanted.insert(s);
    } else {
      throw ConfigError("unknown suite " + s);
    }
  }
  std::vector<std::string> ordered;
  for (const auto& s : kSuites)
    if (wanted.count(s)) ordered.push_back(s);
  return ordered;
}

bool explicitly(const RunConfig& cfg, const std::string& suite) {
  return std::find(cfg.suites.begin(), cfg.suites.end(), suite) != cfg.suites.end();
}

GeneratorTable classical_rep(int n, const std::string& rep) {
  const GeneratorTable fund = classical_table(n);
  const int k = tensor_power_of(rep);
  return k == 1 ? fund : classical_tensor_rep(fund, k);
}

void run_classical(const RunConfig& cfg, const std::string& rep, RunResult& out) {
  const GeneratorTable t = classical_rep(cfg.n, rep);
  out.reports.push_back(classical_relations_suite(t, cfg.typo_variants));
  out.reports.push_back(classical_automorphism_check(t, cfg.typo_variants));
  if (rep == "fund" && cfg.n <= 3) out.reports.push_back(tensor_bracket_check(t, 2));
}

void run_deformed(const RunConfig& cfg, const std::string& rep, bool first_rep, RunResult& out) {
  const DeformedTable dt = deformed_rep(cfg.n, rep);
  const bool printed_lists = cfg.n == 2 || cfg.n == 3;
  if (printed_lists && first_rep) out.reports.push_back(specialization_crosscheck(cfg.n, cfg.typo_variants));
  out.reports.push_back(basic_identities(dt));
  if (printed_lists) {
    out.reports.push_back(deformed_relations_suite(dt, cfg.typo_variants));
    out.reports.push_back(automorphism_Phi_check(dt, cfg.typo_variants));
  } else {
    out.reports.push_back(sl2_sector_suite(dt));
  }
  out.reports.push_back(deformed_classical_limit(dt));
  out.artifacts.push_back(
      {"commutator-table-n" + std::to_string(cfg.n) + "-" + rep + ".json", commutator_table(dt).dump(1) + "\n"});
}

void run_hopf(const RunConfig& cfg, const std::string& rep, bool first_rep, RunResult& out) {
  if (cfg.n == 2 && first_rep) out.reports.push_back(coproduct_crosscheck(cfg.typo_variants));
  const DeformedTable dt = deformed_rep(cfg.n, rep);
  out.reports.push_back(hopf_axiom_suite(dt, cfg.typo_variants, cfg.max_dim));
}

}  // namespace

bool RunResult::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
}

std::size_t max_dim_from_env() {
  const char* v = std::getenv("SJORD_MAX_DIM");
  if (v == nullptr || *v == '\0') return 216;
  char* end = nullptr;
  const unsigned long long d = std::strtoull(v, &end, 10);
  if (*end != '\0' || d == 0) throw ConfigError(std::string("malformed SJORD_MAX_DIM: ") + v);
  return static_cast<std::size_t>(d);
}

void validate(const RunConfig& cfg) {
  const auto suites = expand(cfg.suites);
  if (cfg.n < 2 || cfg.n > 5) {
    if (std::find(suites.begin(), suites.end(), "deformed") != suites.end())
      throw ConfigError("unsupported N for printed relation list");
    throw ConfigError("N must be in 2..5, got " + std::to_string(cfg.n));
  }
  if (explicitly(cfg, "contraction") && cfg.n != 2)
    throw ConfigError("unsupported N for the contraction suite (R_q is displayed for N = 2)");
  if (cfg.reps.empty()) throw ConfigError("no representation given");
  for (const auto& rep : cfg.reps) {
    const int k = tensor_power_of(rep);
    std::size_t dim = 1;
    for (int i = 0; i < k; ++i) dim *= static_cast<std::size_t>(cfg.n + 1);
    if (dim > cfg.max_dim)
      throw ConfigError(rep + " has dimension " + std::to_string(dim) + ", above SJORD_MAX_DIM = " +
                        std::to_string(cfg.max_dim));
    if (k == 3)
      for (const auto& s : suites)
        if (s == "classical" || s == "deformed")
          throw ConfigError("fund3 is only used by suites with triple tensor products (hopf, rmatrix)");
  }
}

RunResult run(const RunConfig& cfg) {
  validate(cfg);
  RunResult out;
  for (const auto& suite : expand(cfg.suites)) {
    if (suite == "rmatrix") {
      out.reports.push_back(rmatrix_suite(cfg.n, cfg.typo_variants));
      continue;
    }
    if (suite == "contraction") {
      if (cfg.n == 2) out.reports.push_back(contraction_suite(cfg.n, cfg.typo_variants));
      continue;
    }
    bool first = true;
    for (const auto& rep : cfg.reps) {
      if (suite == "classical") run_classical(cfg, rep, out);
      if (suite == "deformed") run_deformed(cfg, rep, first, out);
      if (suite == "hopf") run_hopf(cfg, rep, first, out);
      first = false;
    }
  }
  return out;
}

std::string reports_json(const std::vector<CheckReport>& reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(1) + "\n";
}

std::string reports_text(const std::vector<CheckReport>& reports) {
  std::string s;
  for (const auto& r : reports) s += to_text(r);
  return s;
}

namespace {

template <class S>
std::string dump_any(const GradedMatrix<S>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!is_zero(m(i, j))) os << i + 1 << ' ' << j + 1 << ' ' << to_string(m(i, j)) << '\n';
  return os.str();
}

}  // namespace

std::string dump_matrix(const HMatrix& m) { return dump_any(m); }
std::string dump_matrix(const QMatrix& m) { return dump_any(m); }

Artifact dump_object(const std::string& object, int n, bool h0) {
  if (n < 2 || n > 5) throw ConfigError("N must be in 2..5, got " + std::to_string(n));
  const std::string base = object + "-n" + std::to_string(n) + (h0 ? "-h0" : "");
  auto matrix = [&](const HMatrix& m) { return Artifact{base + ".txt", dump_matrix(h0 ? eval_h0(m) : m)}; };
  if (object == "rq-fund") {
    if (n != 2) throw ConfigError("rq-fund is displayed for N = 2 only");
    return {base + ".txt", dump_matrix(rq_fundamental(2))};
  }
  if (object == "rh-contracted") {
    if (n == 2) return matrix(contract(rq_fundamental(2), contraction_transform(2)));
    return matrix(contract(rq_standard(n, -QRat::q_pow(-1)), contraction_transform(n)));
  }
  if (object == "rh-universal") return matrix(universal_rh_eval(deformed_rep(n, "fund")));
  if (object == "l-operator") {
    if (n > 3) throw ConfigError("l-operator is displayed for N = 2, 3 only");
    const LOperator l = l_operator(n, n == 3);
    std::ostringstream os;
    for (std::size_t a = 0; a < l.dim(); ++a)
      for (std::size_t b = 0; b < l.dim(); ++b)
        if (!l.entries[a][b].is_scalar_zero()) os << a + 1 << ' ' << b + 1 << ' ' << l.entries[a][b].str() << '\n';
    return {base + ".txt", os.str()};
  }
  if (object == "commutator-table")
    return {base + ".json", commutator_table(deformed_rep(n, "fund")).dump(1) + "\n"};
  throw ConfigError("unknown object " + object);
}

}  // namespace sjord
