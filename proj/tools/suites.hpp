#pragma once

// Verification suites behind `klspecht verify`.  Each suite returns a list of
// named checks; a suite passes when every check does.

#include "klspecht/caps.hpp"
#include "klspecht/heckemod.hpp"
#include "klspecht/specht.hpp"
#include "klspecht/shapes.hpp"
#include "klspecht/weyl.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace klspecht::tools {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::string type;  // "A", "B" or "A+B"
  std::vector<CheckResult> checks;
  /// Suite-specific payload (certified orientation, discovery report, ...).
  nlohmann::json data = nlohmann::json::object();

  bool pass() const;
};

struct SuiteOptions {
  std::vector<WeylKind> kinds{WeylKind::A, WeylKind::B};
  /// Exactly this rank; overrides max_d.
  std::optional<int> d;
  /// Upper rank; unset selects the suite's default range per kind.
  std::optional<int> max_d;
  MapVariant variant = MapVariant::InverseTop;
  Caps caps;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Ranks a suite visits for one kind.
std::vector<int> suite_ranks(const std::string& suite, WeylKind kind, const SuiteOptions& opts);

SuiteResult run_suite(const std::string& suite, const SuiteOptions& opts);

/// First defect found in a KL table (bar invariance, unit diagonal, Bruhat
/// support, degree side, m p = 1), or an empty string.
std::string kl_table_problem(const KLTable& kl);

/// First defect found in a c-matrix (columns against recomputed Specht
/// vectors, unit diagonal, Bruhat-bounded support), or an empty string.
std::string c_matrix_problem(const CMatrix& c, MapVariant variant, const Caps& caps = {});

nlohmann::json to_json(const SuiteResult& r);
std::string to_pretty(const SuiteResult& r);

}  // namespace klspecht::tools
