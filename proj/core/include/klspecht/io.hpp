#pragma once

// JSON, CSV and plain-text renderings of the library's values.  Every JSON
// document produced here carries "schema_version".

#include "klspecht/cob.hpp"
#include "klspecht/heckemod.hpp"
#include "klspecht/laurent.hpp"
#include "klspecht/shapes.hpp"
#include "klspecht/specht.hpp"
#include "klspecht/weyl.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace klspecht {

inline constexpr int kSchemaVersion = 1;

/// {"exponent": coefficient}; coefficients beyond 64 bits become strings.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SignedPerm& w);
SignedPerm signed_perm_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Composition& c);
/// {"shape": [...], "rows": [[...], ...]}
nlohmann::json to_json(const Tableau& t);
Tableau tableau_from_json(WeylKind kind, const nlohmann::json& j);

nlohmann::json to_json(const KLTable& kl);
/// One row per (x, w) pair: x,w,m,p.
std::string to_csv(const KLTable& kl);
std::string to_pretty(const KLTable& kl);

/// Rows labelled by tableau and w_R under the given reading map.
nlohmann::json to_json(const CMatrix& c, MapVariant variant);
std::string to_csv(const CMatrix& c, MapVariant variant);

nlohmann::json to_json(const ConventionProfile& p);
nlohmann::json to_json(const Violation& v, const AMatrix* context = nullptr);
nlohmann::json to_json(const AMatrix& a, const CertResult& cert);
std::string to_csv(const AMatrix& a);

nlohmann::json to_json(const CrtCertificate& cert);
nlohmann::json to_json(const DiscoveryReport& report, bool include_failures = false);
/// Fixed-width table: one line per profile with its pass count.
std::string to_summary(const DiscoveryReport& report);

}  // namespace klspecht
