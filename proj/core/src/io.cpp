#include "klspecht/io.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

namespace klspecht {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer coefficient");
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

json to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = integer_to_json(c);
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("a polynomial is a JSON object");
  LaurentPoly out;
  for (const auto& [key, value] : j.items()) out += LaurentPoly::monomial(integer_from_json(value), std::stoi(key));
  return out;
}

json to_json(const SignedPerm& w) { return json(std::vector<int>(w.window().begin(), w.window().end())); }

SignedPerm signed_perm_from_json(const json& j) { return SignedPerm(j.get<std::vector<int>>()); }

json to_json(const Composition& c) {
  return {{"type", std::string(1, to_char(c.kind()))}, {"parts", c.parts()}, {"d", c.d()}};
}

json to_json(const Tableau& t) { return {{"shape", t.shape().parts()}, {"rows", t.rows()}}; }

Tableau tableau_from_json(WeylKind kind, const json& j) {
  auto parts = j.at("shape").get<std::vector<int>>();
  auto shape = kind == WeylKind::A ? Composition::type_a(parts) : Composition::type_b(parts);
  return Tableau(shape, j.at("rows").get<std::vector<std::vector<int>>>());
}

namespace {

json matrix_to_json(const KLTable::Matrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json jrow = json::array();
    for (const auto& p : row) jrow.push_back(to_json(p));
    out.push_back(std::move(jrow));
  }
  return out;
}

}  // namespace

json to_json(const KLTable& kl) {
  const auto& ctx = kl.context();
  json reps = json::array();
  for (const auto& w : ctx.reps()) reps.push_back(to_json(w));
  return {{"schema_version", kSchemaVersion},
          {"kind", "kl_table"},
          {"type", std::string(1, to_char(ctx.type().kind))},
          {"d", ctx.type().d},
          {"J", ctx.J()},
          {"side", to_string(kl.side())},
          {"reps", std::move(reps)},
          {"m", matrix_to_json(kl.m())},
          {"p", kl.has_p() ? matrix_to_json(kl.p()) : json::array()}};
}

std::string to_csv(const KLTable& kl) {
  const auto& ctx = kl.context();
  std::ostringstream os;
  os << "x,w,m,p\n";
  for (std::size_t x = 0; x < kl.size(); ++x)
    for (std::size_t w = 0; w < kl.size(); ++w) {
      os << csv_quote(ctx.rep(x).to_string()) << ',' << csv_quote(ctx.rep(w).to_string()) << ','
         << kl.m_at(x, w).to_string() << ',' << (kl.has_p() ? kl.p_at(x, w).to_string() : "") << '\n';
    }
  return os.str();
}

std::string to_pretty(const KLTable& kl) {
  const auto& ctx = kl.context();
  std::ostringstream os;
  os << "type " << ctx.type().to_string() << "  J = {";
  for (std::size_t i = 0; i < ctx.J().size(); ++i) os << (i ? "," : "") << ctx.J()[i];
  os << "}  side = " << to_string(kl.side()) << "  |D_J| = " << ctx.size() << "\n\n";
  for (std::size_t w = 0; w < kl.size(); ++w) {
    os << "KL(" << ctx.rep(w).to_string() << ") = " << kl.kl_element(w).to_string() << '\n';
  }
  if (kl.has_p()) {
    os << '\n';
    for (std::size_t w = 0; w < kl.size(); ++w) {
      os << "M_" << ctx.rep(w).to_string() << " =";
      bool first = true;
      for (std::size_t x = 0; x <= w; ++x) {
        const auto& c = kl.p_at(x, w);
        if (c.is_zero()) continue;
        os << (first ? " " : " + ") << '(' << c << ")KL(" << ctx.rep(x).to_string() << ')';
        first = false;
      }
      os << '\n';
    }
  }
  return os.str();
}

json to_json(const CMatrix& c, MapVariant variant) {
  json rows = json::array();
  for (const auto& r : c.row_standard)
    rows.push_back({{"tableau", to_json(r)}, {"rep", to_json(tableau_to_coset_rep(r, variant))}});
  json cols = json::array();
  for (const auto& t : c.standard)
    cols.push_back({{"tableau", to_json(t)}, {"rep", to_json(tableau_to_coset_rep(t, variant))}});
  return {{"schema_version", kSchemaVersion},
          {"kind", "c_matrix"},
          {"shape", to_json(c.shape)},
          {"map_variant", to_string(variant)},
          {"rows", std::move(rows)},
          {"columns", std::move(cols)},
          {"entries", c.entries}};
}

std::string to_csv(const CMatrix& c, MapVariant variant) {
  std::ostringstream os;
  os << "R,w_R";
  for (const auto& t : c.standard) os << ',' << csv_quote(t.to_string());
  os << '\n';
  for (std::size_t r = 0; r < c.row_standard.size(); ++r) {
    os << csv_quote(c.row_standard[r].to_string()) << ','
       << csv_quote(tableau_to_coset_rep(c.row_standard[r], variant).to_string());
    for (std::size_t t = 0; t < c.standard.size(); ++t) os << ',' << c.at(r, t);
    os << '\n';
  }
  return os.str();
}

json to_json(const ConventionProfile& p) {
  return {{"name", p.name()},
          {"kl_side", to_string(p.kl_side)},
          {"map_variant", to_string(p.map_variant)},
          {"a_variant", to_string(p.a_variant)},
          {"sign_mode", to_string(p.sign_mode)},
          {"orientation", to_string(p.orientation)},
          {"leading", to_string(p.leading)}};
}

json to_json(const Violation& v, const AMatrix* context) {
  json out = {{"kind", to_string(v.kind)}, {"column", v.column}, {"value", integer_to_json(v.value)},
              {"message", v.message}};
  if (v.row) {
    out["row"] = *v.row;
    if (context && *v.row < context->reps.size()) out["x"] = to_json(context->reps[*v.row]);
  }
  return out;
}

json to_json(const AMatrix& a, const CertResult& cert) {
  json reps = json::array();
  for (const auto& w : a.reps) reps.push_back(to_json(w));
  json cols = json::array();
  for (std::size_t t = 0; t < a.standard.size(); ++t) {
    json col = {{"tableau", to_json(a.standard[t])}};
    if (t < a.map_reps.size()) col["w_T"] = to_json(a.reps[a.map_reps[t]]);
    if (t < cert.leading.size() && cert.leading[t]) col["leading"] = to_json(a.reps[*cert.leading[t]]);
    cols.push_back(std::move(col));
  }
  json entries = json::array();
  for (const auto& row : a.entries) {
    json jrow = json::array();
    for (const auto& v : row) jrow.push_back(integer_to_json(v));
    entries.push_back(std::move(jrow));
  }
  json violations = json::array();
  for (const auto& v : cert.violations) violations.push_back(to_json(v, &a));
  json out = {{"schema_version", kSchemaVersion},
              {"kind", "a_matrix"},
              {"shape", to_json(a.shape)},
              {"J", a.J},
              {"profile", to_json(a.profile)},
              {"reps", std::move(reps)},
              {"columns", std::move(cols)},
              {"entries", std::move(entries)},
              {"pass", cert.pass},
              {"violations", std::move(violations)}};
  if (a.invalid) out["invalid"] = *a.invalid;
  return out;
}

std::string to_csv(const AMatrix& a) {
  std::ostringstream os;
  os << "x";
  for (const auto& t : a.standard) os << ',' << csv_quote(t.to_string());
  os << '\n';
  for (std::size_t x = 0; x < a.entries.size(); ++x) {
    os << csv_quote(a.reps[x].to_string());
    for (const auto& v : a.entries[x]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

json to_json(const CrtCertificate& cert) {
  json certified = json::array();
  for (auto o : cert.certified()) certified.push_back(to_string(o));
  return {{"type", std::string(1, to_char(cert.kind))},
          {"map_variant", to_string(cert.variant)},
          {"shapes", cert.shapes},
          {"unit_diagonal", cert.unit_diagonal},
          {"holds_as_printed", cert.holds_as_printed},
          {"holds_reversed", cert.holds_reversed},
          {"certified", std::move(certified)},
          {"counterexamples", cert.counterexamples}};
}

json to_json(const DiscoveryReport& report, bool include_failures) {
  json profiles = json::array();
  for (const auto& p : report.profiles) {
    json passed = json::array(), failed = json::array();
    json diagonals = json::object();
    json violations = json::object();
    for (const auto& inst : p.instances) {
      (inst.pass ? passed : failed).push_back(inst.shape);
      diagonals[inst.shape] = inst.diagonal;
      if (include_failures && !inst.violations.empty()) {
        json list = json::array();
        for (std::size_t k = 0; k < inst.violations.size() && k < 4; ++k) list.push_back(to_json(inst.violations[k]));
        violations[inst.shape] = std::move(list);
      }
    }
    json jp = {{"profile", to_json(p.profile)},
               {"passes_all", p.passes_all()},
               {"crt_consistent", p.crt_all()},
               {"passed", std::move(passed)},
               {"failed", std::move(failed)},
               {"diagonals", std::move(diagonals)}};
    if (include_failures) jp["violations"] = std::move(violations);
    profiles.push_back(std::move(jp));
  }
  json surviving = json::array();
  for (const auto& p : report.ranked_survivors()) surviving.push_back(p.name());
  json crt = json::array();
  for (const auto& c : report.crt) crt.push_back(to_json(c));
  auto preferred = report.preferred();
  return {{"schema_version", kSchemaVersion},
          {"kind", "discovery"},
          {"instances", report.instances},
          {"surviving", std::move(surviving)},
          {"preferred", preferred ? json(preferred->name()) : json(nullptr)},
          {"crt", std::move(crt)},
          {"profiles", std::move(profiles)}};
}

std::string to_summary(const DiscoveryReport& report) {
  std::ostringstream os;
  const std::size_t total = report.instances.size();
  os << "instances: " << total << "\n\n";
  os << std::left << std::setw(64) << "profile" << std::right << std::setw(8) << "passed" << std::setw(6) << "crt"
     << '\n';
  for (const auto& p : report.profiles) {
    os << std::left << std::setw(64) << p.profile.name() << std::right << std::setw(4) << p.pass_count() << '/'
       << std::setw(3) << std::left << total << std::right << std::setw(6) << (p.crt_all() ? "yes" : "no")
       << (p.passes_all() ? "  *" : "") << '\n';
  }
  os << "\nsurviving profiles:";
  auto ranked = report.ranked_survivors();
  if (ranked.empty()) os << " none";
  os << '\n';
  for (const auto& p : ranked) os << "  " << p.name() << '\n';
  for (const auto& c : report.crt) {
    os << "CRT orientation, type " << to_char(c.kind) << ", " << to_string(c.variant) << ": ";
    auto cert = c.certified();
    if (cert.empty()) os << "none";
    for (std::size_t i = 0; i < cert.size(); ++i) os << (i ? ", " : "") << to_string(cert[i]);
    os << (c.unit_diagonal ? "" : " (diagonal not unit)") << '\n';
  }
  return os.str();
}

}  // namespace klspecht
