// klspecht: enumeration, KL tables, Specht/KL change of basis and
// verification suites from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cap exceeded.

#include "suites.hpp"

#include "klspecht/cob.hpp"
#include "klspecht/heckemod.hpp"
#include "klspecht/io.hpp"
#include "klspecht/shapes.hpp"
#include "klspecht/specht.hpp"
#include "klspecht/weyl.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace klspecht;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "pretty";
  std::string output;
  std::uint64_t seed = 1;

  std::string type;
  std::optional<int> d;
  std::optional<int> max_d;
  std::optional<std::string> J;
  std::string shape;
  std::string shape_b;
  std::string side = "positive";
  std::string map_variant = "inverse-top";
  std::string a_variant = "p-version";
  std::string sign_mode = "strict";
  std::string orientation = "as-printed";
  std::string leading = "map-rep";
  std::string profile;
  std::vector<std::string> suites;
  unsigned jobs = 1;

  bool group = false;
  bool compositions = false;
  bool reps = false;
  bool std_tableaux = false;
  bool rstd_tableaux = false;
};

std::vector<int> parse_J(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError("malformed --J '" + text + "'");
    out.push_back(v);
  }
  return out;
}

WeylKind require_kind(const Config& cfg) {
  if (cfg.type.empty()) throw UsageError("--type is required");
  return parse_kind(cfg.type);
}

std::optional<Composition> shape_of(const Config& cfg, WeylKind kind) {
  if (!cfg.shape.empty() && !cfg.shape_b.empty()) throw UsageError("give either --shape or --shape-b");
  std::optional<Composition> out;
  if (!cfg.shape_b.empty()) {
    if (kind != WeylKind::B) throw UsageError("--shape-b needs --type B");
    out = Composition::parse(WeylKind::B, cfg.shape_b);
  } else if (!cfg.shape.empty()) {
    out = Composition::parse(kind, cfg.shape);
  }
  if (out && cfg.d && *cfg.d != out->d())
    throw UsageError("shape " + out->to_string() + " has d = " + std::to_string(out->d()) + ", not " +
                     std::to_string(*cfg.d));
  return out;
}

WeylType type_of(const Config& cfg, WeylKind kind, const std::optional<Composition>& shape) {
  if (shape) return shape->weyl_type();
  if (!cfg.d) throw UsageError("--d is required");
  return WeylType::make(kind, *cfg.d);
}

ConventionProfile profile_of(const Config& cfg) {
  if (!cfg.profile.empty()) return ConventionProfile::parse(cfg.profile);
  return {parse_side(cfg.side),           parse_map_variant(cfg.map_variant), parse_a_variant(cfg.a_variant),
          parse_sign_mode(cfg.sign_mode), parse_orientation(cfg.orientation), parse_leading(cfg.leading)};
}

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("--format " + cfg.format + " is not available for this command");
}

// Rejects tableau enumerations whose size |W| / |W_J| is above the coset cap.
void check_tableau_cap(const Composition& shape, const Caps& caps) {
  const auto type = shape.weyl_type();
  const auto order = type.order();
  const auto cosets = order / parabolic_order(type, composition_to_J(shape));
  if (order == std::numeric_limits<std::uint64_t>::max() || cosets > caps.max_cosets)
    throw CapExceeded("shape " + shape.label() + " has more row-standard tableaux than the coset cap of " +
                      std::to_string(caps.max_cosets));
}

// Writes once: to a sibling temporary file that replaces the target on success.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, target);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// ------------------------------------------------------------- enumerate

int cmd_enumerate(const Config& cfg, const Caps& caps) {
  require_format(cfg, {"json", "csv", "pretty"});
  const WeylKind kind = require_kind(cfg);
  const auto shape = shape_of(cfg, kind);
  const WeylType type = type_of(cfg, kind, shape);
  const MapVariant variant = parse_map_variant(cfg.map_variant);
  std::vector<int> J;
  if (cfg.J) {
    J = parse_J(*cfg.J);
    validate_subset(type, J);
  } else if (shape) {
    J = composition_to_J(*shape);
  }
  if ((cfg.std_tableaux || cfg.rstd_tableaux) && !shape) throw UsageError("--std/--rstd need --shape or --shape-b");
  const bool any = cfg.group || cfg.compositions || cfg.reps || cfg.std_tableaux || cfg.rstd_tableaux;
  if (!any) throw UsageError("choose at least one of --group, --compositions, --reps, --std, --rstd");
  if (shape) check_tableau_cap(*shape, caps);

  json doc = {{"schema_version", kSchemaVersion},
              {"kind", "enumeration"},
              {"type", std::string(1, to_char(type.kind))},
              {"d", type.d}};
  std::ostringstream pretty, csv;

  if (cfg.group) {
    auto group = WeylGroup::get(type, caps);
    json elems = json::array();
    pretty << type.to_string() << ": " << group->size() << " elements\n";
    csv << "window,length\n";
    for (std::size_t k = 0; k < group->size(); ++k) {
      elems.push_back({{"window", to_json(group->element(k))}, {"length", group->length(k)}});
      pretty << "  " << std::left << std::setw(4 * type.d + 4) << group->element(k).to_string() << std::right
             << " l = " << group->length(k) << '\n';
      csv << '"' << group->element(k).to_string() << "\"," << group->length(k) << '\n';
    }
    doc["group"] = {{"order", group->size()}, {"elements", std::move(elems)}};
  }

  if (cfg.compositions) {
    json rows = json::array();
    auto comps = all_compositions(type.kind, type.d);
    pretty << "compositions of " << type.to_string() << ": " << comps.size() << "\n";
    pretty << "  " << std::left << std::setw(20) << "lambda" << std::setw(12) << "J" << "W_lambda" << std::right << '\n';
    csv << "n,lambda,J,young_subgroup\n";
    for (const auto& c : comps) {
      const auto cj = composition_to_J(c);
      rows.push_back({{"n", c.n()},
                      {"parts", c.parts()},
                      {"J", cj},
                      {"young_subgroup", young_subgroup(c)},
                      {"partition", c.is_partition()}});
      pretty << "  " << std::left << std::setw(20) << c.to_string() << std::setw(12) << ("{" + join_ints(cj) + "}")
             << young_subgroup(c) << std::right << '\n';
      csv << c.n() << ",\"" << c.to_string() << "\",\"" << join_ints(cj) << "\"," << young_subgroup(c) << '\n';
    }
    doc["compositions"] = std::move(rows);
  }

  if (cfg.reps) {
    if (!cfg.J && !shape) throw UsageError("--reps needs --J or a shape");
    auto reps = minimal_coset_reps(type, J, caps);
    json elems = json::array();
    pretty << "D_J for J = {" << join_ints(J) << "}: " << reps.size() << " representatives\n";
    csv << "window,length\n";
    for (const auto& w : reps) {
      elems.push_back(to_json(w));
      pretty << "  " << w.to_string() << '\n';
      csv << '"' << w.to_string() << "\"," << length(type, w) << '\n';
    }
    doc["reps"] = {{"J", J}, {"count", reps.size()}, {"elements", std::move(elems)}};
  }

  auto list_tableaux = [&](const char* key, const std::vector<Tableau>& ts) {
    json items = json::array();
    pretty << key << " tableaux of shape " << shape->label() << ": " << ts.size() << "\n";
    csv << "kind,tableau,rep\n";
    for (const auto& t : ts) {
      json item = {{"tableau", to_json(t)}};
      std::string rep;
      if (t.is_row_standard()) {
        rep = tableau_to_coset_rep(t, variant).to_string();
        item["rep"] = to_json(tableau_to_coset_rep(t, variant));
      }
      items.push_back(std::move(item));
      pretty << "  " << std::left << std::setw(28) << t.to_string() << std::right << rep << '\n';
      csv << key << ",\"" << t.to_string() << "\",\"" << rep << "\"\n";
    }
    doc[key] = {{"shape", to_json(*shape)}, {"map_variant", to_string(variant)}, {"count", ts.size()},
                {"tableaux", std::move(items)}};
  };
  if (cfg.rstd_tableaux) list_tableaux("row_standard", enumerate_row_standard(*shape));
  if (cfg.std_tableaux) list_tableaux("standard", enumerate_standard(*shape));

  if (cfg.format == "json") emit(dump(doc), cfg.output);
  else if (cfg.format == "csv") emit(csv.str(), cfg.output);
  else emit(pretty.str(), cfg.output);
  return kExitOk;
}

// -------------------------------------------------------------------- kl

int cmd_kl(const Config& cfg, const Caps& caps) {
  require_format(cfg, {"json", "csv", "pretty"});
  const WeylKind kind = require_kind(cfg);
  const auto shape = shape_of(cfg, kind);
  const WeylType type = type_of(cfg, kind, shape);
  std::vector<int> J = cfg.J ? parse_J(*cfg.J) : (shape ? composition_to_J(*shape) : std::vector<int>{});
  if (!cfg.J && !shape) throw UsageError("--J (possibly '') or a shape is required");
  validate_subset(type, J);
  const KLSide side = parse_side(cfg.side);

  auto ctx = ParabolicContext::create(type, J, caps);
  KLTable table = compute_kl_table(ctx, side);
  if (cfg.format == "json") emit(dump(to_json(table)), cfg.output);
  else if (cfg.format == "csv") emit(to_csv(table), cfg.output);
  else emit(to_pretty(table), cfg.output);
  return kExitOk;
}

// --------------------------------------------------------------- cmatrix

int cmd_cmatrix(const Config& cfg, const Caps& caps) {
  require_format(cfg, {"json", "csv", "pretty"});
  const WeylKind kind = require_kind(cfg);
  const auto shape = shape_of(cfg, kind);
  if (!shape) throw UsageError("--shape or --shape-b is required");
  const MapVariant variant = parse_map_variant(cfg.map_variant);
  check_tableau_cap(*shape, caps);
  CMatrix c = c_matrix(*shape);
  if (cfg.format == "json") {
    emit(dump(to_json(c, variant)), cfg.output);
  } else if (cfg.format == "csv") {
    emit(to_csv(c, variant), cfg.output);
  } else {
    std::ostringstream os;
    os << "c-matrix of " << shape->label() << " (" << c.row_standard.size() << " x " << c.standard.size()
       << "), rows labelled by w_R under " << to_string(variant) << "\n\n";
    for (std::size_t t = 0; t < c.standard.size(); ++t)
      os << "v_" << c.standard[t].to_string() << " = " << c.column(t).to_string() << '\n';
    os << "\nrank " << rational_rank(c.entries) << '\n';
    emit(os.str(), cfg.output);
  }
  return kExitOk;
}

// --------------------------------------------------------------- amatrix

int cmd_amatrix(const Config& cfg, const Caps& caps) {
  require_format(cfg, {"json", "csv", "pretty"});
  const WeylKind kind = require_kind(cfg);
  const auto shape = shape_of(cfg, kind);
  if (!shape) throw UsageError("--shape or --shape-b is required");
  const ConventionProfile profile = profile_of(cfg);
  AMatrix a = a_matrix(*shape, profile, caps);
  CertResult cert = check_unitriangular(a);
  if (cfg.format == "json") {
    emit(dump(to_json(a, cert)), cfg.output);
  } else if (cfg.format == "csv") {
    emit(to_csv(a), cfg.output);
  } else {
    std::ostringstream os;
    os << "a-matrix of " << shape->label() << " under " << profile.name() << "\n";
    if (a.invalid) {
      os << "  map variant invalid: " << *a.invalid << '\n';
    } else {
      os << '\n' << to_csv(a) << '\n';
    }
    os << "unitriangular: " << (cert.pass ? "yes" : "no") << '\n';
    for (const auto& v : cert.violations) os << "  " << to_string(v.kind) << ": " << v.message << '\n';
    emit(os.str(), cfg.output);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Config& cfg, const Caps& caps) {
  require_format(cfg, {"json", "pretty"});
  tools::SuiteOptions opts;
  if (!cfg.type.empty()) opts.kinds = {parse_kind(cfg.type)};
  if (cfg.d && cfg.max_d) throw UsageError("give either --d or --max-d");
  if (cfg.d && *cfg.d < 1) throw UsageError("--d must be positive");
  if (cfg.max_d && *cfg.max_d < 1) throw UsageError("--max-d must be positive");
  opts.d = cfg.d;
  opts.max_d = cfg.max_d;
  opts.variant = parse_map_variant(cfg.map_variant);
  opts.caps = caps;
  opts.seed = cfg.seed;
  opts.jobs = cfg.jobs;

  std::vector<std::string> suites;
  for (const auto& entry : cfg.suites) {
    std::stringstream ss(entry);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name == "all") {
        suites.insert(suites.end(), tools::suite_names().begin(), tools::suite_names().end());
      } else if (!tools::is_suite(name)) {
        throw UsageError("unknown suite '" + name + "'");
      } else {
        suites.push_back(name);
      }
    }
  }
  if (suites.empty()) suites = tools::suite_names();

  // Fail fast on caps before running anything.
  for (const auto& s : suites)
    for (WeylKind k : opts.kinds)
      for (int d : tools::suite_ranks(s, k, opts))
        if (d > 0 && WeylType::make(k, d).order() > caps.max_group_order && s != "table" && s != "hook")
          throw CapExceeded(WeylType::make(k, d).to_string() + " is above the group order cap of " +
                            std::to_string(caps.max_group_order));

  json results = json::array();
  std::string pretty;
  bool pass = true;
  for (const auto& s : suites) {
    tools::SuiteResult r = tools::run_suite(s, opts);
    pass = pass && r.pass();
    results.push_back(tools::to_json(r));
    pretty += tools::to_pretty(r);
  }
  json doc = {{"schema_version", kSchemaVersion},
              {"kind", "verify"},
              {"seed", cfg.seed},
              {"pass", pass},
              {"suites", std::move(results)}};
  if (cfg.format == "json") emit(dump(doc), cfg.output);
  else emit(pretty + (pass ? "verify: PASS\n" : "verify: FAIL\n"), cfg.output);
  return pass ? kExitOk : kExitVerifyFailed;
}

void add_selectors(CLI::App* sub, Config& cfg, bool with_shape, bool with_J) {
  sub->add_option("--type", cfg.type, "Weyl type: A or B");
  sub->add_option("--d", cfg.d, "rank parameter (number of positive points)");
  if (with_J) sub->add_option("--J", cfg.J, "generator subset, e.g. 1,2 (empty for none)");
  if (with_shape) {
    sub->add_option("--shape", cfg.shape, "parts, e.g. 2,2 (type B: full list or half:center)");
    sub->add_option("--shape-b", cfg.shape_b, "type B shape as half:center, e.g. 2:3 for (2,3,2)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Weyl groups, parabolic KL bases and Specht vectors"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--output,-o", cfg.output, "write to this file instead of stdout");
  app.add_option("--seed", cfg.seed, "seed for sampled checks");

  auto* enumerate = app.add_subcommand("enumerate", "list group elements, compositions, coset reps or tableaux");
  add_selectors(enumerate, cfg, true, true);
  enumerate->add_flag("--group", cfg.group, "all group elements with lengths");
  enumerate->add_flag("--compositions", cfg.compositions, "all compositions with J and Young subgroup");
  enumerate->add_flag("--reps", cfg.reps, "minimal coset representatives D_J");
  enumerate->add_flag("--std", cfg.std_tableaux, "standard tableaux of the shape");
  enumerate->add_flag("--rstd", cfg.rstd_tableaux, "row-standard tableaux of the shape");
  enumerate->add_option("--map-variant", cfg.map_variant, "tableau reading map");

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig m and p tables of M^J");
  add_selectors(kl, cfg, true, true);
  kl->add_option("--side", cfg.side, "positive or negative");

  auto* cmatrix = app.add_subcommand("cmatrix", "Specht vectors in tabloid coordinates");
  add_selectors(cmatrix, cfg, true, false);
  cmatrix->add_option("--map-variant", cfg.map_variant, "tableau reading map");

  auto* amatrix = app.add_subcommand("amatrix", "Specht vectors against the KL basis under one convention profile");
  add_selectors(amatrix, cfg, true, false);
  amatrix->add_option("--profile", cfg.profile, "full profile name side/map/a/sign/orientation/leading");
  amatrix->add_option("--side", cfg.side, "positive or negative");
  amatrix->add_option("--map-variant", cfg.map_variant, "inverse-top, inverse-bottom, direct-top, direct-bottom");
  amatrix->add_option("--a-variant", cfg.a_variant, "p-version or m-version");
  amatrix->add_option("--sign-mode", cfg.sign_mode, "strict or up-to-sign");
  amatrix->add_option("--orientation", cfg.orientation, "as-printed or reversed");
  amatrix->add_option("--leading", cfg.leading, "map-rep or support-extremal");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suites, "lengths, table, hook, bijection, kl, module, specht, crt, theorem1, all");
  verify->add_option("--type", cfg.type, "restrict to type A or B");
  verify->add_option("--d", cfg.d, "check exactly this rank");
  verify->add_option("--max-d", cfg.max_d, "check ranks 1..max-d");
  verify->add_option("--map-variant", cfg.map_variant, "tableau reading map");
  verify->add_option("--jobs", cfg.jobs, "worker threads for theorem1 (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Caps caps = Caps::from_env();
    if (*enumerate) return cmd_enumerate(cfg, caps);
    if (*kl) return cmd_kl(cfg, caps);
    if (*cmatrix) return cmd_cmatrix(cfg, caps);
    if (*amatrix) return cmd_amatrix(cfg, caps);
    if (*verify) return cmd_verify(cfg, caps);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
