#include "suites.hpp"

#include "klspecht/cob.hpp"
#include "klspecht/heckemod.hpp"
#include "klspecht/io.hpp"
#include "klspecht/specht.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace klspecht::tools {

using nlohmann::json;

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lengths", "table",  "hook", "bijection", "kl",
                                              "module",  "specht", "crt",  "theorem1"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

int default_max_d(const std::string& suite, WeylKind kind) {
  const bool a = kind == WeylKind::A;
  if (suite == "lengths") return a ? 6 : 4;
  if (suite == "bijection" || suite == "crt" || suite == "specht") return a ? 5 : 3;
  if (suite == "kl" || suite == "module") return a ? 4 : 3;
  if (suite == "theorem1") return a ? 4 : 2;
  return 0;
}

std::string kinds_label(const std::vector<WeylKind>& kinds) {
  std::string out;
  for (WeylKind k : kinds) out += (out.empty() ? "" : "+") + std::string(1, to_char(k));
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::vector<std::vector<int>> all_subsets(const std::vector<int>& gens) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
    std::vector<int> J;
    for (std::size_t k = 0; k < gens.size(); ++k)
      if ((mask >> k) & 1) J.push_back(gens[k]);
    out.push_back(std::move(J));
  }
  return out;
}

std::vector<Composition> partitions_in(WeylKind kind, const std::vector<int>& ranks) {
  std::vector<Composition> out;
  for (int d : ranks) {
    auto ps = partitions(kind, d);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int k = 2; k <= n; ++k) out *= static_cast<std::uint64_t>(k);
  return out;
}

// Hook length formula d! / prod hooks, type A.
std::uint64_t hook_count(const std::vector<int>& parts) {
  const int d = std::accumulate(parts.begin(), parts.end(), 0);
  std::uint64_t hooks = 1;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) {
      int arm = parts[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < parts.size() && parts[k] > j; ++k) ++leg;
      hooks *= static_cast<std::uint64_t>(arm + leg + 1);
    }
  return factorial(d) / hooks;
}

// ---------------------------------------------------------------- lengths

void suite_lengths(WeylKind kind, int d, const SuiteOptions& opts, SuiteResult& out) {
  const auto type = WeylType::make(kind, d);
  auto group = WeylGroup::get(type, opts.caps);
  const std::string tag = type.to_string();

  const std::uint64_t expected = kind == WeylKind::A ? factorial(d) : factorial(d) << d;
  out.checks.push_back({tag + " order", group->size() == expected,
                        std::to_string(group->size()) + " elements, expected " + std::to_string(expected)});

  // Cayley graph distances from the identity.
  std::unordered_map<SignedPerm, int, SignedPermHash> dist;
  std::deque<SignedPerm> queue{SignedPerm::identity(d)};
  dist.emplace(queue.front(), 0);
  while (!queue.empty()) {
    SignedPerm cur = queue.front();
    queue.pop_front();
    for (int i : type.generator_indices()) {
      SignedPerm next = cur * generator(type, i);
      if (dist.emplace(next, dist.at(cur) + 1).second) queue.push_back(next);
    }
  }
  std::size_t mismatches = 0;
  std::string first;
  for (const auto& [w, dw] : dist)
    if (length(type, w) != dw && mismatches++ == 0)
      first = w.to_string() + ": formula " + std::to_string(length(type, w)) + ", BFS " + std::to_string(dw);
  out.checks.push_back({tag + " length formula = BFS distance", mismatches == 0 && dist.size() == group->size(),
                        mismatches ? first : std::to_string(dist.size()) + " elements agree"});

  bool parity = true;
  for (std::size_t k = 0; k < group->size(); ++k)
    for (int i : type.generator_indices())
      parity = parity && std::abs(group->length(group->right_multiply(k, i)) - group->length(k)) == 1;
  out.checks.push_back({tag + " l(ws) = l(w) +- 1", parity, ""});

  // Subword criterion: x <= w iff x is a subexpression of a reduced word of w.
  std::size_t bruhat_bad = 0;
  for (std::size_t w = 0; w < group->size(); ++w) {
    boost::dynamic_bitset<> sub(group->size());
    sub.set(group->identity_index());
    for (int i : reduced_word(type, group->element(w))) {
      auto next = sub;
      for (std::size_t u = sub.find_first(); u != boost::dynamic_bitset<>::npos; u = sub.find_next(u))
        next.set(group->right_multiply(u, i));
      sub = std::move(next);
    }
    for (std::size_t x = 0; x < group->size(); ++x)
      if (sub.test(x) != group->bruhat_leq(x, w)) ++bruhat_bad;
  }
  out.checks.push_back({tag + " Bruhat order = subword order", bruhat_bad == 0,
                        bruhat_bad ? std::to_string(bruhat_bad) + " pairs disagree" : ""});
}

// ------------------------------------------------------------------ table

void suite_table(SuiteResult& out) {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> expected{
      {{7}, {0, 1, 2}},       {{1, 5, 1}, {0, 1}},       {{2, 3, 2}, {0, 2}},       {{3, 1, 3}, {1, 2}},
      {{1, 1, 3, 1, 1}, {0}}, {{1, 2, 1, 2, 1}, {1}},    {{2, 1, 1, 1, 2}, {2}},    {{1, 1, 1, 1, 1, 1, 1}, {}}};
  std::vector<std::pair<std::vector<int>, std::vector<int>>> got;
  json rows = json::array();
  for (const auto& c : all_compositions(WeylKind::B, 3)) {
    got.emplace_back(c.parts(), composition_to_J(c));
    rows.push_back({{"parts", c.parts()}, {"J", composition_to_J(c)}, {"young_subgroup", young_subgroup(c)}});
  }
  out.checks.push_back({"type B, d = 3: eight (composition, J) rows", got == expected,
                        std::to_string(got.size()) + " rows"});
  out.data["rows"] = std::move(rows);
}

// ------------------------------------------------------------------- hook

void suite_hook(SuiteResult& out) {
  auto catalan = [](int m) { return factorial(2 * m) / (factorial(m) * factorial(m + 1)); };
  for (int m = 2; m <= 5; ++m) {
    auto n = enumerate_standard(Composition::type_a({m, m})).size();
    out.checks.push_back({"|Std(" + std::to_string(m) + "," + std::to_string(m) + ")|", n == catalan(m),
                          std::to_string(n)});
  }
  for (int m = 1; m <= 3; ++m) {
    std::uint64_t want = 2 * factorial(3 * m) / (factorial(m) * factorial(m + 1) * factorial(m + 2));
    auto n = enumerate_standard(Composition::type_a({m, m, m})).size();
    out.checks.push_back({"|Std(" + std::to_string(m) + "," + std::to_string(m) + "," + std::to_string(m) + ")|",
                          n == want, std::to_string(n)});
  }
  for (int d = 1; d <= 6; ++d)
    for (const auto& p : partitions(WeylKind::A, d)) {
      auto n = enumerate_standard(p).size();
      auto want = hook_count(p.parts());
      out.checks.push_back({"hook length formula " + p.label(), n == want,
                            std::to_string(n) + " vs " + std::to_string(want)});
    }
}

// -------------------------------------------------------------- bijection

void suite_bijection(WeylKind kind, const std::vector<int>& ranks, const SuiteOptions& opts, SuiteResult& out) {
  for (const auto& shape : partitions_in(kind, ranks)) {
    BijectionCheck b = check_bijection(shape, opts.variant, opts.caps);
    const auto type = shape.weyl_type();
    const auto J = composition_to_J(shape);
    const bool orbit = b.row_standard * parabolic_order(type, J) == type.order();
    std::ostringstream detail;
    detail << "|rStd| = " << b.row_standard << ", |D_J| = " << b.cosets << ", images in D_J " << b.images_in_cosets
           << ", distinct " << b.distinct_images;
    out.checks.push_back({shape.label() + " " + to_string(opts.variant), b.bijective() && orbit, detail.str()});
  }
}

// --------------------------------------------------------------------- kl

std::vector<int> random_reduced_word(WeylType type, const SignedPerm& w, std::mt19937_64& rng) {
  std::vector<int> reversed;
  SignedPerm cur = w;
  for (;;) {
    std::vector<int> descents;
    for (int i : type.generator_indices())
      if (has_right_descent(type, cur, i)) descents.push_back(i);
    if (descents.empty()) break;
    int i = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
    reversed.push_back(i);
    cur = cur * generator(type, i);
  }
  return {reversed.rbegin(), reversed.rend()};
}

void suite_kl(WeylKind kind, int d, const SuiteOptions& opts, SuiteResult& out) {
  const auto type = WeylType::make(kind, d);
  std::mt19937_64 rng(opts.seed);
  for (const auto& J : all_subsets(type.generator_indices())) {
    auto ctx = ParabolicContext::create(type, J, opts.caps);
    for (KLSide side : {KLSide::Positive, KLSide::Negative}) {
      std::string problem = kl_table_problem(compute_kl_table(ctx, side));
      out.checks.push_back({type.to_string() + " J={" + join(J) + "} " + to_string(side), problem.empty(),
                            problem.empty() ? std::to_string(ctx->size()) + " cosets" : problem});
    }
    // bar(M_w) along a random reduced word agrees with the greedy word.
    bool word_free = true;
    for (std::size_t r = 0; r < ctx->size(); ++r) {
      auto word = random_reduced_word(type, ctx->rep(r), rng);
      if (!(bar_standard(ctx, r, word) == bar_vector(ModuleVector::basis(ctx, r)))) word_free = false;
    }
    out.checks.push_back({type.to_string() + " J={" + join(J) + "} bar independent of reduced word", word_free, ""});
  }
}

// ----------------------------------------------------------------- module

int braid_order(WeylType type, int i, int j) {
  if (i > j) std::swap(i, j);
  if (type.kind == WeylKind::B && i == 0 && j == 1) return 4;
  return j - i == 1 ? 3 : 2;
}

ModuleVector alternate(ModuleVector v, int first, int second, int count) {
  for (int k = 0; k < count; ++k) v = act_generator(v, k % 2 == 0 ? first : second);
  return v;
}

void suite_module(WeylKind kind, int d, const SuiteOptions& opts, SuiteResult& out) {
  const auto type = WeylType::make(kind, d);
  const auto gens = type.generator_indices();
  const LaurentPoly q_inv_minus_q = LaurentPoly::q(-1) - LaurentPoly::q(1);
  for (const auto& J : all_subsets(gens)) {
    auto ctx = ParabolicContext::create(type, J, opts.caps);
    std::string problem;
    for (std::size_t r = 0; r < ctx->size() && problem.empty(); ++r) {
      auto v = ModuleVector::basis(ctx, r);
      for (int i : gens) {
        auto vh = act_generator(v, i);
        if (!(act_generator(vh, i) == q_inv_minus_q * vh + v))
          problem = "quadratic relation fails for H_" + std::to_string(i) + " on M_" + ctx->rep(r).to_string();
        if (!(act_inverse_generator(vh, i) == v))
          problem = "H_" + std::to_string(i) + "^-1 does not invert H_" + std::to_string(i);
        for (int j : gens) {
          if (j <= i) continue;
          int m = braid_order(type, i, j);
          if (!(alternate(v, i, j, m) == alternate(v, j, i, m)))
            problem = "braid relation of order " + std::to_string(m) + " fails for (" + std::to_string(i) + "," +
                      std::to_string(j) + ") on M_" + ctx->rep(r).to_string();
        }
      }
    }
    out.checks.push_back({type.to_string() + " J={" + join(J) + "} relations", problem.empty(), problem});
  }
}

// ----------------------------------------------------------------- specht

void suite_specht(WeylKind kind, const std::vector<int>& ranks, const SuiteOptions& opts, SuiteResult& out) {
  json ranks_json = json::object();
  for (const auto& shape : partitions_in(kind, ranks)) {
    const auto type = shape.weyl_type();
    CMatrix c = c_matrix(shape);
    const std::size_t rank = rational_rank(c.entries);
    ranks_json[shape.label()] = {{"rank", rank}, {"standard", c.standard.size()}};
    if (kind == WeylKind::A)
      out.checks.push_back({shape.label() + " rank = |Std|", rank == c.standard.size(),
                            std::to_string(rank) + " of " + std::to_string(c.standard.size())});

    bool unit = true;
    for (std::size_t t = 0; t < c.standard.size(); ++t) {
      auto it = std::find(c.row_standard.begin(), c.row_standard.end(), c.standard[t]);
      unit = unit && it != c.row_standard.end() && c.at(static_cast<std::size_t>(it - c.row_standard.begin()), t) == 1;
    }
    out.checks.push_back({shape.label() + " c(T,T) = 1", unit, ""});
    const std::string cproblem = c_matrix_problem(c, opts.variant, opts.caps);
    out.checks.push_back({shape.label() + " c-matrix consistent", cproblem.empty(), cproblem});

    // Every filling of the diagram is T0.w for exactly one w.
    const Tableau t0 = initial_tableau(shape);
    std::string problem;
    for (const auto& w : enumerate_group(type, opts.caps)) {
      Tableau t = act_on_letters(t0, w);
      TabloidCombo v = specht_vector(t);
      for (int i : type.generator_indices()) {
        if (!(specht_vector(act_on_letters(t, generator(type, i))) == specht_action(v, i))) {
          problem = t.to_string() + " with s_" + std::to_string(i);
          break;
        }
      }
      if (!problem.empty()) break;
    }
    out.checks.push_back({shape.label() + " equivariance", problem.empty(), problem});
  }
  out.data[std::string(1, to_char(kind))] = std::move(ranks_json);
}

// -------------------------------------------------------------------- crt

json orientations_json(const std::vector<Orientation>& os) {
  json out = json::array();
  for (auto o : os) out.push_back(to_string(o));
  return out;
}

void suite_crt(const std::vector<WeylKind>& kinds, const SuiteOptions& opts, SuiteResult& out) {
  std::vector<Orientation> common{Orientation::AsPrinted, Orientation::Reversed};
  for (WeylKind kind : kinds) {
    auto shapes = partitions_in(kind, suite_ranks("crt", kind, opts));
    CrtCertificate cert = certify_crt_orientation(kind, shapes, opts.variant, opts.caps);
    auto certified = cert.certified();
    std::string detail = "certified:";
    for (auto o : certified) detail += " " + to_string(o);
    if (certified.empty()) detail += " none";
    out.checks.push_back({std::string("type ") + to_char(kind) + " single orientation, " + to_string(opts.variant),
                          !certified.empty(), detail});
    out.checks.push_back({std::string("type ") + to_char(kind) + " unit diagonal", cert.unit_diagonal, ""});
    std::erase_if(common, [&](Orientation o) { return std::find(certified.begin(), certified.end(), o) == certified.end(); });
    out.data[std::string(1, to_char(kind))] = to_json(cert);
  }
  if (kinds.size() > 1) {
    std::string detail;
    for (auto o : common) detail += (detail.empty() ? "" : " ") + to_string(o);
    out.checks.push_back({"orientation shared by all types", !common.empty(), detail.empty() ? "none" : detail});
  }
  out.data["certified"] = orientations_json(common);
}

// --------------------------------------------------------------- theorem1

void suite_theorem1(const std::vector<WeylKind>& kinds, const SuiteOptions& opts, SuiteResult& out) {
  std::vector<Composition> instances;
  for (WeylKind kind : kinds) {
    auto ps = partitions_in(kind, suite_ranks("theorem1", kind, opts));
    instances.insert(instances.end(), ps.begin(), ps.end());
  }
  DiscoveryReport report = discover_conventions(instances, opts.caps, opts.jobs);
  auto survivors = report.ranked_survivors();

  const ProfileOutcome* best = nullptr;
  for (const auto& p : report.profiles)
    if (!best || p.pass_count() > best->pass_count()) best = &p;

  std::string detail;
  if (!survivors.empty()) {
    detail = std::to_string(survivors.size()) + " surviving, preferred " + survivors.front().name();
  } else if (best) {
    detail = "no surviving profile; best " + best->profile.name() + " passes " + std::to_string(best->pass_count()) +
             "/" + std::to_string(instances.size());
    for (const auto& inst : best->instances)
      if (!inst.pass) {
        detail += "; fails " + inst.shape;
        if (!inst.violations.empty()) detail += " (" + inst.violations.front().message + ")";
      }
  }
  out.checks.push_back({"surviving convention profile over " + std::to_string(instances.size()) + " instances",
                        !survivors.empty(), detail});
  out.data["discovery"] = to_json(report);
}

}  // namespace

std::string kl_table_problem(const KLTable& kl) {
  const auto& ctx = kl.context();
  const std::size_t n = kl.size();
  for (std::size_t w = 0; w < n; ++w) {
    auto elem = kl.kl_element(w);
    if (!(bar_vector(elem) == elem)) return "KL element of " + ctx.rep(w).to_string() + " is not bar-invariant";
    for (std::size_t x = 0; x < n; ++x) {
      const auto& m = kl.m_at(x, w);
      const auto& p = kl.p_at(x, w);
      if (x == w) {
        if (m != LaurentPoly(1) || p != LaurentPoly(1)) return "diagonal entry at " + ctx.rep(x).to_string() + " is not 1";
        continue;
      }
      if (!ctx.bruhat_leq(x, w) && (!m.is_zero() || !p.is_zero()))
        return "entry at (" + ctx.rep(x).to_string() + ", " + ctx.rep(w).to_string() + ") outside the Bruhat support";
      if (m.is_zero()) continue;
      bool side_ok = kl.side() == KLSide::Positive ? *m.min_degree() >= 1 : *m.max_degree() <= -1;
      if (!side_ok) return "m(" + ctx.rep(x).to_string() + ", " + ctx.rep(w).to_string() + ") = " + m.to_string();
    }
  }
  auto prod = multiply(kl.m(), kl.p());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t w = 0; w < n; ++w)
      if (prod[x][w] != LaurentPoly(x == w ? 1 : 0)) return "m p is not the identity";
  return {};
}

std::string c_matrix_problem(const CMatrix& c, MapVariant variant, const Caps& caps) {
  for (std::size_t t = 0; t < c.standard.size(); ++t)
    if (!(c.column(t) == specht_vector(c.standard[t]))) return "column " + c.standard[t].to_string() + " is not its Specht vector";
  const auto crt = check_crt(c, c.shape.weyl_type(), variant, caps);
  if (!crt.unit_diagonal) return "diagonal entry c(T,T) is not 1";
  if (!crt.holds_as_printed && !crt.holds_reversed) return "no Bruhat orientation bounds the support";
  return {};
}

std::vector<int> suite_ranks(const std::string& suite, WeylKind kind, const SuiteOptions& opts) {
  if (opts.d) return {*opts.d};
  const int hi = opts.max_d.value_or(default_max_d(suite, kind));
  std::vector<int> out;
  for (int d = 1; d <= hi; ++d) out.push_back(d);
  return out;
}

SuiteResult run_suite(const std::string& suite, const SuiteOptions& opts) {
  if (!is_suite(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
  SuiteResult out;
  out.suite = suite;
  out.type = kinds_label(opts.kinds);

  if (suite == "table") {
    out.type = "B";
    suite_table(out);
  } else if (suite == "hook") {
    out.type = "A";
    suite_hook(out);
  } else if (suite == "crt") {
    suite_crt(opts.kinds, opts, out);
  } else if (suite == "theorem1") {
    suite_theorem1(opts.kinds, opts, out);
  } else {
    for (WeylKind kind : opts.kinds) {
      auto ranks = suite_ranks(suite, kind, opts);
      if (suite == "bijection") {
        suite_bijection(kind, ranks, opts, out);
      } else if (suite == "specht") {
        suite_specht(kind, ranks, opts, out);
      } else {
        for (int d : ranks) {
          if (suite == "lengths") suite_lengths(kind, d, opts, out);
          if (suite == "kl") suite_kl(kind, d, opts, out);
          if (suite == "module") suite_module(kind, d, opts, out);
        }
      }
    }
  }
  return out;
}

json to_json(const SuiteResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"suite", r.suite}, {"type", r.type}, {"pass", r.pass()}, {"checks", std::move(checks)}, {"data", r.data}};
}

std::string to_pretty(const SuiteResult& r) {
  std::ostringstream os;
  const auto failed = std::count_if(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return !c.pass; });
  os << "suite " << r.suite << " (" << r.type << "): " << (r.pass() ? "PASS" : "FAIL") << ", "
     << r.checks.size() - static_cast<std::size_t>(failed) << "/" << r.checks.size() << " checks\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  if (r.data.contains("discovery")) {
    const auto& surv = r.data["discovery"]["surviving"];
    os << "  surviving profiles:";
    if (surv.empty()) os << " none";
    for (const auto& s : surv) os << "\n    " << s.get<std::string>();
    os << '\n';
  }
  return os.str();
}

}  // namespace klspecht::tools
