#include "klspecht/cob.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace klspecht {

std::string to_string(AVariant v) { return v == AVariant::PVersion ? "p-version" : "m-version"; }
std::string to_string(SignMode v) { return v == SignMode::Strict ? "strict" : "up-to-sign"; }
std::string to_string(Orientation v) { return v == Orientation::AsPrinted ? "as-printed" : "reversed"; }
std::string to_string(Leading v) { return v == Leading::MapRep ? "map-rep" : "support-extremal"; }

namespace {

template <typename E>
E parse_enum(std::string_view text, std::initializer_list<E> values, const char* what) {
  for (E v : values)
    if (to_string(v) == text) return v;
  throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(text) + "'");
}

}  // namespace

AVariant parse_a_variant(std::string_view text) {
  if (text == "p") return AVariant::PVersion;
  if (text == "m") return AVariant::MVersion;
  return parse_enum(text, {AVariant::PVersion, AVariant::MVersion}, "a-variant");
}

SignMode parse_sign_mode(std::string_view text) {
  return parse_enum(text, {SignMode::Strict, SignMode::UpToSign}, "sign mode");
}

Orientation parse_orientation(std::string_view text) {
  return parse_enum(text, {Orientation::AsPrinted, Orientation::Reversed}, "orientation");
}

Leading parse_leading(std::string_view text) {
  return parse_enum(text, {Leading::MapRep, Leading::SupportExtremal}, "leading rule");
}

std::string ConventionProfile::name() const {
  return to_string(kl_side) + "/" + to_string(map_variant) + "/" + to_string(a_variant) + "/" +
         to_string(sign_mode) + "/" + to_string(orientation) + "/" + to_string(leading);
}

ConventionProfile ConventionProfile::parse(std::string_view name) {
  std::vector<std::string> fields;
  std::stringstream ss{std::string(name)};
  std::string item;
  while (std::getline(ss, item, '/')) fields.push_back(item);
  if (fields.size() != 6) throw std::invalid_argument("a profile name has six '/'-separated fields");
  return {parse_side(fields[0]),        parse_map_variant(fields[1]), parse_a_variant(fields[2]),
          parse_sign_mode(fields[3]),   parse_orientation(fields[4]), parse_leading(fields[5])};
}

std::vector<ConventionProfile> all_profiles() {
  std::vector<ConventionProfile> out;
  for (KLSide side : {KLSide::Positive, KLSide::Negative})
    for (MapVariant map : all_map_variants())
      for (AVariant a : {AVariant::PVersion, AVariant::MVersion})
        for (SignMode s : {SignMode::Strict, SignMode::UpToSign})
          for (Orientation o : {Orientation::AsPrinted, Orientation::Reversed})
            for (Leading l : {Leading::MapRep, Leading::SupportExtremal}) out.push_back({side, map, a, s, o, l});
  return out;
}

ModuleVector embed(const TabloidCombo& v, std::shared_ptr<const ParabolicContext> ctx, MapVariant variant) {
  ModuleVector out(ctx);
  for (const auto& [tab, c] : v.terms()) {
    SignedPerm w = tableau_to_coset_rep(tab.representative(), variant);
    auto r = ctx->find(w);
    if (!r)
      throw InvalidMapVariant("tabloid " + tab.to_string() + " maps to " + w.to_string() + " under " +
                              to_string(variant) + ", which is not in D_J");
    out.add(*r, LaurentPoly(Integer(c)));
  }
  return out;
}

std::vector<LaurentPoly> kl_coordinates(const ModuleVector& v, const KLTable& kl) {
  if (!kl.has_p()) throw std::invalid_argument("KL table has no p entries");
  std::vector<LaurentPoly> out(kl.size());
  for (std::size_t x = 0; x < kl.size(); ++x)
    for (const auto& [w, c] : v.terms())
      if (!kl.p_at(x, w).is_zero()) out[x] += kl.p_at(x, w) * c;
  return out;
}

CobInstance::CobInstance(Composition shape, const Caps& caps)
    : shape_(std::move(shape)),
      ctx_(ParabolicContext::create(shape_.weyl_type(), composition_to_J(shape_), caps)),
      kl_pos_(compute_kl_table(ctx_, KLSide::Positive)),
      kl_neg_(compute_kl_table(ctx_, KLSide::Negative)),
      c_(c_matrix(shape_)) {
  for (MapVariant v : all_map_variants()) {
    std::vector<SignedPerm> reps;
    std::set<std::size_t> hit;
    std::optional<std::string> error;
    for (const auto& r : c_.row_standard) {
      reps.push_back(tableau_to_coset_rep(r, v));
      auto idx = ctx_->find(reps.back());
      if (!idx) {
        if (!error) error = r.to_string() + " -> " + reps.back().to_string() + " is not in D_J";
      } else {
        hit.insert(*idx);
      }
    }
    if (!error && (hit.size() != ctx_->size() || reps.size() != ctx_->size()))
      error = "reading map is not a bijection onto D_J";
    map_errors_.push_back(std::move(error));
    row_reps_.push_back(std::move(reps));
  }
}

AMatrix a_matrix(const CobInstance& instance, const ConventionProfile& profile) {
  const auto& ctx = *instance.context();
  AMatrix out{instance.shape(), ctx.J(), profile, ctx.reps(), instance.c().standard, {}, {}, {}, {}, {}};
  const std::size_t n = ctx.size();
  out.leq.assign(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t w = 0; w < n; ++w) out.leq[x][w] = ctx.bruhat_leq(x, w);

  if (const auto& err = instance.map_error(profile.map_variant)) {
    out.invalid = *err;
    return out;
  }

  const auto& c = instance.c();
  const auto& kl = instance.kl(profile.kl_side);
  const std::size_t cols = c.standard.size();
  out.entries.assign(n, std::vector<Integer>(cols, 0));
  out.standard_coords.assign(n, std::vector<Integer>(cols, 0));

  for (std::size_t t = 0; t < cols; ++t) {
    out.map_reps.push_back(ctx.index_of(tableau_to_coset_rep(c.standard[t], profile.map_variant)));
    ModuleVector v = embed(c.column(t), instance.context(), profile.map_variant);
    for (const auto& [w, coeff] : v.terms()) out.standard_coords[w][t] = coeff.eval_at_one();

    std::vector<LaurentPoly> coords(n);
    if (profile.a_variant == AVariant::PVersion) {
      coords = kl_coordinates(v, kl);
    } else {
      for (std::size_t x = 0; x < n; ++x)
        for (const auto& [w, coeff] : v.terms())
          if (!kl.m_at(x, w).is_zero()) coords[x] += kl.m_at(x, w) * coeff;
    }
    for (std::size_t x = 0; x < n; ++x) out.entries[x][t] = coords[x].eval_at_one();
  }
  return out;
}

AMatrix a_matrix(const Composition& shape, const ConventionProfile& profile, const Caps& caps) {
  return a_matrix(CobInstance(shape, caps), profile);
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::InvalidMap: return "invalid-map";
    case ViolationKind::ZeroColumn: return "zero-column";
    case ViolationKind::NoLeading: return "no-leading";
    case ViolationKind::Diagonal: return "diagonal";
    case ViolationKind::Support: return "support";
    case ViolationKind::LeadingCollision: return "leading-collision";
  }
  return "?";
}

CertResult check_unitriangular(const AMatrix& a) {
  CertResult res;
  const auto& profile = a.profile;
  if (a.invalid) {
    res.violations.push_back({ViolationKind::InvalidMap, 0, std::nullopt, 0, *a.invalid});
    return res;
  }
  const std::size_t n = a.reps.size();
  const std::size_t cols = a.standard.size();
  const bool as_printed = profile.orientation == Orientation::AsPrinted;
  // y lies in the cone of lead.
  auto in_cone = [&](std::size_t y, std::size_t lead) { return as_printed ? a.leq[y][lead] : a.leq[lead][y]; };

  res.leading.assign(cols, std::nullopt);
  res.diagonal.assign(cols, 0);
  std::map<std::size_t, std::size_t> lead_owner;
  for (std::size_t t = 0; t < cols; ++t) {
    std::vector<std::size_t> support;
    for (std::size_t x = 0; x < n; ++x)
      if (a.entries[x][t] != 0) support.push_back(x);
    const std::string label = a.standard[t].to_string();
    if (support.empty()) {
      res.violations.push_back({ViolationKind::ZeroColumn, t, std::nullopt, 0, "column " + label + " vanishes"});
      continue;
    }

    std::optional<std::size_t> lead;
    if (profile.leading == Leading::MapRep) {
      lead = a.map_reps.at(t);
    } else {
      for (std::size_t cand : support)
        if (std::all_of(support.begin(), support.end(), [&](std::size_t y) { return in_cone(y, cand); })) {
          lead = cand;
          break;
        }
    }
    if (!lead) {
      res.violations.push_back({ViolationKind::NoLeading, t, std::nullopt, 0,
                                "support of " + label + " has no Bruhat-extremal element"});
      continue;
    }
    res.leading[t] = lead;
    const Integer& diag = a.entries[*lead][t];
    res.diagonal[t] = diag;
    bool diag_ok = profile.sign_mode == SignMode::Strict ? diag == 1 : (diag == 1 || diag == -1);
    if (!diag_ok)
      res.violations.push_back({ViolationKind::Diagonal, t, lead, diag,
                                "a(" + a.reps[*lead].to_string() + ", " + label + ") = " + diag.str()});
    for (std::size_t y : support)
      if (!in_cone(y, *lead))
        res.violations.push_back({ViolationKind::Support, t, y, a.entries[y][t],
                                  "a(" + a.reps[y].to_string() + ", " + label + ") = " + a.entries[y][t].str() +
                                      " outside the cone of " + a.reps[*lead].to_string()});
    auto [it, fresh] = lead_owner.emplace(*lead, t);
    if (!fresh)
      res.violations.push_back({ViolationKind::LeadingCollision, t, lead, 0,
                                label + " and " + a.standard[it->second].to_string() + " share the leading element " +
                                    a.reps[*lead].to_string()});
  }
  res.pass = res.violations.empty();
  return res;
}

CrtCheck check_crt(const CMatrix& c, WeylType type, MapVariant variant, const Caps& caps) {
  auto group = WeylGroup::get(type, caps);
  CrtCheck out;
  std::vector<std::size_t> rep_idx;
  for (const auto& r : c.row_standard) rep_idx.push_back(group->index_of(tableau_to_coset_rep(r, variant)));
  for (std::size_t t = 0; t < c.standard.size(); ++t) {
    auto row_it = std::find(c.row_standard.begin(), c.row_standard.end(), c.standard[t]);
    std::size_t row_t = static_cast<std::size_t>(row_it - c.row_standard.begin());
    if (row_it == c.row_standard.end() || c.at(row_t, t) != 1) out.unit_diagonal = false;
    std::size_t wt = group->index_of(tableau_to_coset_rep(c.standard[t], variant));
    for (std::size_t r = 0; r < c.row_standard.size(); ++r) {
      if (c.at(r, t) == 0) continue;
      std::size_t wr = rep_idx[r];
      std::string where = c.shape.label() + ": R=" + c.row_standard[r].to_string() + " T=" + c.standard[t].to_string();
      if (!group->bruhat_leq(wr, wt)) {
        out.holds_as_printed = false;
        out.counterexamples_as_printed.push_back(where);
      }
      if (!group->bruhat_leq(wt, wr)) {
        out.holds_reversed = false;
        out.counterexamples_reversed.push_back(where);
      }
    }
  }
  return out;
}

std::vector<Orientation> CrtCertificate::certified() const {
  std::vector<Orientation> out;
  if (holds_as_printed) out.push_back(Orientation::AsPrinted);
  if (holds_reversed) out.push_back(Orientation::Reversed);
  return out;
}

void CrtCertificate::absorb(const std::string& shape, const CrtCheck& check) {
  shapes.push_back(shape);
  unit_diagonal = unit_diagonal && check.unit_diagonal;
  holds_as_printed = holds_as_printed && check.holds_as_printed;
  holds_reversed = holds_reversed && check.holds_reversed;
  for (const auto& s : check.counterexamples_as_printed)
    if (counterexamples.size() < 8) counterexamples.push_back("as-printed fails at " + s);
  for (const auto& s : check.counterexamples_reversed)
    if (counterexamples.size() < 16) counterexamples.push_back("reversed fails at " + s);
}

CrtCertificate certify_crt_orientation(WeylKind kind, const std::vector<Composition>& shapes, MapVariant variant,
                                       const Caps& caps) {
  CrtCertificate cert{kind, variant, {}, true, true, true, {}};
  for (const auto& shape : shapes)
    if (shape.kind() == kind) cert.absorb(shape.label(), check_crt(c_matrix(shape), shape.weyl_type(), variant, caps));
  return cert;
}

bool ProfileOutcome::passes_all() const {
  return std::all_of(instances.begin(), instances.end(), [](const InstanceOutcome& i) { return i.pass; });
}

bool ProfileOutcome::crt_all() const {
  return std::all_of(instances.begin(), instances.end(), [](const InstanceOutcome& i) { return i.crt_pass; });
}

std::size_t ProfileOutcome::pass_count() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const InstanceOutcome& i) { return i.pass; }));
}

std::vector<ConventionProfile> DiscoveryReport::surviving() const {
  std::vector<ConventionProfile> out;
  for (const auto& p : profiles)
    if (p.passes_all()) out.push_back(p.profile);
  return out;
}

std::vector<ConventionProfile> DiscoveryReport::ranked_survivors() const {
  std::vector<const ProfileOutcome*> survivors;
  for (const auto& p : profiles)
    if (p.passes_all()) survivors.push_back(&p);
  std::stable_sort(survivors.begin(), survivors.end(), [](const ProfileOutcome* a, const ProfileOutcome* b) {
    auto key = [](const ProfileOutcome* p) {
      return std::make_pair(p->profile.sign_mode == SignMode::Strict ? 0 : 1, p->crt_all() ? 0 : 1);
    };
    return key(a) < key(b);
  });
  std::vector<ConventionProfile> out;
  for (const auto* p : survivors) out.push_back(p->profile);
  return out;
}

std::optional<ConventionProfile> DiscoveryReport::preferred() const {
  auto ranked = ranked_survivors();
  if (ranked.empty()) return std::nullopt;
  return ranked.front();
}

namespace {

struct InstanceEvaluation {
  std::vector<InstanceOutcome> per_profile;  // all_profiles() order
  std::vector<CrtCheck> crt;                 // per map variant
};

InstanceEvaluation evaluate_instance(const Composition& shape, const std::vector<ConventionProfile>& profiles,
                                     const Caps& caps) {
  CobInstance instance(shape, caps);
  InstanceEvaluation eval;
  for (MapVariant v : all_map_variants()) eval.crt.push_back(check_crt(instance.c(), shape.weyl_type(), v, caps));
  for (const auto& profile : profiles) {
    AMatrix a = a_matrix(instance, profile);
    CertResult cert = check_unitriangular(a);
    InstanceOutcome outcome;
    outcome.shape = shape.label();
    outcome.pass = cert.pass;
    const CrtCheck& crt = eval.crt[static_cast<std::size_t>(profile.map_variant)];
    outcome.crt_pass = crt.unit_diagonal && crt.holds(profile.orientation);
    for (const auto& dv : cert.diagonal) outcome.diagonal.push_back(dv.str());
    outcome.violations = std::move(cert.violations);
    eval.per_profile.push_back(std::move(outcome));
  }
  return eval;
}

}  // namespace

DiscoveryReport discover_conventions(const std::vector<Composition>& instances, const Caps& caps, unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto profiles = all_profiles();

  std::vector<InstanceEvaluation> evals(instances.size());
  for (std::size_t begin = 0; begin < instances.size(); begin += jobs) {
    const std::size_t end = std::min(instances.size(), begin + jobs);
    if (jobs == 1) {
      evals[begin] = evaluate_instance(instances[begin], profiles, caps);
      continue;
    }
    std::vector<std::future<InstanceEvaluation>> futures;
    for (std::size_t k = begin; k < end; ++k)
      futures.push_back(std::async(std::launch::async, evaluate_instance, std::cref(instances[k]),
                                   std::cref(profiles), std::cref(caps)));
    for (std::size_t k = begin; k < end; ++k) evals[k] = futures[k - begin].get();
  }

  DiscoveryReport report;
  for (const auto& shape : instances) report.instances.push_back(shape.label());
  for (std::size_t p = 0; p < profiles.size(); ++p) {
    ProfileOutcome outcome{profiles[p], {}};
    for (auto& eval : evals) outcome.instances.push_back(eval.per_profile[p]);
    report.profiles.push_back(std::move(outcome));
  }

  for (WeylKind kind : {WeylKind::A, WeylKind::B}) {
    for (MapVariant v : all_map_variants()) {
      CrtCertificate cert{kind, v, {}, true, true, true, {}};
      for (std::size_t k = 0; k < instances.size(); ++k)
        if (instances[k].kind() == kind) cert.absorb(instances[k].label(), evals[k].crt[static_cast<std::size_t>(v)]);
      if (!cert.shapes.empty()) report.crt.push_back(std::move(cert));
    }
  }
  return report;
}

std::vector<Composition> certification_instances(int max_a, int max_b) {
  std::vector<Composition> out;
  for (int d = 1; d <= max_a; ++d) {
    auto ps = partitions(WeylKind::A, d);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  for (int d = 1; d <= max_b; ++d) {
    auto ps = partitions(WeylKind::B, d);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

}  // namespace klspecht
