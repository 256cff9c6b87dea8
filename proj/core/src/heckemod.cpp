#include "klspecht/heckemod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klspecht {

std::string to_string(KLSide side) { return side == KLSide::Positive ? "positive" : "negative"; }

KLSide parse_side(std::string_view text) {
  if (text == "positive" || text == "pos" || text == "+") return KLSide::Positive;
  if (text == "negative" || text == "neg" || text == "-") return KLSide::Negative;
  throw std::invalid_argument("unknown KL side '" + std::string(text) + "' (expected positive or negative)");
}

namespace {

const LaurentPoly& q_inv_minus_q() {
  static const LaurentPoly value = LaurentPoly::q(-1) - LaurentPoly::q(1);
  return value;
}

}  // namespace

ParabolicContext::ParabolicContext(WeylType type, std::vector<int> J, const Caps& caps)
    : type_(type), J_(std::move(J)) {
  std::sort(J_.begin(), J_.end());
  J_.erase(std::unique(J_.begin(), J_.end()), J_.end());
  validate_subset(type_, J_);
  std::uint64_t cosets = type_.order() / parabolic_order(type_, J_);
  if (cosets > caps.max_cosets)
    throw CapExceeded("|D_J| = " + std::to_string(cosets) + " is above the coset cap of " +
                      std::to_string(caps.max_cosets));
  group_ = WeylGroup::get(type_, caps);

  for (std::size_t k = 0; k < group_->size(); ++k) {
    bool minimal = std::all_of(J_.begin(), J_.end(), [&](int j) {
      return group_->length(group_->left_multiply(k, j)) > group_->length(k);
    });
    if (!minimal) continue;
    rep_of_group_idx_.emplace(k, reps_.size());
    reps_.push_back(group_->element(k));
    group_idx_.push_back(k);
  }

  const auto gens = type_.generator_indices();
  steps_.reserve(reps_.size() * gens.size());
  for (std::size_t r = 0; r < reps_.size(); ++r) {
    for (int i : gens) {
      std::size_t g = group_->right_multiply(group_idx_[r], i);
      auto it = rep_of_group_idx_.find(g);
      if (it == rep_of_group_idx_.end()) {
        steps_.push_back({ActionCase::Stay, r});
      } else {
        bool up = group_->length(g) > group_->length(group_idx_[r]);
        steps_.push_back({up ? ActionCase::Up : ActionCase::Down, it->second});
      }
    }
  }
}

std::shared_ptr<const ParabolicContext> ParabolicContext::create(WeylType type, std::vector<int> J,
                                                                 const Caps& caps) {
  return std::make_shared<const ParabolicContext>(type, std::move(J), caps);
}

std::optional<std::size_t> ParabolicContext::find(const SignedPerm& w) const {
  auto g = group_->find(w);
  if (!g) return std::nullopt;
  auto it = rep_of_group_idx_.find(*g);
  if (it == rep_of_group_idx_.end()) return std::nullopt;
  return it->second;
}

std::size_t ParabolicContext::index_of(const SignedPerm& w) const {
  auto r = find(w);
  if (!r) throw std::invalid_argument(w.to_string() + " is not a minimal coset representative");
  return *r;
}

ActionStep ParabolicContext::step(std::size_t r, int i) const {
  if (!type_.is_generator(i))
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range for " + type_.to_string());
  const auto ngens = type_.generator_indices().size();
  const auto first = type_.kind == WeylKind::A ? 1 : 0;
  return steps_.at(r * ngens + static_cast<std::size_t>(i - first));
}

bool ParabolicContext::bruhat_leq(std::size_t x, std::size_t w) const {
  return group_->bruhat_leq(group_idx_.at(x), group_idx_.at(w));
}

std::vector<int> ParabolicContext::reduced_word(std::size_t r) const {
  return klspecht::reduced_word(type_, reps_.at(r));
}

ModuleVector::ModuleVector(std::shared_ptr<const ParabolicContext> ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("module vector needs a context");
}

ModuleVector ModuleVector::basis(std::shared_ptr<const ParabolicContext> ctx, std::size_t r) {
  ModuleVector v(std::move(ctx));
  if (r >= v.ctx_->size()) throw std::out_of_range("basis index out of range");
  v.add(r, LaurentPoly(1));
  return v;
}

LaurentPoly ModuleVector::coeff(std::size_t r) const {
  auto it = terms_.find(r);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void ModuleVector::add(std::size_t r, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ModuleVector::require_same_context(const ModuleVector& other) const {
  if (ctx_ != other.ctx_) throw std::invalid_argument("module vectors live in different contexts");
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  require_same_context(other);
  for (const auto& [r, c] : other.terms_) add(r, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
  require_same_context(other);
  for (const auto& [r, c] : other.terms_) add(r, -c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [r, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

std::string ModuleVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->second != LaurentPoly(1)) os << '(' << it->second << ')';
    os << "M_" << ctx_->rep(it->first).to_string();
  }
  return os.str();
}

ModuleVector act_generator(const ModuleVector& v, int i) {
  const auto& ctx = v.context();
  ModuleVector out(v.context_ptr());
  for (const auto& [r, c] : v.terms()) {
    ActionStep s = ctx.step(r, i);
    switch (s.kind) {
      case ActionCase::Up:
        out.add(s.target, c);
        break;
      case ActionCase::Down:
        out.add(s.target, c);
        out.add(r, c * q_inv_minus_q());
        break;
      case ActionCase::Stay:
        out.add(r, c * LaurentPoly::q(-1));
        break;
    }
  }
  return out;
}

ModuleVector act_inverse_generator(const ModuleVector& v, int i) {
  ModuleVector out = act_generator(v, i);
  out -= q_inv_minus_q() * v;
  return out;
}

ModuleVector bar_standard(std::shared_ptr<const ParabolicContext> ctx, std::size_t r, std::span<const int> word) {
  // Check the word: it must spell the representative with no length drop.
  const auto& group = ctx->group();
  std::size_t g = group.identity_index();
  for (int i : word) {
    std::size_t next = group.right_multiply(g, i);
    if (group.length(next) != group.length(g) + 1)
      throw std::invalid_argument("word is not reduced");
    g = next;
  }
  if (g != ctx->group_index(r)) throw std::invalid_argument("word does not spell the representative");

  ModuleVector out = ModuleVector::basis(ctx, 0);
  for (int i : word) out = act_inverse_generator(out, i);
  return out;
}

ModuleVector bar_vector(const ModuleVector& v) {
  ModuleVector out(v.context_ptr());
  for (const auto& [r, c] : v.terms()) {
    auto word = v.context().reduced_word(r);
    ModuleVector image = bar_standard(v.context_ptr(), r, word);
    image *= c.bar();
    out += image;
  }
  return out;
}

KLTable::KLTable(std::shared_ptr<const ParabolicContext> ctx, KLSide side, Matrix m, Matrix p)
    : ctx_(std::move(ctx)), side_(side), m_(std::move(m)), p_(std::move(p)) {}

ModuleVector KLTable::kl_element(std::size_t w) const {
  ModuleVector v(ctx_);
  for (std::size_t x = 0; x < m_.size(); ++x) v.add(x, m_[x].at(w));
  return v;
}

KLTable kl_basis(std::shared_ptr<const ParabolicContext> ctx, KLSide side) {
  const std::size_t n = ctx->size();
  const LaurentPoly shift = side == KLSide::Positive ? LaurentPoly::q(1) : -LaurentPoly::q(-1);
  const auto gens = ctx->type().generator_indices();

  std::vector<ModuleVector> kl;
  kl.reserve(n);
  for (std::size_t w = 0; w < n; ++w) {
    if (w == 0) {
      kl.push_back(ModuleVector::basis(ctx, 0));
      continue;
    }
    // Some right descent s of w has ws in D_J and ws shorter.
    std::optional<std::size_t> shorter;
    int descent = -1;
    for (int i : gens) {
      ActionStep s = ctx->step(w, i);
      if (s.kind == ActionCase::Down) {
        shorter = s.target;
        descent = i;
        break;
      }
    }
    if (!shorter) throw std::logic_error("non-identity representative without a descent in D_J");

    const ModuleVector& prev = kl[*shorter];
    ModuleVector c = act_generator(prev, descent);
    c += shift * prev;

    for (std::size_t x = w; x-- > 0;) {
      LaurentPoly a = c.coeff(x);
      if (a.is_zero()) continue;
      SymmetricSplit split = side == KLSide::Positive ? split_symmetric(a) : split_symmetric_negative(a);
      if (split.gamma.is_zero()) continue;
      ModuleVector correction = kl[x];
      correction *= split.gamma;
      c -= correction;
    }

    if (c.coeff(w) != LaurentPoly(1)) throw std::logic_error("KL element is not unitriangular");
    for (const auto& [x, a] : c.terms()) {
      if (x == w) continue;
      bool ok = side == KLSide::Positive ? *a.min_degree() >= 1 : *a.max_degree() <= -1;
      if (!ok || x > w) throw std::logic_error("KL correction left a bar-invariant part at " + ctx->rep(x).to_string());
    }
    kl.push_back(std::move(c));
  }

  KLTable::Matrix m(n, std::vector<LaurentPoly>(n));
  for (std::size_t w = 0; w < n; ++w)
    for (const auto& [x, a] : kl[w].terms()) m[x][w] = a;
  return KLTable(std::move(ctx), side, std::move(m));
}

KLTable p_table(KLTable kl) {
  const auto& m = kl.m();
  const std::size_t n = m.size();
  KLTable::Matrix p(n, std::vector<LaurentPoly>(n));
  for (std::size_t w = 0; w < n; ++w) {
    p[w][w] = LaurentPoly(1);
    for (std::size_t x = w; x-- > 0;) {
      LaurentPoly acc;
      for (std::size_t k = x + 1; k <= w; ++k)
        if (!m[x][k].is_zero() && !p[k][w].is_zero()) acc += m[x][k] * p[k][w];
      p[x][w] = -acc;
    }
  }
  return KLTable(kl.context_ptr(), kl.side(), kl.m(), std::move(p));
}

KLTable compute_kl_table(std::shared_ptr<const ParabolicContext> ctx, KLSide side) {
  return p_table(kl_basis(std::move(ctx), side));
}

KLTable::Matrix multiply(const KLTable::Matrix& a, const KLTable::Matrix& b) {
  const std::size_t n = a.size();
  KLTable::Matrix out(n, std::vector<LaurentPoly>(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace klspecht
