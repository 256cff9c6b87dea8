#include "klspecht/weyl.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klspecht {

char to_char(WeylKind kind) { return kind == WeylKind::A ? 'A' : 'B'; }

WeylKind parse_kind(std::string_view text) {
  if (text == "A" || text == "a") return WeylKind::A;
  if (text == "B" || text == "b") return WeylKind::B;
  throw std::invalid_argument("unknown Weyl type '" + std::string(text) + "' (expected A or B)");
}

WeylType WeylType::make(WeylKind kind, int d) {
  if (d < 1) throw std::invalid_argument("rank parameter d must be at least 1");
  return WeylType{kind, d};
}

std::vector<int> WeylType::generator_indices() const {
  std::vector<int> out;
  for (int i = kind == WeylKind::A ? 1 : 0; i < d; ++i) out.push_back(i);
  return out;
}

bool WeylType::is_generator(int i) const {
  return i < d && i >= (kind == WeylKind::A ? 1 : 0);
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int k = 2; k <= n; ++k) out = sat_mul(out, static_cast<std::uint64_t>(k));
  return out;
}

std::uint64_t hyperoctahedral_order(int n) {
  std::uint64_t out = factorial(n);
  for (int k = 0; k < n; ++k) out = sat_mul(out, 2);
  return out;
}

}  // namespace

std::uint64_t WeylType::order() const {
  return kind == WeylKind::A ? factorial(d) : hyperoctahedral_order(d);
}

std::string WeylType::to_string() const {
  return std::string(1, to_char(kind)) + "(d=" + std::to_string(d) + ")";
}

SignedPerm::SignedPerm(std::vector<int> window) : window_(std::move(window)) {
  const int d = rank();
  std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
  for (int v : window_) {
    int a = v < 0 ? -v : v;
    if (a < 1 || a > d || seen[a])
      throw std::invalid_argument("window is not a signed permutation: " + to_string());
    seen[a] = true;
  }
}

SignedPerm SignedPerm::identity(int d) {
  std::vector<int> w(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) w[i] = i + 1;
  return SignedPerm(std::move(w));
}

SignedPerm SignedPerm::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != '|' && ch != ' ' && ch != '[' && ch != ']') s.push_back(ch);
  std::vector<int> window;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("malformed one-line notation: '" + std::string(text) + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw std::invalid_argument("malformed one-line notation: '" + std::string(text) + "'");
    window.push_back(v);
  }
  if (window.empty()) throw std::invalid_argument("empty one-line notation");
  return SignedPerm(std::move(window));
}

int SignedPerm::operator()(int point) const {
  if (point == 0) return 0;
  if (point > 0) return window_.at(point - 1);
  return -window_.at(-point - 1);
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> inv(window_.size());
  for (std::size_t i = 0; i < window_.size(); ++i) {
    int v = window_[i];
    int pos = static_cast<int>(i) + 1;
    if (v > 0)
      inv[v - 1] = pos;
    else
      inv[-v - 1] = -pos;
  }
  SignedPerm out;
  out.window_ = std::move(inv);
  return out;
}

std::string SignedPerm::to_string() const {
  std::string out = "|";
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(window_[i]);
  }
  return out + "|";
}

SignedPerm operator*(const SignedPerm& u, const SignedPerm& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("rank mismatch in product");
  std::vector<int> w(static_cast<std::size_t>(u.rank()));
  for (int i = 1; i <= u.rank(); ++i) w[i - 1] = u(v(i));
  return SignedPerm(std::move(w));
}

SignedPerm product(const SignedPerm& u, const SignedPerm& v) { return u * v; }

std::size_t SignedPermHash::operator()(const SignedPerm& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : w.window()) {
    h ^= static_cast<std::size_t>(v + 64);
    h *= 0x100000001b3ULL;
  }
  return h;
}

SignedPerm generator(WeylType type, int i) {
  if (!type.is_generator(i))
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range for " + type.to_string());
  auto w = SignedPerm::identity(type.d);
  std::vector<int> window(w.window().begin(), w.window().end());
  if (i == 0)
    window[0] = -1;
  else
    std::swap(window[i - 1], window[i]);
  return SignedPerm(std::move(window));
}

int neg(const SignedPerm& w) {
  return static_cast<int>(std::count_if(w.window().begin(), w.window().end(), [](int v) { return v < 0; }));
}

int inversions(const SignedPerm& w) {
  auto win = w.window();
  int count = 0;
  for (std::size_t i = 0; i < win.size(); ++i)
    for (std::size_t j = i + 1; j < win.size(); ++j)
      if (win[i] > win[j]) ++count;
  return count;
}

bool belongs_to(WeylType type, const SignedPerm& w) {
  if (w.rank() != type.d) return false;
  return type.kind == WeylKind::B || neg(w) == 0;
}

namespace {

void require_member(WeylType type, const SignedPerm& w) {
  if (w.rank() != type.d)
    throw std::invalid_argument("rank mismatch: " + w.to_string() + " is not in " + type.to_string());
  if (type.kind == WeylKind::A && neg(w) > 0)
    throw std::invalid_argument(w.to_string() + " has negative entries; not in type A");
}

}  // namespace

int length(WeylType type, const SignedPerm& w) {
  require_member(type, w);
  int len = inversions(w);
  if (type.kind == WeylKind::B)
    for (int v : w.window())
      if (v < 0) len += -v;
  return len;
}

bool has_right_descent(WeylType type, const SignedPerm& w, int i) {
  require_member(type, w);
  if (!type.is_generator(i)) throw std::out_of_range("generator index out of range");
  if (i == 0) return w(1) < 0;
  return w(i) > w(i + 1);
}

bool has_left_descent(WeylType type, const SignedPerm& w, int i) {
  return has_right_descent(type, w.inverse(), i);
}

std::vector<int> reduced_word(WeylType type, const SignedPerm& w) {
  require_member(type, w);
  std::vector<int> reversed;
  SignedPerm cur = w;
  const auto gens = type.generator_indices();
  for (;;) {
    auto it = std::find_if(gens.begin(), gens.end(), [&](int i) { return has_right_descent(type, cur, i); });
    if (it == gens.end()) break;
    reversed.push_back(*it);
    cur = cur * generator(type, *it);
  }
  return {reversed.rbegin(), reversed.rend()};
}

WeylGroup::WeylGroup(WeylType type, const Caps& caps) : type_(type), gens_(type.generator_indices()) {
  if (type.order() > caps.max_group_order)
    throw CapExceeded(type.to_string() + " has order " + std::to_string(type.order()) +
                      ", above the cap of " + std::to_string(caps.max_group_order));

  std::vector<SignedPerm> gen_perms;
  for (int i : gens_) gen_perms.push_back(generator(type, i));

  // Breadth-first search of the Cayley graph from the identity.
  std::unordered_map<SignedPerm, int, SignedPermHash> dist;
  std::deque<SignedPerm> queue;
  auto e = SignedPerm::identity(type.d);
  dist.emplace(e, 0);
  queue.push_back(e);
  while (!queue.empty()) {
    SignedPerm cur = std::move(queue.front());
    queue.pop_front();
    int dcur = dist.at(cur);
    for (const auto& s : gen_perms) {
      SignedPerm next = cur * s;
      if (dist.emplace(next, dcur + 1).second) queue.push_back(std::move(next));
    }
  }

  elements_.reserve(dist.size());
  for (const auto& [w, _] : dist) elements_.push_back(w);
  std::sort(elements_.begin(), elements_.end(), [&](const SignedPerm& x, const SignedPerm& y) {
    int lx = klspecht::length(type, x), ly = klspecht::length(type, y);
    return lx != ly ? lx < ly : x < y;
  });
  lengths_.reserve(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    index_.emplace(elements_[k], k);
    lengths_.push_back(klspecht::length(type, elements_[k]));
  }

  const std::size_t ngens = gens_.size();
  right_.resize(elements_.size() * ngens);
  left_.resize(elements_.size() * ngens);
  for (std::size_t k = 0; k < elements_.size(); ++k)
    for (std::size_t g = 0; g < ngens; ++g) {
      right_[k * ngens + g] = index_.at(elements_[k] * gen_perms[g]);
      left_[k * ngens + g] = index_.at(gen_perms[g] * elements_[k]);
    }

  std::set<SignedPerm> refl;
  for (const auto& w : elements_) {
    auto winv = w.inverse();
    for (const auto& s : gen_perms) refl.insert(w * s * winv);
  }
  reflections_.assign(refl.begin(), refl.end());

  // Bruhat order: covers x < xt with l(xt) = l(x) + 1, then transitive closure
  // in increasing length order.
  lower_covers_.assign(elements_.size(), {});
  for (std::size_t k = 0; k < elements_.size(); ++k)
    for (const auto& t : reflections_) {
      std::size_t y = index_.at(elements_[k] * t);
      if (lengths_[y] == lengths_[k] + 1) lower_covers_[y].push_back(k);
    }
  below_.assign(elements_.size(), boost::dynamic_bitset<>(elements_.size()));
  for (std::size_t y = 0; y < elements_.size(); ++y) {
    below_[y].set(y);
    for (std::size_t x : lower_covers_[y]) below_[y] |= below_[x];
  }
}

std::shared_ptr<const WeylGroup> WeylGroup::get(WeylType type, const Caps& caps) {
  if (type.order() > caps.max_group_order)
    throw CapExceeded(type.to_string() + " has order " + std::to_string(type.order()) +
                      ", above the cap of " + std::to_string(caps.max_group_order));
  static std::mutex mutex;
  static std::map<WeylType, std::shared_ptr<const WeylGroup>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[type];
  if (!slot) slot = std::make_shared<const WeylGroup>(type, caps);
  return slot;
}

std::optional<std::size_t> WeylGroup::find(const SignedPerm& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeylGroup::index_of(const SignedPerm& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw std::invalid_argument(w.to_string() + " is not an element of " + type_.to_string());
  return it->second;
}

std::size_t WeylGroup::gen_slot(int i) const {
  if (!type_.is_generator(i)) throw std::out_of_range("generator index out of range for " + type_.to_string());
  return static_cast<std::size_t>(i - gens_.front());
}

std::size_t WeylGroup::right_multiply(std::size_t idx, int i) const {
  return right_[idx * gens_.size() + gen_slot(i)];
}

std::size_t WeylGroup::left_multiply(std::size_t idx, int i) const {
  return left_[idx * gens_.size() + gen_slot(i)];
}

bool WeylGroup::bruhat_leq(const SignedPerm& x, const SignedPerm& w) const {
  return bruhat_leq(index_of(x), index_of(w));
}

std::vector<SignedPerm> enumerate_group(WeylType type, const Caps& caps) {
  return WeylGroup::get(type, caps)->elements();
}

bool bruhat_leq(WeylType type, const SignedPerm& x, const SignedPerm& w, const Caps& caps) {
  return WeylGroup::get(type, caps)->bruhat_leq(x, w);
}

void validate_subset(WeylType type, std::span<const int> J) {
  for (int j : J)
    if (!type.is_generator(j))
      throw std::out_of_range("generator index " + std::to_string(j) + " is not in the index set of " +
                              type.to_string());
}

std::vector<SignedPerm> minimal_coset_reps(WeylType type, std::span<const int> J, const Caps& caps) {
  validate_subset(type, J);
  auto group = WeylGroup::get(type, caps);
  std::vector<SignedPerm> reps;
  for (std::size_t k = 0; k < group->size(); ++k) {
    bool minimal = std::all_of(J.begin(), J.end(), [&](int j) {
      return group->length(group->left_multiply(k, j)) > group->length(k);
    });
    if (minimal) reps.push_back(group->element(k));
  }
  return reps;
}

std::uint64_t parabolic_order(WeylType type, std::span<const int> J) {
  validate_subset(type, J);
  std::set<int> js(J.begin(), J.end());
  std::uint64_t order = 1;
  int i = type.kind == WeylKind::A ? 1 : 0;
  while (i < type.d) {
    if (!js.count(i)) {
      ++i;
      continue;
    }
    int start = i;
    while (i < type.d && js.count(i)) ++i;
    int run = i - start;
    order = sat_mul(order, start == 0 ? hyperoctahedral_order(run) : factorial(run + 1));
  }
  return order;
}

}  // namespace klspecht
