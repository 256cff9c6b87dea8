#pragma once

// Weyl groups of types A and B realized as centro-symmetric permutations of
// [-d, d].  Type A elements are the signed permutations with no negative
// entries in the window.

#include "klspecht/caps.hpp"

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace klspecht {

enum class WeylKind { A, B };

char to_char(WeylKind kind);
WeylKind parse_kind(std::string_view text);

/// Group W^A_{d-1} = S_d (generators s_1..s_{d-1}) or W^B_d (generators
/// s_0..s_{d-1}).  d counts the positive points permuted.
struct WeylType {
  WeylKind kind = WeylKind::A;
  int d = 1;

  static WeylType make(WeylKind kind, int d);
  static WeylType a(int d) { return make(WeylKind::A, d); }
  static WeylType b(int d) { return make(WeylKind::B, d); }

  std::vector<int> generator_indices() const;
  bool is_generator(int i) const;
  /// d! or 2^d d!, saturating at UINT64_MAX.
  std::uint64_t order() const;
  std::string to_string() const;

  friend auto operator<=>(const WeylType&, const WeylType&) = default;
};

/// Signed permutation in one-line notation |w(1),...,w(d)|; w(-i) = -w(i).
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> window);

  static SignedPerm identity(int d);
  /// Accepts "|3,-1,2|" (the bars are optional).
  static SignedPerm parse(std::string_view text);

  int rank() const { return static_cast<int>(window_.size()); }
  std::span<const int> window() const { return window_; }
  /// Value on any point of [-d, d]; 0 is fixed.
  int operator()(int point) const;

  SignedPerm inverse() const;
  std::string to_string() const;

  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<int> window_;
};

/// (u*v)(i) = u(v(i)).
SignedPerm operator*(const SignedPerm& u, const SignedPerm& v);
SignedPerm product(const SignedPerm& u, const SignedPerm& v);

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& w) const noexcept;
};

SignedPerm generator(WeylType type, int i);

/// #{k in [d] : w(k) < 0}
int neg(const SignedPerm& w);
/// #{i < j : w(i) > w(j)} on the window
int inversions(const SignedPerm& w);
bool belongs_to(WeylType type, const SignedPerm& w);

/// Coxeter length: inv(w) for type A, inv(w) + sum of |negative window entries|
/// for type B.
int length(WeylType type, const SignedPerm& w);

bool has_right_descent(WeylType type, const SignedPerm& w, int i);
bool has_left_descent(WeylType type, const SignedPerm& w, int i);

/// Reduced word (i_1,...,i_k) with w = s_{i_1}...s_{i_k}, found by stripping
/// right descents greedily (smallest index first).
std::vector<int> reduced_word(WeylType type, const SignedPerm& w);

/// Enumerated group with length table, multiplication tables by generators,
/// and the Bruhat order as one bitset per element.  Immutable once built.
class WeylGroup {
 public:
  explicit WeylGroup(WeylType type, const Caps& caps = {});

  /// Shared, lazily built instance per type.  Throws CapExceeded when the
  /// group order is above caps.max_group_order.
  static std::shared_ptr<const WeylGroup> get(WeylType type, const Caps& caps = {});

  WeylType type() const { return type_; }
  std::size_t size() const { return elements_.size(); }
  /// Sorted by (length, window).
  const std::vector<SignedPerm>& elements() const { return elements_; }
  const SignedPerm& element(std::size_t idx) const { return elements_.at(idx); }
  std::optional<std::size_t> find(const SignedPerm& w) const;
  std::size_t index_of(const SignedPerm& w) const;
  int length(std::size_t idx) const { return lengths_.at(idx); }
  std::size_t identity_index() const { return 0; }

  /// Index of w*s_i and s_i*w.
  std::size_t right_multiply(std::size_t idx, int i) const;
  std::size_t left_multiply(std::size_t idx, int i) const;

  const std::vector<SignedPerm>& reflections() const { return reflections_; }

  bool bruhat_leq(std::size_t x, std::size_t w) const { return below_[w].test(x); }
  bool bruhat_leq(const SignedPerm& x, const SignedPerm& w) const;
  /// Elements covered by w (x < w with l(x) = l(w) - 1).
  const std::vector<std::size_t>& lower_covers(std::size_t w) const { return lower_covers_[w]; }

 private:
  std::size_t gen_slot(int i) const;

  WeylType type_;
  std::vector<int> gens_;
  std::vector<SignedPerm> elements_;
  std::unordered_map<SignedPerm, std::size_t, SignedPermHash> index_;
  std::vector<int> lengths_;
  std::vector<std::size_t> right_;
  std::vector<std::size_t> left_;
  std::vector<SignedPerm> reflections_;
  std::vector<std::vector<std::size_t>> lower_covers_;
  std::vector<boost::dynamic_bitset<>> below_;
};

std::vector<SignedPerm> enumerate_group(WeylType type, const Caps& caps = {});

bool bruhat_leq(WeylType type, const SignedPerm& x, const SignedPerm& w, const Caps& caps = {});

/// Minimal length representatives of the right cosets W_J w, sorted by
/// (length, window).
std::vector<SignedPerm> minimal_coset_reps(WeylType type, std::span<const int> J,
                                           const Caps& caps = {});

/// Order of the parabolic subgroup W_J, computed from the components of J
/// in the Dynkin diagram.
std::uint64_t parabolic_order(WeylType type, std::span<const int> J);

void validate_subset(WeylType type, std::span<const int> J);

}  // namespace klspecht
