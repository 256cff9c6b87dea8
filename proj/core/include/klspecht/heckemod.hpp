#pragma once

// The induced trivial module M^J = triv (x)_{H_J} H over the Hecke algebra with
// quadratic relation H_s^2 = (q^-1 - q) H_s + 1, its bar involution, and the
// Kazhdan-Lusztig basis.

#include "klspecht/laurent.hpp"
#include "klspecht/weyl.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace klspecht {

/// Which bar-invariant local element builds the KL basis:
///   Positive: H_s + q,     off-diagonal coefficients in qZ[q]
///   Negative: H_s - q^-1,  off-diagonal coefficients in q^-1 Z[q^-1]
enum class KLSide { Positive, Negative };

std::string to_string(KLSide side);
KLSide parse_side(std::string_view text);

enum class ActionCase {
  Up,    // w s in D_J and longer:  M_w H_s = M_{ws}
  Down,  // w s in D_J and shorter: M_w H_s = M_{ws} + (q^-1 - q) M_w
  Stay,  // w s not in D_J:          M_w H_s = q^-1 M_w
};

struct ActionStep {
  ActionCase kind;
  std::size_t target;  // index of ws in D_J; equals the source for Stay
};

/// D_J for a fixed (type, J) plus the generator action table on it.
class ParabolicContext {
 public:
  ParabolicContext(WeylType type, std::vector<int> J, const Caps& caps = {});

  static std::shared_ptr<const ParabolicContext> create(WeylType type, std::vector<int> J,
                                                        const Caps& caps = {});

  WeylType type() const { return type_; }
  /// Sorted, duplicate free.
  const std::vector<int>& J() const { return J_; }
  const WeylGroup& group() const { return *group_; }

  std::size_t size() const { return reps_.size(); }
  const std::vector<SignedPerm>& reps() const { return reps_; }
  const SignedPerm& rep(std::size_t r) const { return reps_.at(r); }
  std::optional<std::size_t> find(const SignedPerm& w) const;
  std::size_t index_of(const SignedPerm& w) const;
  std::size_t group_index(std::size_t r) const { return group_idx_.at(r); }
  int length(std::size_t r) const { return group_->length(group_idx_.at(r)); }

  ActionStep step(std::size_t r, int i) const;
  bool bruhat_leq(std::size_t x, std::size_t w) const;
  /// Reduced word of the representative; every prefix lies in D_J.
  std::vector<int> reduced_word(std::size_t r) const;

 private:
  WeylType type_;
  std::vector<int> J_;
  std::shared_ptr<const WeylGroup> group_;
  std::vector<SignedPerm> reps_;
  std::vector<std::size_t> group_idx_;
  std::unordered_map<std::size_t, std::size_t> rep_of_group_idx_;
  std::vector<ActionStep> steps_;  // rep-major, one slot per generator
};

/// Element of M^J in the standard basis {M_w : w in D_J}.
class ModuleVector {
 public:
  using Terms = std::map<std::size_t, LaurentPoly>;

  explicit ModuleVector(std::shared_ptr<const ParabolicContext> ctx);
  static ModuleVector basis(std::shared_ptr<const ParabolicContext> ctx, std::size_t r);

  const ParabolicContext& context() const { return *ctx_; }
  const std::shared_ptr<const ParabolicContext>& context_ptr() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  LaurentPoly coeff(std::size_t r) const;
  bool is_zero() const { return terms_.empty(); }

  void add(std::size_t r, const LaurentPoly& c);
  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector& operator-=(const ModuleVector& other);
  ModuleVector& operator*=(const LaurentPoly& scalar);

  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const LaurentPoly& s, ModuleVector v) { return v *= s; }
  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

  /// e.g. "M_|1,3,2| + (q)M_|1,2,3|"
  std::string to_string() const;

 private:
  void require_same_context(const ModuleVector& other) const;

  std::shared_ptr<const ParabolicContext> ctx_;
  Terms terms_;
};

/// v * H_i by the three-case rule.
ModuleVector act_generator(const ModuleVector& v, int i);
/// v * H_i^-1 = v * H_i - (q^-1 - q) v.
ModuleVector act_inverse_generator(const ModuleVector& v, int i);
/// Semilinear involution fixing M_e; bar(M_w) = M_e H_{i_1}^-1 ... H_{i_k}^-1.
ModuleVector bar_vector(const ModuleVector& v);
/// bar(M_w) computed along a caller-supplied reduced word of w.
ModuleVector bar_standard(std::shared_ptr<const ParabolicContext> ctx, std::size_t r,
                          std::span<const int> word);

/// Coordinates of the KL basis.  m[x][w] is the coefficient of M_x in the
/// KL element for w; p[x][w] is the coefficient of the KL element for x in M_w.
/// Both are indexed by positions in ctx->reps().
class KLTable {
 public:
  using Matrix = std::vector<std::vector<LaurentPoly>>;

  KLTable(std::shared_ptr<const ParabolicContext> ctx, KLSide side, Matrix m, Matrix p = {});

  const ParabolicContext& context() const { return *ctx_; }
  const std::shared_ptr<const ParabolicContext>& context_ptr() const { return ctx_; }
  KLSide side() const { return side_; }
  std::size_t size() const { return m_.size(); }
  const Matrix& m() const { return m_; }
  const Matrix& p() const { return p_; }
  bool has_p() const { return !p_.empty(); }
  const LaurentPoly& m_at(std::size_t x, std::size_t w) const { return m_.at(x).at(w); }
  const LaurentPoly& p_at(std::size_t x, std::size_t w) const { return p_.at(x).at(w); }

  /// The KL basis element for rep w in the standard basis.
  ModuleVector kl_element(std::size_t w) const;

  /// Test hook for negative controls.
  Matrix& mutable_m() { return m_; }
  Matrix& mutable_p() { return p_; }

 private:
  std::shared_ptr<const ParabolicContext> ctx_;
  KLSide side_;
  Matrix m_;
  Matrix p_;
};

/// Ascending-length construction with descending-length correction of the
/// bar-invariant parts.  Fills m only.  Throws std::logic_error if the result
/// fails the degree condition.
KLTable kl_basis(std::shared_ptr<const ParabolicContext> ctx, KLSide side);

/// Inverts m by back substitution over Z[q, q^-1].
KLTable p_table(KLTable kl);

/// kl_basis followed by p_table.
KLTable compute_kl_table(std::shared_ptr<const ParabolicContext> ctx, KLSide side);

/// Product of two square matrices over Z[q, q^-1].
KLTable::Matrix multiply(const KLTable::Matrix& a, const KLTable::Matrix& b);

}  // namespace klspecht
