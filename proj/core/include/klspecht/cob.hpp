#pragma once

// Change of basis from Specht vectors to the Kazhdan-Lusztig basis of M^J,
// and the unitriangularity certification over a space of conventions.

#include "klspecht/heckemod.hpp"
#include "klspecht/shapes.hpp"
#include "klspecht/specht.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace klspecht {

/// a_{x,T} read off from the KL expansion of the embedded Specht vector
/// (PVersion), or as sum_R c_{R,T} m_{x,w_R}(1) (MVersion).
enum class AVariant { PVersion, MVersion };
enum class SignMode { Strict, UpToSign };
/// AsPrinted: support lies below the leading representative; Reversed: above.
enum class Orientation { AsPrinted, Reversed };
/// Leading representative of a column: w_T from the reading map, or the
/// Bruhat-extremal element of the column's support.
enum class Leading { MapRep, SupportExtremal };

std::string to_string(AVariant v);
std::string to_string(SignMode v);
std::string to_string(Orientation v);
std::string to_string(Leading v);
AVariant parse_a_variant(std::string_view text);
SignMode parse_sign_mode(std::string_view text);
Orientation parse_orientation(std::string_view text);
Leading parse_leading(std::string_view text);

struct ConventionProfile {
  KLSide kl_side = KLSide::Positive;
  MapVariant map_variant = MapVariant::InverseTop;
  AVariant a_variant = AVariant::PVersion;
  SignMode sign_mode = SignMode::Strict;
  Orientation orientation = Orientation::AsPrinted;
  Leading leading = Leading::MapRep;

  /// "side/map/a/sign/orientation/leading", e.g.
  /// "negative/inverse-top/p/strict/as-printed/map-rep".
  std::string name() const;
  static ConventionProfile parse(std::string_view name);

  friend auto operator<=>(const ConventionProfile&, const ConventionProfile&) = default;
};

/// Every combination of the six knobs, in a fixed order.
std::vector<ConventionProfile> all_profiles();

/// Raised when a tabloid's representative is not in D_J.
class InvalidMapVariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {R} -> M_{w_R}.
ModuleVector embed(const TabloidCombo& v, std::shared_ptr<const ParabolicContext> ctx, MapVariant variant);

/// Coordinates of v in the KL basis (via the p table).
std::vector<LaurentPoly> kl_coordinates(const ModuleVector& v, const KLTable& kl);

/// Everything about one shape that does not depend on the profile: the
/// parabolic context, both KL tables and the c-matrix.
class CobInstance {
 public:
  explicit CobInstance(Composition shape, const Caps& caps = {});

  const Composition& shape() const { return shape_; }
  const std::shared_ptr<const ParabolicContext>& context() const { return ctx_; }
  const KLTable& kl(KLSide side) const { return side == KLSide::Positive ? kl_pos_ : kl_neg_; }
  const CMatrix& c() const { return c_; }
  /// Non-empty when the reading map is not a bijection rStd -> D_J.
  const std::optional<std::string>& map_error(MapVariant v) const { return map_errors_.at(static_cast<std::size_t>(v)); }
  /// w_R for every row-standard R (only meaningful when map_error is empty).
  const std::vector<SignedPerm>& row_reps(MapVariant v) const { return row_reps_.at(static_cast<std::size_t>(v)); }

 private:
  Composition shape_;
  std::shared_ptr<const ParabolicContext> ctx_;
  KLTable kl_pos_;
  KLTable kl_neg_;
  CMatrix c_;
  std::vector<std::optional<std::string>> map_errors_;
  std::vector<std::vector<SignedPerm>> row_reps_;
};

struct AMatrix {
  Composition shape;
  std::vector<int> J;
  ConventionProfile profile;
  std::vector<SignedPerm> reps;    // rows, D_J order
  std::vector<Tableau> standard;   // columns
  /// a_{x,T} evaluated at q = 1; [x][T].
  std::vector<std::vector<Integer>> entries;
  /// Embedded Specht vectors in the standard basis at q = 1; [w][T].
  std::vector<std::vector<Integer>> standard_coords;
  /// Index of w_T in D_J under the profile's map variant.
  std::vector<std::size_t> map_reps;
  /// Set when the map variant is not a bijection; entries are then empty.
  std::optional<std::string> invalid;
  /// Bruhat order restricted to D_J: leq[x][w].
  std::vector<std::vector<bool>> leq;
};

AMatrix a_matrix(const CobInstance& instance, const ConventionProfile& profile);
AMatrix a_matrix(const Composition& shape, const ConventionProfile& profile, const Caps& caps = {});

enum class ViolationKind { InvalidMap, ZeroColumn, NoLeading, Diagonal, Support, LeadingCollision };
std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::size_t column = 0;             // standard tableau index
  std::optional<std::size_t> row;     // D_J index
  Integer value = 0;
  std::string message;
};

struct CertResult {
  bool pass = false;
  std::vector<std::optional<std::size_t>> leading;  // per column
  std::vector<Integer> diagonal;                    // a at the leading row, 0 if none
  std::vector<Violation> violations;
};

CertResult check_unitriangular(const AMatrix& a);

/// Support test for the c-matrix: c_{R,T} != 0 implies w_R <= w_T (AsPrinted)
/// or w_R >= w_T (Reversed), plus c_{T,T} = 1.
struct CrtCheck {
  bool unit_diagonal = true;
  bool holds_as_printed = true;
  bool holds_reversed = true;
  std::vector<std::string> counterexamples_as_printed;
  std::vector<std::string> counterexamples_reversed;
  bool holds(Orientation o) const { return o == Orientation::AsPrinted ? holds_as_printed : holds_reversed; }
};

CrtCheck check_crt(const CMatrix& c, WeylType type, MapVariant variant, const Caps& caps = {});

struct CrtCertificate {
  WeylKind kind;
  MapVariant variant;
  std::vector<std::string> shapes;
  bool unit_diagonal = true;
  bool holds_as_printed = true;
  bool holds_reversed = true;
  std::vector<std::string> counterexamples;
  /// Folds one shape's check into the certificate.
  void absorb(const std::string& shape, const CrtCheck& check);
  /// The orientations valid on every shape.
  std::vector<Orientation> certified() const;
};

CrtCertificate certify_crt_orientation(WeylKind kind, const std::vector<Composition>& shapes, MapVariant variant,
                                       const Caps& caps = {});

struct InstanceOutcome {
  std::string shape;
  bool pass = false;
  bool crt_pass = false;
  std::vector<std::string> diagonal;
  std::vector<Violation> violations;
};

struct ProfileOutcome {
  ConventionProfile profile;
  std::vector<InstanceOutcome> instances;
  bool passes_all() const;
  bool crt_all() const;
  std::size_t pass_count() const;
};

struct DiscoveryReport {
  std::vector<std::string> instances;
  std::vector<ProfileOutcome> profiles;  // all_profiles() order
  std::vector<CrtCertificate> crt;       // per (kind, map variant) present in the instances

  std::vector<ConventionProfile> surviving() const;
  /// Survivors ranked: strict before up-to-sign, then CRT-consistent first,
  /// then profile order.
  std::vector<ConventionProfile> ranked_survivors() const;
  std::optional<ConventionProfile> preferred() const;
};

/// Evaluates every profile on every instance.  jobs = 0 picks the hardware
/// concurrency; the report does not depend on jobs.
DiscoveryReport discover_conventions(const std::vector<Composition>& instances, const Caps& caps = {},
                                     unsigned jobs = 1);

/// Instance set used for certification: type A partitions of d <= max_a and
/// type B partitions of d <= max_b.
std::vector<Composition> certification_instances(int max_a, int max_b);

}  // namespace klspecht
