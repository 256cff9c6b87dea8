#pragma once

// Compositions of types A and B, their Young diagrams and tableaux.
//
// Type B conventions: a composition is stored as the full centro-symmetric
// list (l_{-r}, ..., l_0, ..., l_r) with l_0 odd and total 2d+1.  The diagram
// has rows -r..r (top to bottom); the middle row is {(0,j) : |j| <= l_0/2},
// row i >= 1 is {(i,j) : 0 <= j < l_i} and row -i is its negation.  Fillings
// take values in [-d, d] with T(-c) = -T(c) and the center cell holding 0.

#include "klspecht/weyl.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace klspecht {

class Composition {
 public:
  static Composition type_a(std::vector<int> parts);
  /// Full centro-symmetric part list.
  static Composition type_b(std::vector<int> parts);
  /// (l_0; l_1..l_r) -> (l_r..l_1, l_0, l_1..l_r).
  static Composition type_b_half(int center, const std::vector<int>& positive_parts);
  /// "2,1" (type A) or "2,1:3" / full "1,2,3,2,1" (type B).
  static Composition parse(WeylKind kind, std::string_view text);

  WeylKind kind() const { return kind_; }
  int d() const { return d_; }
  int n() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  /// l_0 (type B only).
  int center() const;
  /// floor(l_0 / 2); 0 for type A.
  int center_half() const;
  /// Type A: all parts.  Type B: (l_1, ..., l_r).
  std::vector<int> positive_parts() const;
  bool is_partition() const;
  WeylType weyl_type() const { return WeylType::make(kind_, d_); }
  std::string to_string() const;
  /// Kind-qualified, e.g. "B(1,3,1)".
  std::string label() const { return std::string(1, to_char(kind_)) + to_string(); }

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  Composition(WeylKind kind, std::vector<int> parts, int d) : kind_(kind), parts_(std::move(parts)), d_(d) {}

  WeylKind kind_ = WeylKind::A;
  std::vector<int> parts_;
  int d_ = 0;
};

/// Lambda^kind(n, d), sorted by parts.  Even n in type B selects the
/// l_0 = 1 members of Lambda^B(n+1, d), written in the same full form.
std::vector<Composition> compositions(WeylKind kind, int n, int d);
/// Every composition for rank d (type B: all odd lengths), sorted by (n, parts).
std::vector<Composition> all_compositions(WeylKind kind, int d);
std::vector<Composition> partitions(WeylKind kind, int d);

/// Generator subset of the Young subgroup.  Type A removes the partial sums
/// l_1, l_1+l_2, ...; type B removes h, h+l_1, ... with h = floor(l_0/2).
std::vector<int> composition_to_J(const Composition& shape);
/// Human-readable factorization, e.g. "B_1 x S_2".
std::string young_subgroup(const Composition& shape);

struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Cell layout of a composition.  Rows are addressed by position k
/// (0 = top row) and cells within a row by position j (0 = leftmost).
class Diagram {
 public:
  explicit Diagram(const Composition& shape);

  std::size_t num_rows() const { return rows_.size(); }
  int row_index(std::size_t k) const { return rows_.at(k); }
  const std::vector<int>& row_columns(std::size_t k) const { return cols_.at(k); }
  Cell cell(std::size_t k, std::size_t j) const { return {rows_.at(k), cols_.at(k).at(j)}; }
  std::vector<Cell> cells() const;
  std::size_t size() const;

  struct Position {
    std::size_t row;
    std::size_t slot;
  };
  /// Cells grouped by column coordinate (increasing), each group top to bottom.
  std::vector<std::vector<Position>> columns() const;
  std::vector<int> column_indices() const;

 private:
  std::vector<int> rows_;
  std::vector<std::vector<int>> cols_;
};

/// A filling of a diagram, stored row by row in diagram order.
class Tableau {
 public:
  Tableau(Composition shape, std::vector<std::vector<int>> rows);

  const Composition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(std::size_t row, std::size_t slot) const { return rows_.at(row).at(slot); }

  bool is_row_standard() const;
  bool is_standard() const;

  /// One line: "(1,2)/(3)".
  std::string to_string() const;
  /// Multi-line grid with cells aligned by column coordinate.
  std::string render() const;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  Composition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Row-equivalence class, represented by its unique row-standard member.
class Tabloid {
 public:
  const Tableau& representative() const { return rep_; }
  std::string to_string() const { return "{" + rep_.to_string() + "}"; }

  friend auto operator<=>(const Tabloid&, const Tabloid&) = default;
  friend Tabloid to_tabloid(const Tableau& t);

 private:
  explicit Tabloid(Tableau rep) : rep_(std::move(rep)) {}
  Tableau rep_;
};

Tabloid to_tabloid(const Tableau& t);

/// Letter relabelling (T.w)(c) = w(T(c)).
Tableau act_on_letters(const Tableau& t, const SignedPerm& w);

std::vector<Tableau> enumerate_row_standard(const Composition& shape);
std::vector<Tableau> enumerate_standard(const Composition& shape);

/// How a row-standard tableau is read into a Weyl group element.  The reading
/// word lists the entries of the positive half (type B: right half of the middle
/// row, then rows 1..r) in row order "top" or "bottom"; the Inverse variants
/// take the inverse of the reading word.
enum class MapVariant { InverseTop, InverseBottom, DirectTop, DirectBottom };

std::string to_string(MapVariant variant);
MapVariant parse_map_variant(std::string_view text);
std::vector<MapVariant> all_map_variants();

std::vector<int> reading_word(const Tableau& t, bool top_to_bottom);
/// Reference tableau T_0: the positive half filled 1..d in reading order.
Tableau initial_tableau(const Composition& shape, bool top_to_bottom = true);

/// Throws std::invalid_argument for a non-row-standard tableau.
SignedPerm tableau_to_coset_rep(const Tableau& t, MapVariant variant);

struct BijectionCheck {
  std::size_t row_standard = 0;
  std::size_t cosets = 0;
  std::size_t images_in_cosets = 0;
  std::size_t distinct_images = 0;
  bool bijective() const {
    return row_standard == cosets && images_in_cosets == cosets && distinct_images == cosets;
  }
};

/// Compares the image of rStd(shape) with D_J for J = composition_to_J(shape).
BijectionCheck check_bijection(const Composition& shape, MapVariant variant, const Caps& caps = {});

}  // namespace klspecht
