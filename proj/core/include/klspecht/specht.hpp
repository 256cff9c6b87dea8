#pragma once

// Specht vectors as signed sums of tabloids over the column group.

#include "klspecht/shapes.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace klspecht {

/// Integer combination of tabloids of one shape.
class TabloidCombo {
 public:
  using Terms = std::map<Tabloid, std::int64_t>;

  const Terms& terms() const { return terms_; }
  std::int64_t coeff(const Tabloid& t) const;
  bool is_zero() const { return terms_.empty(); }
  void add(const Tabloid& t, std::int64_t c);

  TabloidCombo& operator+=(const TabloidCombo& other);
  TabloidCombo& operator*=(std::int64_t scalar);
  friend TabloidCombo operator-(TabloidCombo v) { return v *= -1; }
  friend bool operator==(const TabloidCombo&, const TabloidCombo&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Letter permutations preserving the letter set of every column of t
/// (type B: centro-symmetric ones).
std::vector<SignedPerm> column_group(const Tableau& t);

/// v_T = sum over the column group of (-1)^l(w) {T.w}.
TabloidCombo specht_vector(const Tableau& t);

/// Acts by the simple reflection s_i on the letters of every tabloid.
TabloidCombo specht_action(const TabloidCombo& v, int i);

/// c_{R,T}: rows are the row-standard tableaux (enumeration order), columns the
/// standard ones.
struct CMatrix {
  Composition shape;
  std::vector<Tableau> row_standard;
  std::vector<Tableau> standard;
  std::vector<std::vector<std::int64_t>> entries;  // [R][T]

  std::int64_t at(std::size_t r, std::size_t t) const { return entries.at(r).at(t); }
  /// Column T as a tabloid combination.
  TabloidCombo column(std::size_t t) const;
};

CMatrix c_matrix(const Composition& shape);

/// Rank over Q of an integer matrix.
std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& matrix);

/// Rank of the standard Specht vectors in tabloid coordinates.
std::size_t specht_rank(const Composition& shape);

}  // namespace klspecht
