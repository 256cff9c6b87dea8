#include "klspecht/shapes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klspecht {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string s(text);
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw std::invalid_argument("malformed part list '" + s + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Composition Composition::type_a(std::vector<int> parts) {
  if (parts.empty()) throw std::invalid_argument("a composition needs at least one part");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  int d = std::accumulate(parts.begin(), parts.end(), 0);
  return Composition(WeylKind::A, std::move(parts), d);
}

Composition Composition::type_b(std::vector<int> parts) {
  if (parts.size() % 2 == 0) throw std::invalid_argument("type B part lists have odd length (l_-r..l_r)");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  const std::size_t mid = parts.size() / 2;
  if (parts[mid] % 2 == 0) throw std::invalid_argument("the middle part l_0 must be odd");
  for (std::size_t i = 0; i < mid; ++i)
    if (parts[i] != parts[parts.size() - 1 - i]) throw std::invalid_argument("type B parts must be symmetric");
  int total = std::accumulate(parts.begin(), parts.end(), 0);
  return Composition(WeylKind::B, std::move(parts), (total - 1) / 2);
}

Composition Composition::type_b_half(int center, const std::vector<int>& positive_parts) {
  std::vector<int> full(positive_parts.rbegin(), positive_parts.rend());
  full.push_back(center);
  full.insert(full.end(), positive_parts.begin(), positive_parts.end());
  return type_b(std::move(full));
}

Composition Composition::parse(WeylKind kind, std::string_view text) {
  if (kind == WeylKind::A) return type_a(parse_int_list(text));
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return type_b(parse_int_list(text));
  auto center = parse_int_list(text.substr(colon + 1));
  if (center.size() != 1) throw std::invalid_argument("expected 'half:center' for a type B shape");
  return type_b_half(center[0], parse_int_list(text.substr(0, colon)));
}

int Composition::center() const {
  if (kind_ != WeylKind::B) throw std::logic_error("type A compositions have no center part");
  return parts_[parts_.size() / 2];
}

int Composition::center_half() const { return kind_ == WeylKind::B ? center() / 2 : 0; }

std::vector<int> Composition::positive_parts() const {
  if (kind_ == WeylKind::A) return parts_;
  return {parts_.begin() + static_cast<std::ptrdiff_t>(parts_.size() / 2 + 1), parts_.end()};
}

bool Composition::is_partition() const {
  auto pos = positive_parts();
  return std::is_sorted(pos.begin(), pos.end(), std::greater<>());
}

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

namespace {

void compositions_of(int total, int count, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (count == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  for (int p = 1; p <= total - (count - 1); ++p) {
    prefix.push_back(p);
    compositions_of(total - p, count - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(WeylKind kind, int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("compositions need n, d >= 1");
  std::vector<Composition> out;
  if (kind == WeylKind::A) {
    std::vector<std::vector<int>> raw;
    std::vector<int> prefix;
    compositions_of(d, n, prefix, raw);
    for (auto& parts : raw) out.push_back(Composition::type_a(std::move(parts)));
  } else {
    const int r = n / 2;
    for (int center = 1; center <= 2 * d + 1; center += 2) {
      if (n % 2 == 0 && center != 1) continue;
      int half_total = d - center / 2;
      std::vector<std::vector<int>> raw;
      std::vector<int> prefix;
      compositions_of(half_total, r, prefix, raw);
      for (auto& half : raw) out.push_back(Composition::type_b_half(center, half));
    }
  }
  std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) { return a.parts() < b.parts(); });
  return out;
}

std::vector<Composition> all_compositions(WeylKind kind, int d) {
  std::vector<Composition> out;
  if (kind == WeylKind::A) {
    for (int n = 1; n <= d; ++n) {
      auto level = compositions(kind, n, d);
      out.insert(out.end(), level.begin(), level.end());
    }
  } else {
    for (int n = 1; n <= 2 * d + 1; n += 2) {
      auto level = compositions(kind, n, d);
      out.insert(out.end(), level.begin(), level.end());
    }
  }
  return out;
}

std::vector<Composition> partitions(WeylKind kind, int d) {
  auto all = all_compositions(kind, d);
  std::vector<Composition> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const Composition& c) { return c.is_partition(); });
  return out;
}

std::vector<int> composition_to_J(const Composition& shape) {
  const WeylType type = shape.weyl_type();
  std::set<int> removed;
  auto pos = shape.positive_parts();
  int acc = shape.center_half();
  if (shape.kind() == WeylKind::B) removed.insert(acc);
  for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
    acc += pos[i];
    removed.insert(acc);
  }
  std::vector<int> J;
  for (int i : type.generator_indices())
    if (!removed.count(i)) J.push_back(i);
  return J;
}

std::string young_subgroup(const Composition& shape) {
  std::vector<std::string> factors;
  if (shape.kind() == WeylKind::B && shape.center_half() > 0)
    factors.push_back("B_" + std::to_string(shape.center_half()));
  for (int p : shape.positive_parts())
    if (p > 1) factors.push_back("S_" + std::to_string(p));
  if (factors.empty()) return "1";
  std::string out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out += " x " + factors[i];
  return out;
}

Diagram::Diagram(const Composition& shape) {
  const auto& parts = shape.parts();
  if (shape.kind() == WeylKind::A) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      rows_.push_back(static_cast<int>(i) + 1);
      std::vector<int> cols(parts[i]);
      std::iota(cols.begin(), cols.end(), 1);
      cols_.push_back(std::move(cols));
    }
    return;
  }
  const int r = static_cast<int>(parts.size() / 2);
  for (int i = -r; i <= r; ++i) {
    const int len = parts[static_cast<std::size_t>(i + r)];
    std::vector<int> cols(len);
    if (i == 0)
      std::iota(cols.begin(), cols.end(), -(len / 2));
    else if (i > 0)
      std::iota(cols.begin(), cols.end(), 0);
    else
      std::iota(cols.begin(), cols.end(), -(len - 1));
    rows_.push_back(i);
    cols_.push_back(std::move(cols));
  }
}

std::vector<Cell> Diagram::cells() const {
  std::vector<Cell> out;
  for (std::size_t k = 0; k < rows_.size(); ++k)
    for (int c : cols_[k]) out.push_back({rows_[k], c});
  return out;
}

std::size_t Diagram::size() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

std::vector<std::vector<Diagram::Position>> Diagram::columns() const {
  std::map<int, std::vector<Position>> by_col;
  for (std::size_t k = 0; k < rows_.size(); ++k)
    for (std::size_t j = 0; j < cols_[k].size(); ++j) by_col[cols_[k][j]].push_back({k, j});
  std::vector<std::vector<Position>> out;
  for (auto& [c, cells] : by_col) out.push_back(std::move(cells));
  return out;
}

std::vector<int> Diagram::column_indices() const {
  std::set<int> cols;
  for (const auto& row : cols_) cols.insert(row.begin(), row.end());
  return {cols.begin(), cols.end()};
}

Tableau::Tableau(Composition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const auto& parts = shape_.parts();
  if (rows_.size() != parts.size()) throw std::invalid_argument("tableau has the wrong number of rows");
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (rows_[k].size() != static_cast<std::size_t>(parts[k]))
      throw std::invalid_argument("tableau row " + std::to_string(k) + " has the wrong length");

  const int d = shape_.d();
  std::vector<int> seen;
  for (const auto& row : rows_) seen.insert(seen.end(), row.begin(), row.end());
  std::sort(seen.begin(), seen.end());
  std::vector<int> expected;
  if (shape_.kind() == WeylKind::A) {
    for (int v = 1; v <= d; ++v) expected.push_back(v);
  } else {
    for (int v = -d; v <= d; ++v) expected.push_back(v);
  }
  if (seen != expected) throw std::invalid_argument("tableau filling is not a bijection onto its letters");

  if (shape_.kind() == WeylKind::B) {
    const std::size_t last = rows_.size() - 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& row = rows_[k];
      const auto& mirror = rows_[last - k];
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != -mirror[row.size() - 1 - j])
          throw std::invalid_argument("type B tableau is not centro-symmetric");
    }
  }
}

bool Tableau::is_row_standard() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& row) {
    return std::adjacent_find(row.begin(), row.end(), std::greater_equal<>()) == row.end();
  });
}

bool Tableau::is_standard() const {
  if (!is_row_standard()) return false;
  Diagram diagram(shape_);
  for (const auto& column : diagram.columns())
    for (std::size_t k = 1; k < column.size(); ++k)
      if (entry(column[k - 1].row, column[k - 1].slot) >= entry(column[k].row, column[k].slot)) return false;
  return true;
}

std::string Tableau::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (k) out += '/';
    out += '(';
    for (std::size_t j = 0; j < rows_[k].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(rows_[k][j]);
    }
    out += ')';
  }
  return out;
}

std::string Tableau::render() const {
  Diagram diagram(shape_);
  auto cols = diagram.column_indices();
  const int lo = cols.front();
  std::size_t width = 1;
  for (const auto& row : rows_)
    for (int v : row) width = std::max(width, std::to_string(v).size());
  std::ostringstream os;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::string line;
    const auto& rc = diagram.row_columns(k);
    int cursor = lo;
    for (std::size_t j = 0; j < rc.size(); ++j) {
      for (; cursor < rc[j]; ++cursor) line += std::string(width + 1, ' ');
      std::string v = std::to_string(rows_[k][j]);
      line += std::string(width - v.size(), ' ') + v + ' ';
      ++cursor;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

Tabloid to_tabloid(const Tableau& t) {
  auto rows = t.rows();
  for (auto& row : rows) std::sort(row.begin(), row.end());
  return Tabloid(Tableau(t.shape(), std::move(rows)));
}

Tableau act_on_letters(const Tableau& t, const SignedPerm& w) {
  if (w.rank() != t.shape().d()) throw std::invalid_argument("size mismatch between tableau and permutation");
  if (t.shape().kind() == WeylKind::A && neg(w) > 0)
    throw std::invalid_argument("type A tableaux only admit permutations without sign changes");
  auto rows = t.rows();
  for (auto& row : rows)
    for (int& v : row) v = w(v);
  return Tableau(t.shape(), std::move(rows));
}

namespace {

/// Rows of a type B tableau from the middle set and the positive rows.
Tableau assemble_b(const Composition& shape, const std::vector<int>& middle_abs,
                   const std::vector<std::vector<int>>& positive_rows) {
  const std::size_t r = positive_rows.size();
  std::vector<std::vector<int>> rows(2 * r + 1);
  std::vector<int> middle{0};
  for (int a : middle_abs) {
    middle.push_back(a);
    middle.push_back(-a);
  }
  std::sort(middle.begin(), middle.end());
  rows[r] = std::move(middle);
  for (std::size_t i = 0; i < r; ++i) {
    auto row = positive_rows[i];
    std::sort(row.begin(), row.end());
    std::vector<int> mirror;
    for (auto it = row.rbegin(); it != row.rend(); ++it) mirror.push_back(-*it);
    rows[r + 1 + i] = std::move(row);
    rows[r - 1 - i] = std::move(mirror);
  }
  return Tableau(shape, std::move(rows));
}

}  // namespace

std::vector<Tableau> enumerate_row_standard(const Composition& shape) {
  std::vector<Tableau> out;
  const int d = shape.d();
  if (shape.kind() == WeylKind::A) {
    // labels[v-1] = row receiving letter v
    std::vector<int> labels;
    for (std::size_t k = 0; k < shape.parts().size(); ++k) labels.insert(labels.end(), shape.parts()[k], static_cast<int>(k));
    do {
      std::vector<std::vector<int>> rows(shape.parts().size());
      for (int v = 1; v <= d; ++v) rows[labels[v - 1]].push_back(v);
      out.emplace_back(shape, std::move(rows));
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
  }

  // Type B: label 0 = middle row, label i = positive row i.
  const auto pos = shape.positive_parts();
  std::vector<int> labels(shape.center_half(), 0);
  for (std::size_t i = 0; i < pos.size(); ++i) labels.insert(labels.end(), pos[i], static_cast<int>(i) + 1);
  do {
    std::vector<int> signed_letters;
    for (int v = 1; v <= d; ++v)
      if (labels[v - 1] != 0) signed_letters.push_back(v);
    const std::size_t k = signed_letters.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<int> middle;
      std::vector<std::vector<int>> positive_rows(pos.size());
      std::size_t bit = 0;
      for (int v = 1; v <= d; ++v) {
        int label = labels[v - 1];
        if (label == 0) {
          middle.push_back(v);
          continue;
        }
        int sv = (mask >> bit) & 1 ? -v : v;
        ++bit;
        positive_rows[label - 1].push_back(sv);
      }
      out.push_back(assemble_b(shape, middle, positive_rows));
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> enumerate_standard(const Composition& shape) {
  auto all = enumerate_row_standard(shape);
  std::vector<Tableau> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const Tableau& t) { return t.is_standard(); });
  return out;
}

std::string to_string(MapVariant variant) {
  switch (variant) {
    case MapVariant::InverseTop: return "inverse-top";
    case MapVariant::InverseBottom: return "inverse-bottom";
    case MapVariant::DirectTop: return "direct-top";
    case MapVariant::DirectBottom: return "direct-bottom";
  }
  return "?";
}

MapVariant parse_map_variant(std::string_view text) {
  for (auto v : all_map_variants())
    if (to_string(v) == text) return v;
  throw std::invalid_argument("unknown map variant '" + std::string(text) + "'");
}

std::vector<MapVariant> all_map_variants() {
  return {MapVariant::InverseTop, MapVariant::InverseBottom, MapVariant::DirectTop, MapVariant::DirectBottom};
}

namespace {

/// Positions of the positive half in reading order.
std::vector<Diagram::Position> positive_half(const Composition& shape, bool top_to_bottom) {
  Diagram diagram(shape);
  std::vector<std::vector<Diagram::Position>> rows;
  for (std::size_t k = 0; k < diagram.num_rows(); ++k) {
    const int row = diagram.row_index(k);
    std::vector<Diagram::Position> cells;
    const auto& cols = diagram.row_columns(k);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      bool positive = shape.kind() == WeylKind::A || row > 0 || (row == 0 && cols[j] > 0);
      if (positive) cells.push_back({k, j});
    }
    if (!cells.empty()) rows.push_back(std::move(cells));
  }
  if (!top_to_bottom) std::reverse(rows.begin(), rows.end());
  std::vector<Diagram::Position> out;
  for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace

std::vector<int> reading_word(const Tableau& t, bool top_to_bottom) {
  std::vector<int> word;
  for (const auto& p : positive_half(t.shape(), top_to_bottom)) word.push_back(t.entry(p.row, p.slot));
  return word;
}

Tableau initial_tableau(const Composition& shape, bool top_to_bottom) {
  Diagram diagram(shape);
  std::vector<std::vector<int>> rows;
  for (std::size_t k = 0; k < diagram.num_rows(); ++k) rows.emplace_back(diagram.row_columns(k).size(), 0);
  int next = 1;
  for (const auto& p : positive_half(shape, top_to_bottom)) rows[p.row][p.slot] = next++;
  if (shape.kind() == WeylKind::B) {
    const std::size_t last = rows.size() - 1;
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (std::size_t j = 0; j < rows[k].size(); ++j)
        if (rows[k][j] > 0) rows[last - k][rows[k].size() - 1 - j] = -rows[k][j];
  }
  return Tableau(shape, std::move(rows));
}

SignedPerm tableau_to_coset_rep(const Tableau& t, MapVariant variant) {
  if (!t.is_row_standard()) throw std::invalid_argument("tableau " + t.to_string() + " is not row standard");
  bool top = variant == MapVariant::InverseTop || variant == MapVariant::DirectTop;
  SignedPerm word(reading_word(t, top));
  bool inverse = variant == MapVariant::InverseTop || variant == MapVariant::InverseBottom;
  return inverse ? word.inverse() : word;
}

BijectionCheck check_bijection(const Composition& shape, MapVariant variant, const Caps& caps) {
  auto J = composition_to_J(shape);
  auto reps = minimal_coset_reps(shape.weyl_type(), J, caps);
  std::set<SignedPerm> rep_set(reps.begin(), reps.end());
  BijectionCheck check;
  check.cosets = reps.size();
  std::set<SignedPerm> images;
  for (const auto& t : enumerate_row_standard(shape)) {
    ++check.row_standard;
    auto w = tableau_to_coset_rep(t, variant);
    if (rep_set.count(w)) ++check.images_in_cosets;
    images.insert(w);
  }
  check.distinct_images = images.size();
  return check;
}

}  // namespace klspecht
