#include "klspecht/specht.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klspecht {

std::int64_t TabloidCombo::coeff(const Tabloid& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? 0 : it->second;
}

void TabloidCombo::add(const Tabloid& t, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TabloidCombo& TabloidCombo::operator+=(const TabloidCombo& other) {
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

TabloidCombo& TabloidCombo::operator*=(std::int64_t scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= scalar;
  return *this;
}

std::string TabloidCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    first = false;
    std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) os << mag;
    os << t.to_string();
  }
  return os.str();
}

namespace {

// A set of letters permuted among themselves.  Signed blocks (the column
// through the center in type B) also allow sign changes; letters are then
// absolute values.
struct Block {
  std::vector<int> letters;
  bool is_signed = false;
};

std::vector<Block> column_blocks(const Tableau& t) {
  Diagram diagram(t.shape());
  std::vector<Block> blocks;
  const auto columns = diagram.columns();
  const auto col_ids = diagram.column_indices();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const int col = col_ids[c];
    Block block;
    for (const auto& p : columns[c]) {
      int v = t.entry(p.row, p.slot);
      if (t.shape().kind() == WeylKind::A) {
        block.letters.push_back(v);
      } else if (col == 0) {
        if (v > 0) block.letters.push_back(v);
        if (v < 0) block.letters.push_back(-v);
      } else if (col > 0) {
        block.letters.push_back(v);
      }
    }
    if (t.shape().kind() == WeylKind::B && col < 0) continue;
    block.is_signed = t.shape().kind() == WeylKind::B && col == 0;
    std::sort(block.letters.begin(), block.letters.end());
    block.letters.erase(std::unique(block.letters.begin(), block.letters.end()), block.letters.end());
    if (!block.letters.empty()) blocks.push_back(std::move(block));
  }
  return blocks;
}

void expand(const std::vector<Block>& blocks, std::size_t b, std::vector<int>& image, int d,
            std::vector<SignedPerm>& out) {
  if (b == blocks.size()) {
    std::vector<int> window(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i) window[i - 1] = image[i];
    out.emplace_back(std::move(window));
    return;
  }
  const auto& letters = blocks[b].letters;
  const std::size_t k = letters.size();
  std::vector<int> targets = letters;
  do {
    const std::uint64_t masks = blocks[b].is_signed ? (std::uint64_t{1} << k) : 1;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      for (std::size_t j = 0; j < k; ++j) {
        int s = letters[j];
        int t = targets[j];
        if ((mask >> j) & 1) t = -t;
        // letter s -> t, and -s -> -t
        if (s > 0)
          image[s] = t;
        else
          image[-s] = -t;
      }
      expand(blocks, b + 1, image, d, out);
    }
  } while (std::next_permutation(targets.begin(), targets.end()));
}

}  // namespace

std::vector<SignedPerm> column_group(const Tableau& t) {
  const int d = t.shape().d();
  auto blocks = column_blocks(t);
  std::vector<int> image(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 1; i <= d; ++i) image[i] = i;
  std::vector<SignedPerm> out;
  expand(blocks, 0, image, d, out);
  std::sort(out.begin(), out.end());
  return out;
}

TabloidCombo specht_vector(const Tableau& t) {
  const WeylType type = t.shape().weyl_type();
  TabloidCombo v;
  for (const auto& w : column_group(t)) {
    std::int64_t sign = length(type, w) % 2 == 0 ? 1 : -1;
    v.add(to_tabloid(act_on_letters(t, w)), sign);
  }
  return v;
}

TabloidCombo specht_action(const TabloidCombo& v, int i) {
  TabloidCombo out;
  for (const auto& [tab, c] : v.terms()) {
    const auto& rep = tab.representative();
    SignedPerm s = generator(rep.shape().weyl_type(), i);
    out.add(to_tabloid(act_on_letters(rep, s)), c);
  }
  return out;
}

TabloidCombo CMatrix::column(std::size_t t) const {
  TabloidCombo v;
  for (std::size_t r = 0; r < row_standard.size(); ++r) v.add(to_tabloid(row_standard[r]), entries[r].at(t));
  return v;
}

CMatrix c_matrix(const Composition& shape) {
  CMatrix out{shape, enumerate_row_standard(shape), enumerate_standard(shape), {}};
  std::map<Tabloid, std::size_t> row_of;
  for (std::size_t r = 0; r < out.row_standard.size(); ++r) row_of.emplace(to_tabloid(out.row_standard[r]), r);
  out.entries.assign(out.row_standard.size(), std::vector<std::int64_t>(out.standard.size(), 0));
  for (std::size_t t = 0; t < out.standard.size(); ++t) {
    const auto v = specht_vector(out.standard[t]);
    for (const auto& [tab, c] : v.terms()) out.entries[row_of.at(tab)][t] = c;
  }
  return out;
}

std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& matrix) {
  using boost::multiprecision::cpp_rational;
  if (matrix.empty()) return 0;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix[0].size();
  std::vector<std::vector<cpp_rational>> a(rows, std::vector<cpp_rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = matrix[i].at(j);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      cpp_rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t specht_rank(const Composition& shape) {
  return rational_rank(c_matrix(shape).entries);
}

}  // namespace klspecht
