#include "klspecht/shapes.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

namespace klspecht {
namespace {

// Every filling of the diagram, built cell by cell from a Diagram.  Type B
// fillings assign a signed value to each positive-half cell and mirror it.
std::vector<Tableau> all_fillings(const Composition& shape) {
  const Diagram diag(shape);
  const bool b = shape.kind() == WeylKind::B;
  std::vector<Cell> free_cells;
  for (std::size_t k = 0; k < diag.num_rows(); ++k)
    for (std::size_t j = 0; j < diag.row_columns(k).size(); ++j) {
      Cell c = diag.cell(k, j);
      if (!b || c.row > 0 || (c.row == 0 && c.col > 0)) free_cells.push_back(c);
    }
  const int d = shape.d();
  std::vector<int> letters(d);
  std::iota(letters.begin(), letters.end(), 1);
  std::vector<Tableau> out;
  do {
    for (int signs = 0; signs < (b ? 1 << d : 1); ++signs) {
      std::map<Cell, int> value;
      for (int k = 0; k < d; ++k) {
        const int v = (signs >> k & 1) ? -letters[k] : letters[k];
        value[free_cells[k]] = v;
        if (b) value[{-free_cells[k].row, -free_cells[k].col}] = -v;
      }
      if (b) value[{0, 0}] = 0;
      std::vector<std::vector<int>> rows(diag.num_rows());
      for (std::size_t k = 0; k < diag.num_rows(); ++k)
        for (std::size_t j = 0; j < diag.row_columns(k).size(); ++j) rows[k].push_back(value.at(diag.cell(k, j)));
      out.emplace_back(shape, rows);
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

bool rows_increase(const Tableau& t) {
  for (const auto& row : t.rows())
    if (!std::is_sorted(row.begin(), row.end()) || std::adjacent_find(row.begin(), row.end()) != row.end()) return false;
  return true;
}

bool columns_increase(const Tableau& t) {
  const Diagram diag(t.shape());
  std::map<int, std::vector<std::pair<int, int>>> by_col;  // col -> (row index, value)
  for (std::size_t k = 0; k < diag.num_rows(); ++k)
    for (std::size_t j = 0; j < diag.row_columns(k).size(); ++j)
      by_col[diag.cell(k, j).col].push_back({diag.row_index(k), t.entry(k, j)});
  for (auto& [col, cells] : by_col) {
    std::sort(cells.begin(), cells.end());
    for (std::size_t i = 1; i < cells.size(); ++i)
      if (cells[i - 1].second >= cells[i].second) return false;
  }
  return true;
}

std::uint64_t hook_count(const std::vector<int>& parts) {
  std::uint64_t n = 1;
  const int d = std::accumulate(parts.begin(), parts.end(), 0);
  for (int k = 2; k <= d; ++k) n *= k;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) {
      int below = 0;
      for (std::size_t r = i + 1; r < parts.size(); ++r)
        if (parts[r] > j) ++below;
      n /= static_cast<std::uint64_t>(parts[i] - j - 1 + below + 1);
    }
  return n;
}

std::vector<Composition> shapes_for_brute_force() {
  std::vector<Composition> out;
  for (int d = 1; d <= 5; ++d)
    for (const auto& c : all_compositions(WeylKind::A, d)) out.push_back(c);
  for (int d = 1; d <= 3; ++d)
    for (const auto& c : all_compositions(WeylKind::B, d)) out.push_back(c);
  return out;
}

TEST(Compositions, TypeBd3TableMatchesGolden) {
  std::ifstream in(std::string(KLSPECHT_GOLDEN_DIR) + "/compositions_B3.json");
  ASSERT_TRUE(in);
  const auto golden = nlohmann::json::parse(in);
  const auto comps = all_compositions(WeylKind::B, 3);
  ASSERT_EQ(comps.size(), golden["rows"].size());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    EXPECT_EQ(comps[k].parts(), golden["rows"][k]["parts"].get<std::vector<int>>());
    EXPECT_EQ(composition_to_J(comps[k]), golden["rows"][k]["J"].get<std::vector<int>>());
  }
  EXPECT_EQ(young_subgroup(comps[0]), "B_3");
  EXPECT_EQ(young_subgroup(comps[3]), "S_3");
}

TEST(Compositions, CountsAndOneToOneWithSubsets) {
  for (int d = 1; d <= 6; ++d) {
    auto comps = all_compositions(WeylKind::A, d);
    EXPECT_EQ(comps.size(), std::size_t{1} << (d - 1));
    std::set<std::vector<int>> Js;
    for (const auto& c : comps) Js.insert(composition_to_J(c));
    EXPECT_EQ(Js.size(), comps.size());
  }
  for (int d = 1; d <= 5; ++d) {
    auto comps = all_compositions(WeylKind::B, d);
    EXPECT_EQ(comps.size(), std::size_t{1} << d);
    std::set<std::vector<int>> Js;
    for (const auto& c : comps) Js.insert(composition_to_J(c));
    EXPECT_EQ(Js.size(), comps.size());
  }
}

TEST(Compositions, PartitionsSmallRanks) {
  std::vector<std::string> labels;
  for (const auto& c : partitions(WeylKind::B, 2)) labels.push_back(c.label());
  EXPECT_EQ(labels, (std::vector<std::string>{"B(5)", "B(1,3,1)", "B(2,1,2)", "B(1,1,1,1,1)"}));
  EXPECT_EQ(partitions(WeylKind::A, 5).size(), 7u);
  EXPECT_EQ(partitions(WeylKind::A, 6).size(), 11u);
}

TEST(Compositions, Parsing) {
  EXPECT_EQ(Composition::parse(WeylKind::A, "2,2").parts(), (std::vector<int>{2, 2}));
  EXPECT_EQ(Composition::parse(WeylKind::B, "2:3").parts(), (std::vector<int>{2, 3, 2}));
  EXPECT_EQ(Composition::parse(WeylKind::B, "1,2:1").parts(), (std::vector<int>{2, 1, 1, 1, 2}));
  EXPECT_EQ(Composition::parse(WeylKind::B, "1,2,1,2,1").d(), 3);
  EXPECT_EQ(Composition::type_b_half(3, {2}), Composition::type_b({2, 3, 2}));
  EXPECT_THROW(Composition::parse(WeylKind::A, "2,0"), std::invalid_argument);
  EXPECT_THROW(Composition::parse(WeylKind::A, "2,x"), std::invalid_argument);
  EXPECT_THROW(Composition::type_b({2, 2}), std::invalid_argument);
  EXPECT_THROW(Composition::type_b({1, 2, 2}), std::invalid_argument);
  EXPECT_THROW(Composition::type_b({2, 2, 2}), std::invalid_argument);
}

TEST(Compositions, YoungSubgroupGenerators) {
  EXPECT_EQ(composition_to_J(Composition::type_a({2, 2})), (std::vector<int>{1, 3}));
  EXPECT_EQ(composition_to_J(Composition::type_a({4})), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(composition_to_J(Composition::type_b({2, 3, 2})), (std::vector<int>{0, 2}));
  EXPECT_EQ(young_subgroup(Composition::type_a({2, 2})), "S_2 x S_2");
}

TEST(Tableaux, TypeA22Standard) {
  auto std22 = enumerate_standard(Composition::type_a({2, 2}));
  ASSERT_EQ(std22.size(), 2u);
  EXPECT_EQ(std22[0].to_string(), "(1,2)/(3,4)");
  EXPECT_EQ(std22[1].to_string(), "(1,3)/(2,4)");
}

TEST(Tableaux, EnumerationMatchesBruteForce) {
  for (const auto& shape : shapes_for_brute_force()) {
    std::set<Tableau> rstd, stdd;
    for (const auto& t : all_fillings(shape)) {
      if (!rows_increase(t)) continue;
      rstd.insert(t);
      if (columns_increase(t)) stdd.insert(t);
    }
    auto got_r = enumerate_row_standard(shape);
    auto got_s = enumerate_standard(shape);
    EXPECT_EQ(std::set<Tableau>(got_r.begin(), got_r.end()), rstd) << shape.label();
    EXPECT_EQ(std::set<Tableau>(got_s.begin(), got_s.end()), stdd) << shape.label();
    EXPECT_EQ(got_r.size(), rstd.size());
    EXPECT_EQ(got_s.size(), stdd.size());
    for (const auto& t : got_s) EXPECT_TRUE(t.is_standard());
  }
}

TEST(Tableaux, HookFormula) {
  for (int d = 1; d <= 7; ++d)
    for (const auto& shape : partitions(WeylKind::A, d))
      EXPECT_EQ(enumerate_standard(shape).size(), hook_count(shape.parts())) << shape.label();
  const std::vector<std::size_t> catalan{2, 5, 14, 42};
  for (int m = 2; m <= 5; ++m) EXPECT_EQ(enumerate_standard(Composition::type_a({m, m})).size(), catalan[m - 2]);
  const std::vector<std::size_t> three{1, 5, 42};
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(enumerate_standard(Composition::type_a({m, m, m})).size(), three[m - 1]);
}

TEST(Tableaux, TypeBRenderIsCentred) {
  auto t = initial_tableau(Composition::type_b({2, 3, 2}));
  EXPECT_EQ(t.to_string(), "(-3,-2)/(-1,0,1)/(2,3)");
  EXPECT_EQ(t.render(), "-3 -2\n-1  0  1\n    2  3\n");
  EXPECT_TRUE(t.is_standard());
}

TEST(Tableaux, ConstructorValidates) {
  const auto shape = Composition::type_a({2, 1});
  EXPECT_THROW(Tableau(shape, {{1, 2}}), std::invalid_argument);
  EXPECT_THROW(Tableau(shape, {{1, 2}, {2}}), std::invalid_argument);
  EXPECT_THROW(Tableau(shape, {{1}, {2, 3}}), std::invalid_argument);
  const auto b = Composition::type_b({1, 1, 1});
  EXPECT_THROW(Tableau(b, {{-1}, {0}, {-1}}), std::invalid_argument);
}

TEST(Tableaux, TabloidForgetsRowOrder) {
  const auto shape = Composition::type_a({2, 1});
  EXPECT_EQ(to_tabloid(Tableau(shape, {{2, 1}, {3}})), to_tabloid(Tableau(shape, {{1, 2}, {3}})));
  EXPECT_NE(to_tabloid(Tableau(shape, {{3, 1}, {2}})), to_tabloid(Tableau(shape, {{1, 2}, {3}})));
}

TEST(Tableaux, ActOnLettersRelabels) {
  const auto shape = Composition::type_a({2, 1});
  Tableau t(shape, {{1, 2}, {3}});
  EXPECT_EQ(act_on_letters(t, SignedPerm::parse("|3,1,2|")).rows(), (std::vector<std::vector<int>>{{3, 1}, {2}}));
  EXPECT_THROW(act_on_letters(t, SignedPerm::parse("|-3,1,2|")), std::invalid_argument);
}

TEST(ReadingMap, BijectionOntoCosets) {
  for (int d = 1; d <= 5; ++d)
    for (const auto& shape : partitions(WeylKind::A, d)) {
      auto check = check_bijection(shape, MapVariant::InverseTop);
      EXPECT_TRUE(check.bijective()) << shape.label();
      EXPECT_EQ(check.row_standard * parabolic_order(shape.weyl_type(), composition_to_J(shape)), shape.weyl_type().order());
    }
  for (const auto& shape : partitions(WeylKind::B, 3))
    EXPECT_TRUE(check_bijection(shape, MapVariant::InverseTop).bijective()) << shape.label();
}

TEST(ReadingMap, InitialTableauMapsToIdentity) {
  for (const auto& shape : {Composition::type_a({3, 2}), Composition::type_b({2, 3, 2}), Composition::type_b({1, 1, 3, 1, 1})})
    EXPECT_EQ(tableau_to_coset_rep(initial_tableau(shape), MapVariant::InverseTop), SignedPerm::identity(shape.d()));
}

TEST(ReadingMap, RejectsNonRowStandard) {
  Tableau t(Composition::type_a({2, 1}), {{2, 1}, {3}});
  EXPECT_THROW(tableau_to_coset_rep(t, MapVariant::InverseTop), std::invalid_argument);
  EXPECT_THROW(parse_map_variant("sideways"), std::invalid_argument);
  for (auto v : all_map_variants()) EXPECT_EQ(parse_map_variant(to_string(v)), v);
}

}  // namespace
}  // namespace klspecht
