#include "klspecht/weyl.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <deque>
#include <map>
#include <random>
#include <set>

namespace klspecht {
namespace {

using Window = std::vector<int>;

// Right multiplication by a simple reflection, directly on windows.
Window times_s(Window w, int i) {
  if (i == 0) {
    w[0] = -w[0];
  } else {
    std::swap(w[i - 1], w[i]);
  }
  return w;
}

std::vector<int> gens_of(WeylType t) {
  std::vector<int> g;
  for (int i = t.kind == WeylKind::B ? 0 : 1; i < t.d; ++i) g.push_back(i);
  return g;
}

struct Bfs {
  std::map<Window, int> dist;
  std::map<Window, std::vector<int>> word;  // a reduced word read off the BFS tree
};

Bfs bfs(WeylType t) {
  Bfs out;
  Window e(t.d);
  for (int k = 0; k < t.d; ++k) e[k] = k + 1;
  out.dist[e] = 0;
  out.word[e] = {};
  std::deque<Window> queue{e};
  while (!queue.empty()) {
    Window w = queue.front();
    queue.pop_front();
    for (int i : gens_of(t)) {
      Window v = times_s(w, i);
      if (out.dist.count(v)) continue;
      out.dist[v] = out.dist[w] + 1;
      out.word[v] = out.word[w];
      out.word[v].push_back(i);
      queue.push_back(v);
    }
  }
  return out;
}

Window eval_word(int d, const std::vector<int>& word) {
  Window w(d);
  for (int k = 0; k < d; ++k) w[k] = k + 1;
  for (int i : word) w = times_s(w, i);
  return w;
}

// {x : x <= w} as products of subwords of one reduced word of w.
std::set<Window> subword_ideal(int d, const std::vector<int>& word) {
  std::set<Window> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << word.size()); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < word.size(); ++k)
      if (mask >> k & 1) sub.push_back(word[k]);
    out.insert(eval_word(d, sub));
  }
  return out;
}

std::vector<WeylType> small_types() {
  return {WeylType::a(1), WeylType::a(2), WeylType::a(3), WeylType::a(4), WeylType::b(1), WeylType::b(2), WeylType::b(3)};
}

TEST(SignedPerm, OneLineRoundTrip) {
  auto w = SignedPerm::parse("|3,-1,2|");
  EXPECT_EQ(w.to_string(), "|3,-1,2|");
  EXPECT_EQ(SignedPerm::parse("3,-1,2"), w);
  EXPECT_EQ(w(1), 3);
  EXPECT_EQ(w(-2), 1);
  EXPECT_EQ(w(0), 0);
  EXPECT_EQ(neg(w), 1);
}

TEST(SignedPerm, RejectsNonPermutations) {
  EXPECT_THROW(SignedPerm::parse("|1,1|"), std::invalid_argument);
  EXPECT_THROW(SignedPerm::parse("|1,-1|"), std::invalid_argument);
  EXPECT_THROW(SignedPerm::parse("|1,3|"), std::invalid_argument);
  EXPECT_THROW(SignedPerm::parse("|1,x|"), std::invalid_argument);
}

TEST(SignedPerm, CompositionAppliesRightFactorFirst) {
  auto u = SignedPerm::parse("|2,1,3|");
  auto v = SignedPerm::parse("|1,3,2|");
  auto uv = u * v;
  for (int i = -3; i <= 3; ++i) EXPECT_EQ(uv(i), u(v(i)));
  EXPECT_EQ(uv, SignedPerm::parse("|2,3,1|"));
}

TEST(SignedPerm, GroupAxiomsProperty) {
  std::mt19937 rng(5);
  auto elems = enumerate_group(WeylType::b(4));
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int k = 0; k < 500; ++k) {
    const auto& a = elems[pick(rng)];
    const auto& b = elems[pick(rng)];
    const auto& c = elems[pick(rng)];
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * a.inverse(), SignedPerm::identity(4));
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
  }
}

TEST(SignedPerm, GeneratorsActOnWindowPositions) {
  auto w = SignedPerm::parse("|3,-1,2|");
  EXPECT_EQ(w * generator(WeylType::b(3), 0), SignedPerm::parse("|-3,-1,2|"));
  EXPECT_EQ(w * generator(WeylType::b(3), 2), SignedPerm::parse("|3,2,-1|"));
  EXPECT_THROW(generator(WeylType::a(3), 0), std::out_of_range);
  EXPECT_THROW(generator(WeylType::b(3), 3), std::out_of_range);
}

TEST(WeylGroup, Orders) {
  std::uint64_t f = 1;
  for (int d = 1; d <= 6; ++d) {
    f *= d;
    EXPECT_EQ(enumerate_group(WeylType::a(d)).size(), f);
    EXPECT_EQ(WeylType::a(d).order(), f);
  }
  EXPECT_EQ(enumerate_group(WeylType::b(4)).size(), 384u);
  EXPECT_EQ(WeylType::b(3).order(), 48u);
}

TEST(WeylGroup, LengthMatchesBfsDistance) {
  for (auto t : small_types()) {
    auto oracle = bfs(t);
    auto group = WeylGroup::get(t);
    ASSERT_EQ(group->size(), oracle.dist.size()) << t.to_string();
    for (std::size_t k = 0; k < group->size(); ++k) {
      const auto& w = group->element(k);
      Window win(w.window().begin(), w.window().end());
      EXPECT_EQ(group->length(k), oracle.dist.at(win)) << w.to_string();
      EXPECT_EQ(length(t, w), oracle.dist.at(win)) << w.to_string();
    }
  }
}

TEST(WeylGroup, LongestElementLength) {
  EXPECT_EQ(length(WeylType::a(4), SignedPerm::parse("|4,3,2,1|")), 6);
  EXPECT_EQ(length(WeylType::b(3), SignedPerm::parse("|-1,-2,-3|")), 9);
  EXPECT_EQ(length(WeylType::b(2), SignedPerm::parse("|-2,1|")), 2);
  EXPECT_EQ(length(WeylType::b(2), SignedPerm::parse("|-1,-2|")), 4);
}

TEST(WeylGroup, SortedByLengthThenWindow) {
  auto group = WeylGroup::get(WeylType::b(3));
  for (std::size_t k = 1; k < group->size(); ++k) {
    auto prev = std::pair{group->length(k - 1), group->element(k - 1)};
    auto cur = std::pair{group->length(k), group->element(k)};
    EXPECT_LT(prev, cur);
  }
}

TEST(WeylGroup, ReducedWordsSpellTheElement) {
  for (auto t : small_types()) {
    for (const auto& w : enumerate_group(t)) {
      auto word = reduced_word(t, w);
      EXPECT_EQ(static_cast<int>(word.size()), length(t, w));
      Window win(w.window().begin(), w.window().end());
      EXPECT_EQ(eval_word(t.d, word), win);
    }
  }
}

TEST(WeylGroup, DescentsChangeLengthByOne) {
  for (auto t : small_types())
    for (const auto& w : enumerate_group(t))
      for (int i : t.generator_indices()) {
        const int up = length(t, w * generator(t, i)) - length(t, w);
        EXPECT_EQ(std::abs(up), 1);
        EXPECT_EQ(has_right_descent(t, w, i), up < 0);
        EXPECT_EQ(has_left_descent(t, w, i), length(t, generator(t, i) * w) < length(t, w));
      }
}

TEST(WeylGroup, BruhatMatchesSubwordCriterion) {
  for (auto t : small_types()) {
    auto oracle = bfs(t);
    auto group = WeylGroup::get(t);
    for (std::size_t w = 0; w < group->size(); ++w) {
      const auto& ww = group->element(w);
      auto ideal = subword_ideal(t.d, oracle.word.at(Window(ww.window().begin(), ww.window().end())));
      for (std::size_t x = 0; x < group->size(); ++x) {
        const auto& xx = group->element(x);
        const bool expect = ideal.count(Window(xx.window().begin(), xx.window().end())) > 0;
        ASSERT_EQ(group->bruhat_leq(x, w), expect) << t.to_string() << " " << xx.to_string() << " <= " << ww.to_string();
      }
    }
  }
}

TEST(WeylGroup, BruhatCoversRaiseLengthByOne) {
  auto group = WeylGroup::get(WeylType::b(3));
  for (std::size_t w = 0; w < group->size(); ++w)
    for (auto x : group->lower_covers(w)) {
      EXPECT_EQ(group->length(x) + 1, group->length(w));
      EXPECT_TRUE(group->bruhat_leq(x, w));
    }
  EXPECT_EQ(group->reflections().size(), 9u);  // number of positive roots of B_3
}

TEST(WeylGroup, CapExceeded) {
  Caps caps;
  caps.max_group_order = 100;
  EXPECT_THROW(WeylGroup::get(WeylType::a(5), caps), CapExceeded);
  EXPECT_NO_THROW(WeylGroup::get(WeylType::a(4), caps));
}

TEST(WeylType, Validation) {
  EXPECT_THROW(WeylType::make(WeylKind::A, 0), std::invalid_argument);
  EXPECT_EQ(parse_kind("b"), WeylKind::B);
  EXPECT_THROW(parse_kind("C"), std::invalid_argument);
  EXPECT_EQ(WeylType::b(3).generator_indices(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(WeylType::a(3).generator_indices(), (std::vector<int>{1, 2}));
}

// Brute force: the shortest element of every right coset W_J w.
std::vector<SignedPerm> coset_reps_oracle(WeylType t, const std::vector<int>& J) {
  std::vector<SignedPerm> sub{SignedPerm::identity(t.d)};
  for (std::size_t k = 0; k < sub.size(); ++k)
    for (int j : J) {
      auto u = sub[k] * generator(t, j);
      if (std::find(sub.begin(), sub.end(), u) == sub.end()) sub.push_back(u);
    }
  std::set<std::pair<int, SignedPerm>> reps;
  std::set<SignedPerm> seen;
  for (const auto& w : enumerate_group(t)) {
    if (seen.count(w)) continue;
    std::pair<int, SignedPerm> best{length(t, w), w};
    for (const auto& u : sub) {
      auto uw = u * w;
      seen.insert(uw);
      best = std::min(best, std::pair{length(t, uw), uw});
    }
    reps.insert(best);
  }
  std::vector<SignedPerm> out;
  for (const auto& [l, w] : reps) out.push_back(w);
  return out;
}

TEST(Cosets, MinimalRepsMatchBruteForce) {
  for (auto t : small_types()) {
    auto gens = t.generator_indices();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
      std::vector<int> J;
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (mask >> k & 1) J.push_back(gens[k]);
      auto reps = minimal_coset_reps(t, J);
      EXPECT_EQ(reps, coset_reps_oracle(t, J)) << t.to_string() << " mask " << mask;
      EXPECT_EQ(reps.size() * parabolic_order(t, J), t.order());
    }
  }
}

TEST(Cosets, TypeBd3J12) {
  const std::vector<int> J{1, 2};
  auto reps = minimal_coset_reps(WeylType::b(3), J);
  ASSERT_EQ(reps.size(), 8u);
  EXPECT_EQ(reps.front(), SignedPerm::identity(3));
  EXPECT_EQ(reps.back().to_string(), "|-3,-2,-1|");
}

TEST(Cosets, RejectsBadSubsets) {
  const std::vector<int> zero{0}, big{3};
  EXPECT_THROW(validate_subset(WeylType::a(3), zero), std::out_of_range);
  EXPECT_THROW(validate_subset(WeylType::b(3), big), std::out_of_range);
}

TEST(Caps, FromEnvironment) {
  ::setenv("CAP_GROUP_ORDER", "123", 1);
  ::setenv("CAP_COSETS", "45", 1);
  auto caps = Caps::from_env();
  EXPECT_EQ(caps.max_group_order, 123u);
  EXPECT_EQ(caps.max_cosets, 45u);
  ::setenv("CAP_COSETS", "0", 1);
  EXPECT_THROW(Caps::from_env(), std::invalid_argument);
  ::setenv("CAP_COSETS", "many", 1);
  EXPECT_THROW(Caps::from_env(), std::invalid_argument);
  ::unsetenv("CAP_GROUP_ORDER");
  ::unsetenv("CAP_COSETS");
  EXPECT_EQ(Caps::from_env().max_group_order, 10'000u);
}

}  // namespace
}  // namespace klspecht
