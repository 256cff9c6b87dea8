#include "klspecht/heckemod.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

namespace klspecht {
namespace {

std::vector<std::vector<int>> subsets(const std::vector<int>& gens) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
    std::vector<int> J;
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (mask >> k & 1) J.push_back(gens[k]);
    out.push_back(J);
  }
  return out;
}

oracle::Window window_of(const SignedPerm& w) { return {w.window().begin(), w.window().end()}; }

ModuleVector random_vector(std::shared_ptr<const ParabolicContext> ctx, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), exp(-2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, ctx->size() - 1);
  ModuleVector v(ctx);
  for (int k = 0; k < 4; ++k) v.add(pick(rng), LaurentPoly::monomial(coeff(rng), exp(rng)));
  return v;
}

TEST(Parabolic, ExampleTypeA3J1) {
  auto ctx = ParabolicContext::create(WeylType::a(3), {1});
  ASSERT_EQ(ctx->size(), 3u);
  EXPECT_EQ(ctx->rep(0).to_string(), "|1,2,3|");
  EXPECT_EQ(ctx->rep(1).to_string(), "|1,3,2|");
  EXPECT_EQ(ctx->rep(2).to_string(), "|3,1,2|");
  EXPECT_EQ(ctx->step(0, 1).kind, ActionCase::Stay);
  EXPECT_EQ(ctx->step(0, 2).kind, ActionCase::Up);
  EXPECT_EQ(ctx->step(1, 2).kind, ActionCase::Down);
}

TEST(Parabolic, RepsMatchOracle) {
  for (auto [b, d] : {std::pair{false, 3}, {false, 4}, {true, 2}, {true, 3}}) {
    const auto t = WeylType::make(b ? WeylKind::B : WeylKind::A, d);
    const auto g = oracle::bfs(b, d);
    for (const auto& J : subsets(t.generator_indices())) {
      auto ctx = ParabolicContext::create(t, J);
      oracle::Module mod(g, J);
      ASSERT_EQ(ctx->size(), mod.reps().size());
      for (std::size_t r = 0; r < ctx->size(); ++r) EXPECT_EQ(window_of(ctx->rep(r)), mod.reps()[r]);
    }
  }
}

TEST(Parabolic, ReducedWordPrefixesStayInDJ) {
  auto ctx = ParabolicContext::create(WeylType::b(3), {1, 2});
  for (std::size_t r = 0; r < ctx->size(); ++r) {
    auto word = ctx->reduced_word(r);
    EXPECT_EQ(static_cast<int>(word.size()), ctx->length(r));
    SignedPerm w = SignedPerm::identity(3);
    for (int i : word) {
      w = w * generator(ctx->type(), i);
      EXPECT_TRUE(ctx->find(w).has_value()) << w.to_string();
    }
    EXPECT_EQ(w, ctx->rep(r));
  }
}

TEST(Parabolic, CosetCap) {
  Caps caps;
  caps.max_cosets = 10;
  EXPECT_THROW(ParabolicContext::create(WeylType::a(4), {}, caps), CapExceeded);
  EXPECT_NO_THROW(ParabolicContext::create(WeylType::a(4), {1, 2}, caps));
}

TEST(Module, ActionMatchesOracle) {
  for (auto [b, d] : {std::pair{false, 4}, {true, 3}}) {
    const auto t = WeylType::make(b ? WeylKind::B : WeylKind::A, d);
    const auto g = oracle::bfs(b, d);
    for (const auto& J : subsets(t.generator_indices())) {
      auto ctx = ParabolicContext::create(t, J);
      oracle::Module mod(g, J);
      for (std::size_t r = 0; r < ctx->size(); ++r)
        for (int i : t.generator_indices()) {
          auto got = act_generator(ModuleVector::basis(ctx, r), i);
          auto want = mod.act(r, i);
          ASSERT_EQ(got.terms().size(), want.size());
          for (const auto& [x, c] : want) EXPECT_EQ(got.coeff(x), c);
        }
    }
  }
}

TEST(Module, QuadraticAndInverseProperty) {
  std::mt19937 rng(31);
  const LaurentPoly a = LaurentPoly::q(-1) - LaurentPoly::q();
  for (auto t : {WeylType::a(4), WeylType::b(3)})
    for (const auto& J : subsets(t.generator_indices())) {
      auto ctx = ParabolicContext::create(t, J);
      for (int k = 0; k < 10; ++k) {
        auto v = random_vector(ctx, rng);
        for (int i : t.generator_indices()) {
          auto h = act_generator(v, i);
          EXPECT_EQ(act_generator(h, i), a * h + v);
          EXPECT_EQ(act_inverse_generator(h, i), v);
        }
      }
    }
}

TEST(Module, BraidRelationsProperty) {
  std::mt19937 rng(17);
  for (auto t : {WeylType::a(4), WeylType::b(3)})
    for (const auto& J : subsets(t.generator_indices())) {
      auto ctx = ParabolicContext::create(t, J);
      for (int k = 0; k < 6; ++k) {
        auto v = random_vector(ctx, rng);
        for (int i : t.generator_indices())
          for (int j : t.generator_indices()) {
            if (i >= j) continue;
            int m = j - i > 1 ? 2 : 3;
            if (t.kind == WeylKind::B && i == 0 && j == 1) m = 4;
            ModuleVector lhs = v, rhs = v;
            for (int s = 0; s < m; ++s) {
              lhs = act_generator(lhs, s % 2 ? j : i);
              rhs = act_generator(rhs, s % 2 ? i : j);
            }
            EXPECT_EQ(lhs, rhs) << t.to_string() << " s" << i << " s" << j;
          }
      }
    }
}

TEST(Bar, InvolutionAndSemilinearProperty) {
  std::mt19937 rng(3);
  for (auto t : {WeylType::a(4), WeylType::b(3)})
    for (const auto& J : subsets(t.generator_indices())) {
      auto ctx = ParabolicContext::create(t, J);
      for (int k = 0; k < 8; ++k) {
        auto v = random_vector(ctx, rng);
        EXPECT_EQ(bar_vector(bar_vector(v)), v);
        auto scaled = LaurentPoly::q(2) * v;
        EXPECT_EQ(bar_vector(scaled), LaurentPoly::q(-2) * bar_vector(v));
        for (int i : t.generator_indices())
          EXPECT_EQ(bar_vector(act_generator(v, i)), act_inverse_generator(bar_vector(v), i));
      }
    }
}

TEST(Bar, FixesIdentityAndLocalElements) {
  auto ctx = ParabolicContext::create(WeylType::a(3), {});
  auto e = ModuleVector::basis(ctx, 0);
  EXPECT_EQ(bar_vector(e), e);
  auto c = act_generator(e, 1) + LaurentPoly::q() * e;
  EXPECT_EQ(bar_vector(c), c);
  auto c_neg = act_generator(e, 1) - LaurentPoly::q(-1) * e;
  EXPECT_EQ(bar_vector(c_neg), c_neg);
}

TEST(Bar, RejectsWordsThatDoNotSpellTheRep) {
  auto ctx = ParabolicContext::create(WeylType::a(3), {});
  const std::size_t r = ctx->index_of(SignedPerm::parse("|2,3,1|"));
  const std::vector<int> wrong{2, 1}, too_long{1, 1, 2, 1};
  EXPECT_THROW(bar_standard(ctx, r, wrong), std::invalid_argument);
  EXPECT_THROW(bar_standard(ctx, r, too_long), std::invalid_argument);
  const std::vector<int> right{1, 2};
  EXPECT_EQ(bar_standard(ctx, r, right), bar_vector(ModuleVector::basis(ctx, r)));
}

TEST(KL, ExampleTypeA3J1) {
  auto ctx = ParabolicContext::create(WeylType::a(3), {1});
  const std::size_t e = 0, s2 = ctx->index_of(SignedPerm::parse("|1,3,2|"));
  auto pos = compute_kl_table(ctx, KLSide::Positive);
  auto neg = compute_kl_table(ctx, KLSide::Negative);
  EXPECT_EQ(pos.m_at(e, s2).to_string(), "q");
  EXPECT_EQ(neg.m_at(e, s2).to_string(), "-q^-1");
}

TEST(KL, ExampleTypeB2Regular) {
  auto ctx = ParabolicContext::create(WeylType::b(2), {});
  auto kl = compute_kl_table(ctx, KLSide::Positive);
  ASSERT_EQ(kl.size(), 8u);
  for (std::size_t x = 0; x < 8; ++x) {
    EXPECT_EQ(kl.m_at(x, x), LaurentPoly(1));
    EXPECT_EQ(kl.p_at(x, x), LaurentPoly(1));
  }
  // Longest element: every m_{x,w0} is q^{l(w0)-l(x)}.
  const std::size_t w0 = 7;
  for (std::size_t x = 0; x < 8; ++x) EXPECT_EQ(kl.m_at(x, w0), LaurentPoly::q(4 - ctx->length(x)));
}

TEST(KL, MatchesIndependentModuleOracle) {
  for (auto [b, d] : {std::pair{false, 3}, {false, 4}, {true, 2}, {true, 3}}) {
    const auto t = WeylType::make(b ? WeylKind::B : WeylKind::A, d);
    const auto g = oracle::bfs(b, d);
    for (const auto& J : subsets(t.generator_indices())) {
      auto ctx = ParabolicContext::create(t, J);
      oracle::Module mod(g, J);
      for (bool positive : {true, false}) {
        auto kl = compute_kl_table(ctx, positive ? KLSide::Positive : KLSide::Negative);
        auto want = mod.kl_basis(positive);
        for (std::size_t w = 0; w < kl.size(); ++w)
          for (std::size_t x = 0; x < kl.size(); ++x) {
            auto it = want[w].find(x);
            const LaurentPoly expect = it == want[w].end() ? LaurentPoly() : it->second;
            ASSERT_EQ(kl.m_at(x, w), expect) << t.to_string() << " J size " << J.size() << " x=" << ctx->rep(x).to_string()
                                             << " w=" << ctx->rep(w).to_string();
          }
      }
    }
  }
}

TEST(KL, RegularModuleMatchesClassicalPolynomials) {
  for (auto [b, d] : {std::pair{false, 4}, {true, 3}}) {
    const auto t = WeylType::make(b ? WeylKind::B : WeylKind::A, d);
    const auto g = oracle::bfs(b, d);
    const auto P = oracle::classical_kl(g);
    auto ctx = ParabolicContext::create(t, {});
    auto pos = compute_kl_table(ctx, KLSide::Positive);
    auto neg = compute_kl_table(ctx, KLSide::Negative);
    for (std::size_t w = 0; w < ctx->size(); ++w)
      for (std::size_t x = 0; x < ctx->size(); ++x) {
        auto it = P.find({window_of(ctx->rep(x)), window_of(ctx->rep(w))});
        const LaurentPoly want =
            it == P.end() ? LaurentPoly() : oracle::normalize(it->second, ctx->length(w) - ctx->length(x));
        ASSERT_EQ(pos.m_at(x, w), want) << ctx->rep(x).to_string() << " " << ctx->rep(w).to_string();
        ASSERT_EQ(neg.m_at(x, w), oracle::flip(want));
      }
  }
}

TEST(KL, TableInvariants) {
  for (auto t : {WeylType::a(4), WeylType::b(3)})
    for (const auto& J : subsets(t.generator_indices())) {
      auto ctx = ParabolicContext::create(t, J);
      for (KLSide side : {KLSide::Positive, KLSide::Negative}) {
        auto kl = compute_kl_table(ctx, side);
        auto id = multiply(kl.m(), kl.p());
        for (std::size_t x = 0; x < kl.size(); ++x) {
          auto elem = kl.kl_element(x);
          EXPECT_EQ(bar_vector(elem), elem);
          for (std::size_t w = 0; w < kl.size(); ++w) {
            EXPECT_EQ(id[x][w], LaurentPoly(x == w ? 1 : 0));
            if (!ctx->bruhat_leq(x, w)) {
              EXPECT_TRUE(kl.m_at(x, w).is_zero());
              EXPECT_TRUE(kl.p_at(x, w).is_zero());
            }
          }
        }
      }
    }
}

TEST(KL, SideNames) {
  EXPECT_EQ(parse_side("positive"), KLSide::Positive);
  EXPECT_EQ(to_string(KLSide::Negative), "negative");
  EXPECT_THROW(parse_side("left"), std::invalid_argument);
}

}  // namespace
}  // namespace klspecht
