#include "schubert/rootsys.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace schubert;

namespace {

RootSystemPtr sys(Family f, int n) { return build_root_system({f, n}); }

std::set<RootVector> as_set(const std::vector<RootVector> &v) { return {v.begin(), v.end()}; }

// Symmetric bilinear form given by a hand-written Gram matrix.
Rational form(const std::vector<std::vector<int>> &g, const RootVector &a, const RootVector &b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      s += a[i] * b[j] * g[i][j];
  return s;
}

} // namespace

TEST(RootSystem, RankTwoPositiveRoots) {
  EXPECT_EQ(as_set(sys(Family::A, 2)->positive_roots()), (std::set<RootVector>{{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(as_set(sys(Family::B, 2)->positive_roots()), (std::set<RootVector>{{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
  // alpha_2 long in C_n, so the highest root is 2 alpha_1 + alpha_2.
  EXPECT_EQ(as_set(sys(Family::C, 2)->positive_roots()), (std::set<RootVector>{{1, 0}, {0, 1}, {1, 1}, {2, 1}}));
}

TEST(RootSystem, RootCounts) {
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(sys(Family::A, n)->positive_roots().size(), static_cast<std::size_t>(n * (n + 1) / 2));
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(sys(Family::B, n)->positive_roots().size(), static_cast<std::size_t>(n * n));
    EXPECT_EQ(sys(Family::C, n)->positive_roots().size(), static_cast<std::size_t>(n * n));
  }
}

TEST(RootSystem, GroupOrders) {
  EXPECT_EQ(sys(Family::A, 2)->group_order(), 6u);
  EXPECT_EQ(sys(Family::A, 3)->group_order(), 24u);
  EXPECT_EQ(sys(Family::B, 2)->group_order(), 8u);
  EXPECT_EQ(sys(Family::B, 3)->group_order(), 48u);
  EXPECT_EQ(sys(Family::C, 4)->group_order(), 384u);
}

TEST(RootSystem, CartanMatrices) {
  const auto b = sys(Family::B, 2), c = sys(Family::C, 2);
  // cartan(i, j) = <alpha_i, alpha_j^vee>
  EXPECT_EQ(b->cartan(0, 1), -2);
  EXPECT_EQ(b->cartan(1, 0), -1);
  EXPECT_EQ(c->cartan(0, 1), -1);
  EXPECT_EQ(c->cartan(1, 0), -2);
  const auto a = sys(Family::A, 3);
  EXPECT_EQ(a->cartan(0, 2), 0);
  EXPECT_EQ(a->cartan(1, 1), 2);
}

TEST(RootSystem, PairingAgainstHandGram) {
  // A2: ((a_i, a_j)) = [[2,-1],[-1,2]]; C2 with alpha_2 long: [[1,-1],[-1,2]].
  const std::vector<std::vector<int>> ga{{2, -1}, {-1, 2}}, gc{{1, -1}, {-1, 2}};
  const auto a = sys(Family::A, 2), c = sys(Family::C, 2);
  EXPECT_EQ(a->pairing(a->fundamental_weight(1), {1, 0}), 1);
  EXPECT_EQ(a->pairing(a->fundamental_weight(1), {1, 1}), 1);
  EXPECT_EQ(c->pairing(c->fundamental_weight(1), {2, 1}), 1);
  for (const auto &rs : {a, c}) {
    const auto &g = rs == a ? ga : gc;
    for (const auto &beta : rs->positive_roots())
      for (int i = 1; i <= 2; ++i) {
        const auto &w = rs->fundamental_weight(i);
        EXPECT_EQ(rs->pairing(w, beta), 2 * form(g, w, beta) / form(g, beta, beta));
      }
  }
}

TEST(RootSystem, FundamentalWeightsAreDual) {
  for (auto [f, n] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::C, 4}}) {
    const auto rs = sys(f, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        EXPECT_EQ(rs->pairing(rs->fundamental_weight(i), rs->simple_root(j)), i == j ? 1 : 0);
  }
}

TEST(RootSystem, GramIsPositiveDefinite) {
  for (auto [f, n] : {std::pair{Family::A, 4}, {Family::B, 4}, {Family::C, 4}}) {
    const auto rs = sys(f, n);
    const auto &g = rs->gram();
    for (std::size_t k = 1; k <= g.size(); ++k) {
      RationalMatrix minor(k, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          minor[i][j] = g[i][j];
      EXPECT_GT(determinant(minor), 0);
    }
  }
}

TEST(RootSystem, ReflectionExamples) {
  const auto a = sys(Family::A, 2);
  EXPECT_EQ(a->reflect({1, 0}, {1, 0}), (RootVector{-1, 0}));
  EXPECT_EQ(a->reflect({1, 0}, {0, 1}), (RootVector{1, 1}));
  const auto a3 = sys(Family::A, 3);
  EXPECT_EQ(a3->reflect({1, 0, 0}, {0, 0, 1}), (RootVector{0, 0, 1}));
  EXPECT_THROW(a->reflect({2, 0}, {1, 0}), InvalidArgument);
}

TEST(RootSystem, ReflectionsPermuteRoots) {
  for (auto [f, n] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::C, 3}}) {
    const auto rs = sys(f, n);
    std::set<RootVector> all;
    for (const auto &b : rs->positive_roots()) {
      all.insert(b);
      all.insert(-b);
    }
    for (const auto &beta : rs->positive_roots()) {
      std::set<RootVector> image;
      for (const auto &r : all)
        image.insert(rs->reflect(beta, r));
      EXPECT_EQ(image, all);
      EXPECT_EQ(rs->reflect(beta, beta), -beta);
    }
  }
}

TEST(RootSystem, HRoot) {
  EXPECT_EQ(h_root({1, 1}), 1);
  EXPECT_EQ(h_root({0, 1}), 2);
  EXPECT_EQ(h_root({0, 0, 0, 1}), 4);
  EXPECT_THROW(h_root({0, 0}), InvalidArgument);
}

TEST(RootSystem, InvalidTypes) {
  EXPECT_THROW(build_root_system({Family::A, 0}), InvalidArgument);
  EXPECT_THROW(build_root_system({Family::B, 1}), InvalidArgument);
  EXPECT_THROW(build_root_system({Family::C, 1}), InvalidArgument);
  EXPECT_THROW(parse_family("D"), InvalidArgument);
  EXPECT_EQ(parse_family("b"), Family::B);
}

TEST(RootSystem, PairingRejectsZero) {
  const auto a = sys(Family::A, 2);
  EXPECT_THROW(a->pairing({1, 0}, {0, 0}), InvalidArgument);
  EXPECT_THROW(a->pairing({1, 0, 0}, {1, 0}), InvalidArgument);
}
