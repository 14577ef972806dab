#include "affbetti/rootsys.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace affbetti {
namespace {

struct TypeCase {
  const char* label;
  std::size_t positive_roots;
};

// |Phi^+|: n(n+1)/2, n^2, n^2, n(n-1), 36, 63, 120, 24, 6.
const TypeCase kTypes[] = {
    {"A1", 1},  {"A2", 3},  {"A3", 6},  {"A4", 10}, {"A5", 15}, {"A6", 21}, {"A7", 28}, {"A8", 36},
    {"B2", 4},  {"B3", 9},  {"B4", 16}, {"B5", 25}, {"B6", 36}, {"B7", 49}, {"B8", 64}, {"C2", 4},
    {"C3", 9},  {"C4", 16}, {"C5", 25}, {"C6", 36}, {"C7", 49}, {"C8", 64}, {"D4", 12}, {"D5", 20},
    {"D6", 30}, {"D7", 42}, {"D8", 56}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6},
};

class EveryType : public ::testing::TestWithParam<TypeCase> {};

TEST_P(EveryType, RhoPairingsAreOne) {
  const auto rs = build_root_system(GetParam().label);
  for (std::size_t i = 0; i < rs.rank; ++i) {
    EXPECT_EQ(rs.rho_pairings[i], 1);
    IntVec coroot(rs.rank, 0);
    coroot[i] = 1;
    EXPECT_EQ(pairing(rs, to_rational(coroot), rs.rho), 1) << "(rho|a_i^v), i=" << i;
    IntVec root(rs.rank, 0);
    root[i] = 1;
    EXPECT_EQ(pairing(rs, rs.rho_coroot, to_rational(root)), 1) << "(rho^v|a_i), i=" << i;
  }
}

TEST_P(EveryType, PositiveRootsMatchReflectionOrbit) {
  const auto rs = build_root_system(GetParam().label);
  EXPECT_EQ(rs.num_positive_roots(), GetParam().positive_roots);
  const auto expected = oracle::positive_roots(rs.cartan);
  std::set<IntVec> got(rs.positive_roots.begin(), rs.positive_roots.end());
  EXPECT_EQ(got, expected);
  // Simple roots come first, highest root last and unique.
  for (std::size_t i = 0; i < rs.rank; ++i) {
    IntVec e(rs.rank, 0);
    e[i] = 1;
    EXPECT_EQ(rs.positive_roots[i], e);
  }
  const auto top = oracle::two_rho_pairing(rs.positive_roots[rs.highest_root]);
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k)
    if (k != rs.highest_root) EXPECT_LT(oracle::two_rho_pairing(rs.positive_roots[k]), top);
}

TEST_P(EveryType, GramMatchesSymmetrizedCartan) {
  const auto rs = build_root_system(GetParam().label);
  for (std::size_t i = 0; i < rs.rank; ++i)
    for (std::size_t j = 0; j < rs.rank; ++j) {
      // (a_i^v|a_j^v) = 4 (a_i|a_j) / (|a_i|^2 |a_j|^2) = a[i][j] / d_j.
      EXPECT_EQ(rs.gram_coroot[i][j], Rational(rs.cartan[i][j]) / rs.symmetrizers[j]);
      EXPECT_EQ(rs.gram_coroot[i][j], rs.gram_coroot[j][i]);
      // (a_i^v | a_j) is the Cartan entry.
      IntVec x(rs.rank, 0), y(rs.rank, 0);
      x[i] = 1;
      y[j] = 1;
      EXPECT_EQ(pairing(rs, x, y), rs.cartan[i][j]);
    }
  EXPECT_GT(linalg::determinant(rs.gram_coroot), 0);
}

TEST_P(EveryType, FundamentalWeightsAreDual) {
  const auto rs = build_root_system(GetParam().label);
  for (std::size_t i = 0; i < rs.rank; ++i)
    for (std::size_t j = 0; j < rs.rank; ++j) {
      IntVec e(rs.rank, 0);
      e[j] = 1;
      const Rational expect = i == j ? 1 : 0;
      EXPECT_EQ(pairing(rs, to_rational(e), rs.fundamental_weights[i]), expect);
      EXPECT_EQ(pairing(rs, rs.fundamental_coweights[i], to_rational(e)), expect);
    }
}

INSTANTIATE_TEST_SUITE_P(RootSystems, EveryType, ::testing::ValuesIn(kTypes),
                         [](const auto& info) { return std::string(info.param.label); });

TEST(RootSystem, RankOne) {
  const auto rs = build_root_system(CartanType::A, 1);
  EXPECT_EQ(rs.num_positive_roots(), 1u);
  EXPECT_EQ(rs.rho[0], Rational(1, 2));
  EXPECT_EQ(rs.rho_pairings[0], 1);
}

TEST(RootSystem, BourbakiConventions) {
  const auto b3 = build_root_system("B3");
  EXPECT_EQ(b3.cartan[2][1], -2);  // a_3 short
  EXPECT_EQ(b3.symmetrizers[2], Rational(1, 2));
  const auto c3 = build_root_system("C3");
  EXPECT_EQ(c3.cartan[1][2], -2);  // a_3 long
  EXPECT_EQ(c3.symmetrizers[0], Rational(1, 2));
  EXPECT_EQ(c3.symmetrizers[2], 1);
  const auto g2 = build_root_system("G2");
  EXPECT_EQ(g2.cartan[0][1], -3);
  EXPECT_EQ(g2.symmetrizers[0], Rational(1, 3));
  const auto e6 = build_root_system("E6");
  EXPECT_EQ(e6.cartan[0][2], -1);
  EXPECT_EQ(e6.cartan[1][3], -1);
  EXPECT_EQ(e6.cartan[0][1], 0);
}

TEST(RootSystem, LabelsAreCaseInsensitive) {
  EXPECT_EQ(build_root_system("c3").cartan, build_root_system("C3").cartan);
  EXPECT_EQ(build_root_system("g2").name(), "G2");
}

TEST(RootSystem, RejectsInadmissibleTypes) {
  for (const char* bad : {"A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H3", "", "A", "2", "Ax"})
    EXPECT_THROW(build_root_system(bad), std::invalid_argument) << bad;
  try {
    build_root_system("D3");
    FAIL() << "D3 accepted";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("A3"), std::string::npos);
  }
}

TEST(RootSystem, PairingExamples) {
  const auto rs = build_root_system("A2");
  EXPECT_EQ(pairing(rs, IntVec{1, 0}, IntVec{1, 0}), 2);
  EXPECT_EQ(pairing(rs, IntVec{1, 0}, IntVec{0, 1}), -1);
  EXPECT_THROW(pairing(rs, IntVec{1}, IntVec{1, 0}), std::invalid_argument);
  EXPECT_THROW(pairing(rs, RatVec{1, 0, 0}, RatVec{1, 0}), std::invalid_argument);
}

TEST(RootSystem, DominanceCoordinates) {
  const auto rs = build_root_system("A2");
  EXPECT_EQ(dominance_coords(rs, CorootVector{0, 0}), (IntVec{0, 0}));
  EXPECT_EQ(dominance_coords(rs, CorootVector{2, 1}), (IntVec{3, 0}));
  EXPECT_EQ(dominance_coords(rs, CorootVector{1, 1}), (IntVec{1, 1}));
  EXPECT_TRUE(is_dominant(rs, CorootVector{2, 1}));
  EXPECT_FALSE(is_strongly_dominant(rs, CorootVector{2, 1}));
  EXPECT_TRUE(is_strongly_dominant(rs, CorootVector{1, 1}));
  EXPECT_FALSE(is_dominant(rs, CorootVector{1, 0}));
}

TEST(RootSystem, Height) {
  EXPECT_EQ(height(build_root_system("A2"), CorootVector{2, 3}), 10);
  EXPECT_EQ(height(build_root_system("E7"), CorootVector::zero(7)), 0);
  EXPECT_EQ(height(build_root_system("C3"), CorootVector{3, 6, 7}), 32);
}

TEST(RootSystem, HeightIsHomogeneous) {
  auto g = oracle::rng(7);
  for (const char* label : {"A3", "B3", "G2", "F4", "E6"}) {
    const auto rs = build_root_system(label);
    for (int t = 0; t < 20; ++t) {
      CorootVector mu = CorootVector::zero(rs.rank);
      for (std::size_t i = 0; i < rs.rank; ++i) mu.coords[i] = oracle::uniform(g, -5, 9);
      const std::int64_t k = oracle::uniform(g, 1, 12);
      EXPECT_EQ(height(rs, k * mu), k * height(rs, mu));
      EXPECT_EQ(height(rs, mu) % 2, 0);
    }
  }
}

TEST(RootSystem, CorootVectorArithmetic) {
  CorootVector a{1, 2}, b{3, -1};
  EXPECT_EQ(a + b, (CorootVector{4, 1}));
  EXPECT_EQ(a - b, (CorootVector{-2, 3}));
  EXPECT_EQ(3 * a, (CorootVector{3, 6}));
  EXPECT_EQ(to_string(b), "(3,-1)");
  EXPECT_LT(a, b);
}

}  // namespace
}  // namespace affbetti
