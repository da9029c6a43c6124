#include <gtest/gtest.h>

#include <random>

#include "branchkit/oracle.hpp"

using namespace branchkit;

namespace {

std::vector<GroupSpec> groups_up_to_rank(int max_rank) {
  std::vector<GroupSpec> out;
  for (int k = 1; k <= max_rank; ++k) {
    out.push_back({GroupType::GL, k});
    out.push_back({GroupType::SpRank, k});
    out.push_back({GroupType::SOOdd, k});
    if (k >= 2) out.push_back({GroupType::SOEven, k});
  }
  return out;
}

/// Dominant weights of g with |w| (sum of absolute values) <= size.
std::vector<Weight> dominant_weights(const GroupSpec& g, int size) {
  std::vector<Weight> out;
  const auto k = static_cast<std::size_t>(g.torus_rank);
  if (g.type == GroupType::GL) {
    for (const auto& l : gl_labels_up_to(size)) {
      if (l.plus.length() + l.minus.length() > g.torus_rank) continue;
      out.push_back(label_weight(RepLabel::gl(g.torus_rank, l)));
    }
    return out;
  }
  for (const auto& p : partitions_up_to(size, g.torus_rank)) {
    Weight w(k, 0);
    for (int i = 0; i < p.length(); ++i) w[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
    out.push_back(w);
    if (g.type == GroupType::SOEven && w[k - 1] != 0) {
      w[k - 1] = -w[k - 1];
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace

TEST(Character, Examples) {
  const auto gl2 = irreducible_character({GroupType::GL, 2}, {1, 0});
  EXPECT_EQ(gl2, LaurentPoly::monomial({1, 0}) + LaurentPoly::monomial({0, 1}));
  const auto sp4 = irreducible_character({GroupType::SpRank, 2}, {1, 0});
  EXPECT_EQ(sp4, LaurentPoly::monomial({1, 0}) + LaurentPoly::monomial({-1, 0}) + LaurentPoly::monomial({0, 1}) +
                     LaurentPoly::monomial({0, -1}));
  const auto sp4_11 = irreducible_character({GroupType::SpRank, 2}, {1, 1});
  EXPECT_EQ(sp4_11.term_count(), 5u);
  EXPECT_EQ(sp4_11.at_ones(), 5);
  EXPECT_EQ(weyl::dimension({GroupType::SpRank, 2}, {1, 1}), 5);
}

TEST(Character, RejectsNonDominantWeights) {
  EXPECT_THROW(irreducible_character({GroupType::GL, 2}, {0, 1}), NotDominant);
  EXPECT_THROW(irreducible_character({GroupType::SpRank, 2}, {1, -1}), NotDominant);
  EXPECT_NO_THROW(irreducible_character({GroupType::SOEven, 2}, {1, -1}));
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dim_irrep(RepLabel::gl(3, {1})), 3);
  EXPECT_EQ(dim_irrep(RepLabel::sp(2, {1, 1})), 5);
  EXPECT_EQ(dim_irrep(RepLabel::o(7, {1})), 7);
  EXPECT_EQ(dim_irrep(RepLabel::o(10, {2})), 54);
  EXPECT_EQ(dim_irrep(RepLabel::gl(4, {1}, {1})), 15);
  EXPECT_THROW(dim_irrep(RepLabel::o(4, {1, 1})), OutOfSafeRegime);
}

TEST(Character, WeylSymmetric) {
  for (const auto& g : groups_up_to_rank(3)) {
    for (const auto& w : dominant_weights(g, 4)) {
      const auto chi = irreducible_character(g, w);
      weyl::for_each_weyl_element(g, [&](const std::vector<int>& perm, std::uint64_t mask, int) {
        for (const auto& [e, c] : chi.terms()) {
          Exponent image(e.size());
          for (std::size_t i = 0; i < e.size(); ++i) {
            image[i] = e[static_cast<std::size_t>(perm[i])];
            if (mask & (std::uint64_t{1} << i)) image[i] = -image[i];
          }
          ASSERT_EQ(chi.coefficient(image), c) << to_string(g) << " " << to_string(w);
        }
      });
    }
  }
}

TEST(Character, SelfDualGroupsHaveInversionSymmetry) {
  for (const auto& g : groups_up_to_rank(3)) {
    // -1 lies in the Weyl group of D_k only for even k.
    if (g.type == GroupType::GL || (g.type == GroupType::SOEven && g.torus_rank % 2 == 1)) continue;
    for (const auto& w : dominant_weights(g, 3)) {
      const auto chi = irreducible_character(g, w);
      for (const auto& [e, c] : chi.terms()) {
        Exponent neg(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
        EXPECT_EQ(chi.coefficient(neg), c);
      }
    }
  }
}

TEST(Character, ValueAtOneIsTheWeylDimension) {
  for (const auto& g : groups_up_to_rank(3)) {
    for (const auto& w : dominant_weights(g, 5)) {
      EXPECT_EQ(irreducible_character(g, w).at_ones(), weyl::dimension(g, w)) << to_string(g) << to_string(w);
    }
  }
}

TEST(Character, FreudenthalAgreesWithWeylFormula) {
  for (const auto& g : groups_up_to_rank(3)) {
    for (const auto& w : dominant_weights(g, 4)) {
      const auto chi = irreducible_character(g, w);
      const auto dominant = weyl::dominant_multiplicities(g, w);
      std::int64_t total = 0;
      for (const auto& [d, m] : dominant) {
        EXPECT_EQ(chi.coefficient(d), m) << to_string(g) << " " << to_string(w) << " at " << to_string(d);
        weyl::for_each_orbit_element(g, d, [&](const Weight&) { total += m; });
      }
      EXPECT_EQ(total, chi.at_ones());
    }
  }
}

TEST(Decompose, IrreducibleIsPointMass) {
  for (const auto& g : groups_up_to_rank(3)) {
    for (const auto& w : dominant_weights(g, 4)) {
      const auto d = decompose_character(irreducible_character(g, w), g);
      EXPECT_EQ(d, (std::map<Weight, std::int64_t>{{w, 1}})) << to_string(g) << to_string(w);
    }
  }
}

TEST(Decompose, Examples) {
  const GroupSpec gl2{GroupType::GL, 2};
  const auto s1 = irreducible_character(gl2, {1, 0});
  EXPECT_EQ(decompose_character(s1 * s1, gl2), (std::map<Weight, std::int64_t>{{{2, 0}, 1}, {{1, 1}, 1}}));
  const GroupSpec sp4{GroupType::SpRank, 2};
  const auto v = irreducible_character(sp4, {1, 0});
  EXPECT_EQ(decompose_character(v * v, sp4),
            (std::map<Weight, std::int64_t>{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 0}, 1}}));
  EXPECT_TRUE(decompose_character(LaurentPoly(2), gl2).empty());
}

TEST(Decompose, RoundTripsRandomCombinations) {
  std::mt19937 rng(12345);
  for (const auto& g : groups_up_to_rank(3)) {
    const auto weights = dominant_weights(g, 3);
    for (int trial = 0; trial < 5; ++trial) {
      std::map<Weight, std::int64_t> combo;
      LaurentPoly chi(g.torus_rank);
      for (const auto& w : weights) {
        const int m = static_cast<int>(rng() % 4);
        if (m == 0) continue;
        combo[w] = m;
        chi += irreducible_character(g, w).scaled(m);
      }
      EXPECT_EQ(decompose_character(chi, g), combo) << to_string(g);
    }
  }
}

TEST(Decompose, RejectsNonCharacters) {
  const GroupSpec gl2{GroupType::GL, 2};
  EXPECT_THROW(decompose_character(LaurentPoly::monomial({0, 1}), gl2), NotACharacter);
  const auto neg = irreducible_character(gl2, {1, 0}).scaled(-1);
  EXPECT_THROW(decompose_character(neg, gl2), NotACharacter);
}

TEST(DotAction, WallsVanishAndSignsAlternate) {
  const GroupSpec gl2{GroupType::GL, 2};
  // (0,1) + rho lies on a wall.
  EXPECT_FALSE(weyl::dot_dominant(gl2, {0, 1}));
  // (-1,1): s(w + rho) - rho = (0,0) with sign -1.
  const auto img = weyl::dot_dominant(gl2, {-1, 1});
  ASSERT_TRUE(img);
  EXPECT_EQ(img->sign, -1);
  EXPECT_EQ(img->weight, (Weight{0, 0}));
}
