#include <random>

#include <gtest/gtest.h>

#include "oracle/integer_matrix.hpp"
#include "orbkit/parser.hpp"
#include "orbkit/smith.hpp"

using namespace orbkit;

namespace {

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) return false;
    }
  }
  return true;
}

std::vector<BigInt> diagonal(const IntMatrix& d) {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

AbelianInvariants invariants(std::vector<long long> torsion, std::size_t free_rank) {
  AbelianInvariants a;
  for (auto t : torsion) a.torsion.emplace_back(t);
  a.free_rank = free_rank;
  return a;
}

}  // namespace

TEST(SmithNormalForm, DiagonalTwoThree) {
  auto r = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(r.D, (IntMatrix{{1, 0}, {0, 6}}));
}

TEST(SmithNormalForm, ZeroMatrix) {
  auto r = smith_normal_form(IntMatrix(2, 2));
  EXPECT_EQ(r.D, IntMatrix(2, 2));
}

TEST(SmithNormalForm, TwoFourSixEight) {
  IntMatrix a{{2, 4}, {6, 8}};
  auto r = smith_normal_form(a);
  EXPECT_EQ(r.D, (IntMatrix{{2, 0}, {0, 4}}));
  EXPECT_EQ(r.U * a * r.V, r.D);
}

TEST(SmithNormalForm, DegenerateShapes) {
  IntMatrix empty(0, 3);
  auto r = smith_normal_form(empty);
  EXPECT_EQ(r.D, empty);
  EXPECT_EQ(r.V, IntMatrix::identity(3));
  auto row = smith_normal_form(IntMatrix{{4, -6, 10}});
  EXPECT_EQ(row.D, (IntMatrix{{2, 0, 0}}));
}

TEST(SmithNormalForm, LargeEntriesStayExact) {
  IntMatrix a{{1000000007, 998244353}, {1000000009, 998244359}};
  auto r = smith_normal_form(a);
  EXPECT_EQ(r.U * a * r.V, r.D);
  BigInt det = BigInt(1000000007) * 998244359 - BigInt(998244353) * 1000000009;
  EXPECT_EQ(r.D(0, 0) * r.D(1, 1), det < 0 ? BigInt(-det) : det);
}

// 500 random matrices up to 4x4 with entries in [-9, 9].
TEST(SmithNormalFormProperty, RandomSmallMatrices) {
  std::mt19937 rng(314159);
  for (int iter = 0; iter < 500; ++iter) {
    IntMatrix a = oracle::random_matrix(rng, 4, 9);
    auto r = smith_normal_form(a);
    ASSERT_EQ(r.U * a * r.V, r.D);
    ASSERT_TRUE(is_diagonal(r.D));
    BigInt du = oracle::det(r.U);
    BigInt dv = oracle::det(r.V);
    ASSERT_TRUE(du == 1 || du == -1);
    ASSERT_TRUE(dv == 1 || dv == -1);
    auto diag = diagonal(r.D);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      ASSERT_GE(diag[i], 0);
      if (diag[i] != 0) {
        ASSERT_EQ(rank, i) << "zeros must trail";
        ++rank;
      }
      if (i > 0 && diag[i] != 0) {
        ASSERT_EQ(diag[i] % diag[i - 1], 0);
      }
    }
    ASSERT_EQ(rank, oracle::rank(a));
    // d1 * ... * dk = gcd of k x k minors, for every k up to the rank
    BigInt prod = 1;
    for (std::size_t k = 1; k <= rank; ++k) {
      prod *= diag[k - 1];
      ASSERT_EQ(prod, oracle::minor_gcd(a, k));
    }
  }
}

TEST(Abelianization, KleinFourFromInfiniteDihedral) {
  auto p = parse_presentation("gens x y\nrel x^2\nrel y^2\n");
  EXPECT_EQ(abelianization(p), invariants({2, 2}, 0));
}

TEST(Abelianization, TrefoilIsZ) {
  auto p = parse_presentation("gens a b\nrel a b a b^-1 a^-1 b^-1\n");
  EXPECT_EQ(abelianization(p), invariants({}, 1));
}

TEST(Abelianization, FreeGroup) {
  EXPECT_EQ(abelianization(parse_presentation("gens x\n")), invariants({}, 1));
  EXPECT_EQ(abelianization(parse_presentation("gens x y\n")), invariants({}, 2));
}

TEST(Abelianization, BundledGroups) {
  auto qm = load_presentation(std::string(ORBKIT_DATA_DIR) + "/qm.grp");
  EXPECT_EQ(abelianization(qm), invariants({2, 2}, 0));
  auto psl = load_presentation(std::string(ORBKIT_DATA_DIR) + "/psl2o3.grp");
  EXPECT_EQ(abelianization(psl), invariants({3}, 0));
  auto pgl = load_presentation(std::string(ORBKIT_DATA_DIR) + "/pgl2o3.grp");
  EXPECT_EQ(abelianization(pgl), invariants({2}, 0));
}

TEST(AbelianizationProperty, InvariantUnderRelatorMoves) {
  std::mt19937 rng(17);
  std::vector<Presentation> groups{
      load_presentation(std::string(ORBKIT_DATA_DIR) + "/qm.grp"),
      load_presentation(std::string(ORBKIT_DATA_DIR) + "/psl2o3.grp"),
      parse_presentation("gens a b c\nrel a^4 b^2\nrel b^6 c^-3\nrel a b c a b^-1\nrel c^10\n"),
  };
  for (const auto& p : groups) {
    auto base = abelianization(p);
    for (int iter = 0; iter < 40; ++iter) {
      auto rels = p.relators();
      std::shuffle(rels.begin(), rels.end(), rng);
      for (auto& r : rels) {
        r = r.rotated(rng() % r.size());
        if (rng() % 2) r = r.inverse();
      }
      Presentation q(p.generators(), rels, p.name());
      EXPECT_EQ(abelianization(q), base);
    }
  }
}

TEST(SubgroupAbelianization, IndexOneMatchesGroup) {
  auto qm = load_presentation(std::string(ORBKIT_DATA_DIR) + "/qm.grp");
  CosetTable one(qm.num_generators(), 1);
  for (std::size_t c = 0; c < one.num_columns(); ++c) one(0, c) = 0;
  EXPECT_EQ(subgroup_abelianization(qm, one), abelianization(qm));
}
