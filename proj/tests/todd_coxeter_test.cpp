#include <random>

#include <gtest/gtest.h>

#include "oracle/finite_group.hpp"
#include "orbkit/parser.hpp"
#include "orbkit/todd_coxeter.hpp"

using namespace orbkit;

namespace {

Presentation s3() { return parse_presentation("gens x y\nrel x^2\nrel y^3\nrel (x y)^2\n"); }

Presentation qm() { return load_presentation(std::string(ORBKIT_DATA_DIR) + "/qm.grp"); }

std::size_t index_of(const EnumerationOutcome& o) {
  auto* c = std::get_if<EnumerationComplete>(&o);
  return c ? c->index : 0;
}

std::vector<Word> words(const Presentation& p, const std::string& list) {
  return parse_word_list(list, p.generators());
}

}  // namespace

TEST(CosetEnumerate, S3OverCyclicSubgroup) {
  auto p = s3();
  auto out = coset_enumerate(p, words(p, "y"), 100);
  ASSERT_TRUE(is_complete(out));
  EXPECT_EQ(index_of(out), 2u);
}

TEST(CosetEnumerate, TrivialSubgroupGivesGroupOrder) {
  auto p = s3();
  auto out = coset_enumerate(p, {}, 100);
  ASSERT_TRUE(is_complete(out));
  EXPECT_EQ(index_of(out), 6u);
  EXPECT_TRUE(std::get<EnumerationComplete>(out).table.satisfies(p));
}

TEST(CosetEnumerate, FullGroupHasIndexOne) {
  auto p = qm();
  auto out = coset_enumerate(p, p.generator_words());
  ASSERT_TRUE(is_complete(out));
  EXPECT_EQ(index_of(out), 1u);
}

TEST(CosetEnumerate, TrefoilOverMeridianOverflows) {
  // <a> has infinite index; the Felsch strategy keeps defining cosets and
  // hits the limit with every coset still live.
  auto p = parse_presentation("gens a b\nrel a b a b^-1 a^-1 b^-1\n");
  auto out = coset_enumerate(p, words(p, "a"), 1000);
  ASSERT_FALSE(is_complete(out));
  EXPECT_EQ(std::get<EnumerationOverflow>(out).cosets_used, 1000u);
  EXPECT_FALSE(is_complete(coset_enumerate(p, words(p, "a"), 5000)));
}

TEST(CosetEnumerate, InfiniteCyclicOverflows) {
  auto p = parse_presentation("gens x\n");
  EXPECT_FALSE(is_complete(coset_enumerate(p, {}, 50)));
  auto sq = coset_enumerate(p, words(p, "x^5"), 50);
  EXPECT_EQ(index_of(sq), 5u);
}

TEST(CosetEnumerate, TableIsStandardizedAndDeterministic) {
  auto p = qm();
  auto one = coset_enumerate(p, words(p, "x;y"));
  auto two = coset_enumerate(p, words(p, "x;y"));
  ASSERT_TRUE(is_complete(one));
  const auto& t = std::get<EnumerationComplete>(one).table;
  EXPECT_EQ(t, std::get<EnumerationComplete>(two).table);
  EXPECT_EQ(t, t.standardized(0));
  EXPECT_TRUE(t.satisfies(p, words(p, "x;y")));
}

TEST(CosetEnumerate, RejectsBadArguments) {
  auto p = s3();
  EXPECT_THROW(coset_enumerate(p, {}, 0), std::invalid_argument);
  EXPECT_THROW(coset_enumerate(p, {Word{Letter(5, 1)}}), std::invalid_argument);
}

TEST(CosetEnumerate, CoincidencesResolveInLargerGroup) {
  // Coxeter group [3,3,6] rotation subgroup modulo c^2: finite quotient
  // through which many coincidences are forced.
  auto p = parse_presentation(
      "gens a b c\nrel a^3\nrel b^3\nrel c^2\nrel (a b)^2\nrel (b c)^2\nrel (a b c)^2\n");
  auto out = coset_enumerate(p, {});
  ASSERT_TRUE(is_complete(out));
  EXPECT_TRUE(std::get<EnumerationComplete>(out).table.satisfies(p));
  auto sub = coset_enumerate(p, words(p, "a"));
  ASSERT_TRUE(is_complete(sub));
  EXPECT_EQ(index_of(out) % index_of(sub), 0u);
}

TEST(CosetEnumerateOracle, IndicesMatchBruteForce) {
  std::mt19937 rng(99);
  for (const auto& fx : oracle::fixtures()) {
    SCOPED_TRACE(fx.name);
    auto p = parse_presentation(fx.presentation);
    for (const auto& r : p.relators()) ASSERT_EQ(fx.group.eval(r), fx.group.identity());
    auto table = oracle::build_table(fx.group);
    ASSERT_EQ(table.order(), fx.order);

    auto whole = coset_enumerate(p, {});
    ASSERT_TRUE(is_complete(whole));
    EXPECT_EQ(index_of(whole), fx.order);

    std::uniform_int_distribution<std::size_t> gen(0, p.num_generators() - 1);
    std::uniform_int_distribution<int> len(1, 5);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Word> h;
      int count = trial % 3 + 1;
      for (int i = 0; i < count; ++i) {
        std::vector<Letter> ls;
        for (int j = len(rng); j > 0; --j) {
          ls.emplace_back(static_cast<std::uint32_t>(gen(rng)), rng() % 2 ? 1 : -1);
        }
        h.push_back(reduce(ls));
      }
      auto out = coset_enumerate(p, h);
      ASSERT_TRUE(is_complete(out));
      auto& done = std::get<EnumerationComplete>(out);
      EXPECT_TRUE(done.table.satisfies(p, h));
      EXPECT_EQ(done.index * oracle::subgroup_order(table, fx.group, h), fx.order);
    }
  }
}

TEST(CosetEnumerateProperty, EnlargingSubgroupNeverIncreasesIndex) {
  std::mt19937 rng(5);
  for (const auto& fx : oracle::fixtures()) {
    SCOPED_TRACE(fx.name);
    auto p = parse_presentation(fx.presentation);
    std::uniform_int_distribution<std::size_t> gen(0, p.num_generators() - 1);
    std::vector<Word> h;
    std::size_t last = fx.order;
    for (int step = 0; step < 5; ++step) {
      h.push_back(Word{Letter(static_cast<std::uint32_t>(gen(rng)), 1),
                       Letter(static_cast<std::uint32_t>(gen(rng)), -1)} *
                  Word{Letter(static_cast<std::uint32_t>(gen(rng)), 1)});
      std::size_t idx = index_of(coset_enumerate(p, h));
      ASSERT_GT(idx, 0u);
      EXPECT_LE(idx, last);
      last = idx;
    }
  }
}

TEST(CosetTable, SchreierGeneratorsGenerateTheStabilizer) {
  auto p = s3();
  auto out = std::get<EnumerationComplete>(coset_enumerate(p, words(p, "y")));
  auto gens = schreier_generators(out.table);
  EXPECT_FALSE(gens.empty());
  for (const auto& w : gens) EXPECT_EQ(out.table.trace(0, w), Coset{0});
  EXPECT_EQ(index_of(coset_enumerate(p, gens)), 2u);
}
