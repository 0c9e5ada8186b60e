#include <gtest/gtest.h>

#include "convlab/cube.hpp"
#include "convlab/sampling.hpp"

using namespace convlab;
using namespace convlab::cube;

namespace {

// Coordinates beyond every support in play behave alike; 0..15 covers the
// default sampling window with room to spare.
constexpr std::uint32_t kProbe = 16;

}  // namespace

TEST(FCSet, Basics) {
  const FCSet a = FCSet::finite({3, 1, 3});
  EXPECT_EQ(a.to_string(), "{1,3}");
  EXPECT_EQ(FCSet::cofinite({2}).to_string(), "ω∖{2}");
  EXPECT_TRUE(a.contains(1));
  EXPECT_FALSE(a.contains(2));
  EXPECT_TRUE(FCSet::cofinite({2}).contains(100));
  EXPECT_EQ(fc_complement(a), FCSet::cofinite({1, 3}));
  EXPECT_EQ(fc_union(a, FCSet::cofinite({1, 5})), FCSet::cofinite({5}));
  EXPECT_EQ(fc_intersection(a, FCSet::cofinite({1, 5})), FCSet::finite({3}));
  EXPECT_TRUE(fc_subset(a, FCSet::omega()));
  EXPECT_FALSE(fc_subset(FCSet::omega(), a));
}

TEST(FCSet, BooleanLawsPointwise) {
  sampling::Rng rng(59);
  for (int i = 0; i < 2000; ++i) {
    const FCSet a = sampling::random_fcset(rng), b = sampling::random_fcset(rng);
    const FCSet u = fc_union(a, b), m = fc_intersection(a, b);
    for (std::uint32_t k = 0; k < kProbe; ++k) {
      ASSERT_EQ(u.contains(k), a.contains(k) || b.contains(k));
      ASSERT_EQ(m.contains(k), a.contains(k) && b.contains(k));
    }
    EXPECT_EQ(fc_complement(u), fc_intersection(fc_complement(a), fc_complement(b)));
    EXPECT_EQ(fc_complement(fc_complement(a)), a);
    EXPECT_EQ(fc_subset(a, b), fc_intersection(a, b) == a);
  }
}

TEST(FCSeq, CanonicalAndLimits) {
  const FCSet a = FCSet::finite({0}), b = FCSet::cofinite({0});
  EXPECT_EQ(FCSeq({a}, {b, a}), FCSeq({}, {a, b}));
  EXPECT_EQ(FCSeq({}, {a, b}).to_string(), "[;{0},ω∖{0}]");
  EXPECT_EQ(fc_liminf(FCSeq({}, {a, b})), FCSet::empty());
  EXPECT_EQ(fc_limsup(FCSeq({}, {a, b})), FCSet::omega());
}

TEST(FCSeq, LimitsMatchCoordinateTails) {
  sampling::Rng rng(61);
  for (int i = 0; i < 1000; ++i) {
    const FCSeq x = sampling::random_fcseq(rng);
    const std::size_t horizon = x.preperiod().size() + 2 * x.period().size();
    for (std::uint32_t k = 0; k < kProbe; ++k) {
      bool always = true, sometimes = false;
      for (std::size_t n = x.preperiod().size(); n < horizon; ++n) {
        always = always && x.at(n).contains(k);
        sometimes = sometimes || x.at(n).contains(k);
      }
      ASSERT_EQ(fc_liminf(x).contains(k), always) << x.to_string();
      ASSERT_EQ(fc_limsup(x).contains(k), sometimes) << x.to_string();
    }
    EXPECT_EQ(fc_complement(fc_liminf(x)), fc_limsup(x.complemented()));
  }
}

TEST(Cube, AlexandrovLimitsAreSupersetsOfLimsup) {
  sampling::Rng rng(67);
  for (int i = 0; i < 1000; ++i) {
    const FCSeq x = sampling::random_fcseq(rng);
    const auto left = lim_alexandrov(x), right = lim_alexandrov_dual(x);
    auto probes = candidate_limits(x);
    for (int k = 0; k < 5; ++k) probes.push_back(sampling::random_fcset(rng));
    for (const auto& a : probes) {
      ASSERT_EQ(left(a), fc_subset(fc_limsup(x), a)) << x.to_string() << " " << a.to_string();
      ASSERT_EQ(right(a), fc_subset(a, fc_liminf(x))) << x.to_string() << " " << a.to_string();
      ASSERT_EQ(right(a), lim_alexandrov(x.complemented())(fc_complement(a)));
    }
  }
}

TEST(Cube, CantorLimitIsTheSymmetricRule) {
  sampling::Rng rng(71);
  for (int i = 0; i < 1000; ++i) {
    const FCSeq x = sampling::random_fcseq(rng);
    const auto lim = lim_cantor(x);
    const bool settles = fc_liminf(x) == fc_limsup(x);
    ASSERT_EQ(lim.has_value(), settles) << x.to_string();
    if (lim) {
      EXPECT_EQ(*lim, fc_liminf(x));
      EXPECT_TRUE(product_converges(discrete_factor(), x, *lim));
    }
  }
  EXPECT_EQ(lim_cantor(FCSeq::constant(FCSet::cofinite({4}))), FCSet::cofinite({4}));
}

TEST(Cube, PairOfAlexandrovLimitsIsCantor) {
  sampling::Rng rng(73);
  std::vector<FCSeq> sample;
  for (int i = 0; i < 1000; ++i) sample.push_back(sampling::random_fcseq(rng));
  EXPECT_TRUE(check_alexandrov_pair_is_cantor(sample));
}

TEST(Cube, CantorSubbaseSplits) {
  const std::vector<FCSet> probe{FCSet::empty(), FCSet::omega(), FCSet::finite({1, 2}),
                                 FCSet::cofinite({0, 5})};
  EXPECT_TRUE(check_cantor_subbase_split(8, probe));
}

TEST(Cube, ExceptionalCoordinatesIncludeGenericOne) {
  const FCSeq x({}, {FCSet::finite({2}), FCSet::cofinite({5})});
  const auto coords = exceptional_coordinates(x, FCSet::finite({7}));
  EXPECT_EQ(coords, (std::vector<std::uint32_t>{2, 5, 7, 8}));
  EXPECT_EQ(fc_limsup(x), FCSet::cofinite({5}));
  EXPECT_EQ(fc_liminf(x), FCSet::finite({2}));
}
