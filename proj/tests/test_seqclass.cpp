#include <gtest/gtest.h>

#include "convlab/sampling.hpp"
#include "convlab/seqclass.hpp"

using namespace convlab;

TEST(InfClass, OfSequence) {
  const Carrier c(2);
  const EPSeq x = parse_sequence(c, "[{0,1};{0},{1}]");
  EXPECT_EQ(inf_class(x).to_string(), "{{0},{1}}");
  EXPECT_EQ(inf_class(x).limsup(), c.top());
  EXPECT_EQ(inf_class(x).liminf(), c.bottom());
  EXPECT_EQ(inf_class(parse_sequence(c, "[{1};{0}]")), InfClass::singleton(c.element(1)));
  EXPECT_THROW(InfClass(c.empty_set()), ValidationError);
}

TEST(InfClass, LimitsAgreeWithSequence) {
  sampling::Rng rng(5);
  for (int n = 1; n <= 5; ++n) {
    const Carrier c(n);
    for (int i = 0; i < 300; ++i) {
      const EPSeq x = sampling::random_epseq(c, rng);
      EXPECT_EQ(inf_class(x).liminf(), liminf(x));
      EXPECT_EQ(inf_class(x).limsup(), limsup(x));
    }
  }
}

TEST(InfClass, RepresentativeHasItsClass) {
  const Carrier c(3);
  for_each_class(c, [&](const InfClass& s) { ASSERT_EQ(inf_class(representative(s)), s); });
}

TEST(InfClass, SubsequenceClasses) {
  const Carrier c(3);
  const InfClass s = InfClass::from_mask(c, 0b10110010);
  const auto subs = subsequence_classes(s);
  EXPECT_EQ(subs.size(), 15u);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    EXPECT_TRUE(subs[i].values().subset_of(s.values()));
    if (i > 0) EXPECT_LT(subs[i - 1].mask(), subs[i].mask());
  }
}

TEST(ForEachClass, CountsAndScale) {
  std::uint64_t count = 0;
  for_each_class(Carrier(4), [&](const InfClass&) { ++count; });
  EXPECT_EQ(count, 65535u);
  EXPECT_THROW(for_each_class(Carrier(5), [](const InfClass&) {}), ScaleError);
}

TEST(Subsequence, RealizesEveryTargetClass) {
  sampling::Rng rng(17);
  for (int n = 1; n <= 4; ++n) {
    const Carrier c(n);
    for (int i = 0; i < 100; ++i) {
      const EPSeq x = sampling::random_epseq(c, rng);
      for (const auto& target : subsequence_classes(inf_class(x))) {
        const Subsequence sub = realize_subsequence(x, target);
        ASSERT_EQ(inf_class(sub.sequence), target);
        for (std::size_t k = 0; k < 50; ++k) {
          if (k > 0) ASSERT_LT(sub.index(k - 1), sub.index(k));
          ASSERT_EQ(sub.sequence.at(k), x.at(sub.index(k)));
        }
      }
    }
  }
}

TEST(Subsequence, RejectsForeignTarget) {
  const Carrier c(2);
  const EPSeq x = parse_sequence(c, "[;{0},{1}]");
  EXPECT_THROW(realize_subsequence(x, InfClass::singleton(c.top())), ValidationError);
}

TEST(Subsequence, EveryKthAndDropPrefix) {
  sampling::Rng rng(19);
  const Carrier c(3);
  for (int i = 0; i < 300; ++i) {
    const EPSeq x = sampling::random_epseq(c, rng);
    const std::size_t k = 1 + sampling::below(rng, 6), offset = sampling::below(rng, 7);
    const Subsequence sub = every_kth(x, k, offset);
    const Subsequence tail = drop_prefix(x, offset);
    for (std::size_t j = 0; j < 60; ++j) {
      ASSERT_EQ(sub.index(j), offset + k * j);
      ASSERT_EQ(sub.sequence.at(j), x.at(offset + k * j)) << x.to_string() << " k=" << k;
      ASSERT_EQ(tail.sequence.at(j), x.at(offset + j));
    }
    EXPECT_TRUE(inf_class(sub.sequence).values().subset_of(inf_class(x).values()));
    EXPECT_EQ(inf_class(tail.sequence), inf_class(x));
  }
  EXPECT_THROW(every_kth(EPSeq::constant(c.top()), 0), ValidationError);
}
