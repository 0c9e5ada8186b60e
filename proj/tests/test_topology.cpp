#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "convlab/convergence.hpp"
#include "convlab/sampling.hpp"
#include "convlab/topology.hpp"

using namespace convlab;

namespace {

// Closes subbase ∪ {∅, X} under pairwise unions and intersections until
// nothing new appears.
std::set<std::uint32_t> literal_generate(const Carrier& c, const std::vector<ElementSet>& subbase) {
  const std::uint32_t full = (c.size() == 32) ? ~0u : (std::uint32_t{1} << c.size()) - 1;
  std::set<std::uint32_t> family{0, full};
  for (const auto& s : subbase) family.insert(s.bits());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint32_t> snapshot(family.begin(), family.end());
    for (auto a : snapshot) {
      for (auto b : snapshot) {
        grew |= family.insert(a | b).second;
        grew |= family.insert(a & b).second;
      }
    }
  }
  return family;
}

std::set<std::uint32_t> masks(const Topology& t) {
  std::set<std::uint32_t> out;
  for (const auto& s : t.opens()) out.insert(s.bits());
  return out;
}

}  // namespace

TEST(Topology, DiscreteAndAntidiscrete) {
  for (int n = 1; n <= 4; ++n) {
    const Carrier c(n);
    EXPECT_EQ(discrete_topology(c).open_count(), std::uint64_t{1} << c.size());
    EXPECT_EQ(antidiscrete_topology(c).open_count(), 2u);
    EXPECT_TRUE(antidiscrete_topology(c).coarser_than(discrete_topology(c)));
    EXPECT_FALSE(discrete_topology(c).coarser_than(antidiscrete_topology(c)));
  }
}

TEST(Topology, FromOpensValidates) {
  const Carrier c(1);  // elements {} and {0}
  const std::vector<ElementSet> sierpinski{ElementSet(c, 0b00), ElementSet(c, 0b01),
                                           ElementSet(c, 0b11)};
  EXPECT_EQ(Topology::from_opens(c, sierpinski).open_count(), 3u);
  const std::vector<ElementSet> no_top{ElementSet(c, 0b00), ElementSet(c, 0b01)};
  EXPECT_THROW(Topology::from_opens(c, no_top), ValidationError);

  const Carrier d(2);
  const std::vector<ElementSet> not_closed{ElementSet(d, 0), ElementSet(d, 0b0001),
                                           ElementSet(d, 0b0010), ElementSet(d, 0b1111)};
  EXPECT_THROW(Topology::from_opens(d, not_closed), ValidationError);
}

TEST(Topology, GenerateMatchesLiteralClosure) {
  sampling::Rng rng(31);
  for (int n = 1; n <= 2; ++n) {
    const Carrier c(n);
    for (int i = 0; i < 200; ++i) {
      std::vector<ElementSet> subbase;
      const auto k = sampling::below(rng, 5);
      for (std::uint64_t j = 0; j < k; ++j) {
        subbase.emplace_back(c, static_cast<std::uint32_t>(sampling::below(rng, std::uint64_t{1} << c.size())));
      }
      ASSERT_EQ(masks(generate(c, subbase)), literal_generate(c, subbase));
    }
  }
}

TEST(Topology, JoinIsGeneratedByPairwiseIntersections) {
  sampling::Rng rng(37);
  for (int n = 1; n <= 3; ++n) {
    const Carrier c(n);
    for (int i = 0; i < 30; ++i) {
      const Topology a = sampling::random_topology(c, rng);
      const Topology b = sampling::random_topology(c, rng);
      std::vector<ElementSet> products;
      for (const auto& u : a.opens()) {
        for (const auto& v : b.opens()) products.push_back(u & v);
      }
      const Topology j = join_topologies(a, b);
      EXPECT_EQ(j, generate(c, products));
      EXPECT_TRUE(a.coarser_than(j));
      EXPECT_TRUE(b.coarser_than(j));
    }
  }
}

TEST(Synthesis, StrategiesAgree) {
  sampling::Rng rng(41);
  for (int n = 1; n <= 3; ++n) {
    const Carrier c(n);
    std::vector<Convergence> sample{ls_convergence(c), li_convergence(c), s_convergence(c)};
    for (int i = 0; i < 20; ++i) {
      sample.push_back(sampling::repair_L1_L2(sampling::random_convergence(c, rng)));
    }
    for (const auto& lambda : sample) {
      EXPECT_EQ(synthesize_O_lambda(lambda, SynthesisStrategy::exhaustive),
                synthesize_O_lambda(lambda, SynthesisStrategy::closure_iteration));
    }
  }
}

TEST(Synthesis, DownSetCounts) {
  const std::uint64_t expected[] = {3, 6, 20, 168};
  for (int n = 1; n <= 4; ++n) {
    const Carrier c(n);
    const Topology o_ls = synthesize_O_lambda(ls_convergence(c));
    const Topology o_li = synthesize_O_lambda(li_convergence(c));
    EXPECT_EQ(o_ls.open_count(), expected[n - 1]);
    EXPECT_EQ(o_li.open_count(), expected[n - 1]);
    for (const auto& u : o_ls.opens()) EXPECT_TRUE(is_downward_closed(u));
    for (const auto& u : o_li.opens()) EXPECT_TRUE(is_upward_closed(u));
    EXPECT_EQ(synthesize_O_lambda(s_convergence(c)), discrete_topology(c));
  }
}

TEST(Synthesis, RejectsConvergencesFailingL1) {
  const Carrier c(2);
  EXPECT_THROW(synthesize_O_lambda(constant_convergence(c.empty_set())), PreconditionError);
}

TEST(Synthesis, ClosedSetsAreClosureFixedPoints) {
  sampling::Rng rng(43);
  const Carrier c(3);
  for (int i = 0; i < 10; ++i) {
    const auto lambda = sampling::repair_L1_L2(sampling::random_convergence(c, rng));
    const Topology o = synthesize_O_lambda(lambda);
    for (std::uint32_t m = 0; m < 256; ++m) {
      const ElementSet a(c, m);
      const ElementSet step = sequential_closure_step(lambda, a);
      EXPECT_TRUE(a.subset_of(step));
      EXPECT_EQ(o.is_closed(a), step == a);
    }
  }
}

TEST(Limits, SequenceAndClassAgree) {
  sampling::Rng rng(47);
  const Carrier c(3);
  const Topology o = synthesize_O_lambda(ls_convergence(c));
  for (int i = 0; i < 200; ++i) {
    const EPSeq x = sampling::random_epseq(c, rng);
    EXPECT_EQ(lim_topo(o, x), lim_topo(o, inf_class(x)));
    EXPECT_EQ(lim_topo(o, x), lambda_ls(inf_class(x)));
  }
}

TEST(Limits, FiveAtomsWithoutTables) {
  const Carrier c(5);
  const EPSeq x = parse_sequence(c, "[;{0},{1}]");
  EXPECT_EQ(lim_topo(discrete_topology(c), x).size(), 0);
  EXPECT_EQ(lim_topo(antidiscrete_topology(c), x), c.full_set());
}

TEST(Galois, AdjunctionAndAntitonicity) {
  sampling::Rng rng(53);
  for (int n = 1; n <= 3; ++n) {
    const Carrier c(n);
    for (int i = 0; i < 15; ++i) {
      const auto l1 = sampling::repair_L1_L2(sampling::random_convergence(c, rng));
      const auto l2 = sampling::repair_L1_L2(sampling::random_convergence(c, rng));
      const auto lower = meet_conv(l1, l2);
      EXPECT_TRUE(synthesize_O_lambda(l1).coarser_than(synthesize_O_lambda(lower)));
      EXPECT_TRUE(leq_conv(l1, lim_of_topology_as_convergence(synthesize_O_lambda(l1))));

      const Topology t1 = sampling::random_topology(c, rng);
      const Topology t2 = sampling::random_topology(c, rng);
      const Topology finer = join_topologies(t1, t2);
      EXPECT_TRUE(leq_conv(lim_of_topology_as_convergence(finer), lim_of_topology_as_convergence(t1)));
      EXPECT_TRUE(t1.coarser_than(synthesize_O_lambda(lim_of_topology_as_convergence(t1))));
      EXPECT_TRUE(is_sequential(t1));
    }
  }
}

TEST(OrderFamilies, ClosedSetCharacterization) {
  for (int n = 1; n <= 4; ++n) {
    const Carrier c(n);
    const auto up = order_closed_family(c, Orientation::upward);
    const auto down = order_closed_family(c, Orientation::downward);
    EXPECT_EQ(up.size(), down.size());
    for (const auto& s : up) EXPECT_TRUE(is_upward_closed(s));
    EXPECT_TRUE(check_closed_char(synthesize_O_lambda(ls_convergence(c)), Orientation::upward));
    EXPECT_TRUE(check_closed_char(synthesize_O_lambda(li_convergence(c)), Orientation::downward));
    EXPECT_FALSE(check_closed_char(discrete_topology(c), Orientation::upward));
  }
}

TEST(Space, ComplementHomeomorphismAndProperties) {
  for (int n = 1; n <= 4; ++n) {
    const Carrier c(n);
    const Topology o_ls = synthesize_O_lambda(ls_convergence(c));
    const Topology o_li = synthesize_O_lambda(li_convergence(c));
    EXPECT_TRUE(complement_homeomorphism_check(o_ls, o_li));
    EXPECT_FALSE(complement_homeomorphism_check(o_ls, discrete_topology(c)));
    const auto p = space_properties(o_ls);
    EXPECT_TRUE(p.t0);
    EXPECT_TRUE(p.connected);
    EXPECT_TRUE(p.compact);
    EXPECT_EQ(p.compact_note, "finite");
    EXPECT_FALSE(space_properties(discrete_topology(c)).connected);
    EXPECT_FALSE(space_properties(antidiscrete_topology(c)).t0);
  }
}
