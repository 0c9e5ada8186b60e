#include <gtest/gtest.h>

#include <sstream>

#include "convlab/convergence.hpp"
#include "convlab/submeasure.hpp"

using namespace convlab;

namespace {

Submeasure parse(const Carrier& c, const std::string& text) {
  std::istringstream in(text);
  return parse_submeasure(c, in);
}

}  // namespace

TEST(Submeasure, BuiltinValues) {
  const Carrier c(3);
  const auto mu = Submeasure::counting(c);
  EXPECT_EQ(mu(c.bottom()), Rational(0));
  EXPECT_EQ(mu(c.element(5)), Rational(2, 3));
  EXPECT_EQ(mu.distance(c.element(1), c.element(2)), Rational(2, 3));
  const auto t = Submeasure::truncated_cardinality(c);
  EXPECT_EQ(t(c.top()), Rational(1));
  EXPECT_EQ(t(c.element(1)), Rational(1));
  EXPECT_EQ(to_string(Rational(3, 6)), "1/2");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
}

TEST(Submeasure, Axioms) {
  for (int n = 1; n <= 4; ++n) {
    const Carrier c(n);
    const auto counting = validate_submeasure(Submeasure::counting(c));
    EXPECT_TRUE(counting.is_submeasure());
    EXPECT_TRUE(counting.strictly_positive);
    EXPECT_TRUE(counting.continuous);
    EXPECT_EQ(counting.continuity_note, "finite-trivial");

    const auto truncated = validate_submeasure(Submeasure::truncated_cardinality(c));
    EXPECT_TRUE(truncated.is_submeasure());
    EXPECT_TRUE(truncated.continuous);

    const auto zero = validate_submeasure(Submeasure::zero(c));
    EXPECT_TRUE(zero.is_submeasure());
    EXPECT_FALSE(zero.strictly_positive);

    EXPECT_TRUE(check_decreasing_continuity(Submeasure::counting(c)));
    EXPECT_TRUE(check_decreasing_continuity(Submeasure::truncated_cardinality(c)));
  }
}

TEST(Submeasure, TriangleInequality) {
  for (int n = 1; n <= 3; ++n) {
    const Carrier c(n);
    EXPECT_TRUE(check_triangle_inequality(Submeasure::counting(c)));
    EXPECT_TRUE(check_triangle_inequality(Submeasure::truncated_cardinality(c)));
  }
  // μ({0,1}) = 3 exceeds μ({0}) + μ({1}) = 2, so d({0},{1}) > d({0},{}) + d({},{1}).
  const Carrier c(2);
  const auto broken = Submeasure(c, {Rational(0), Rational(1), Rational(1), Rational(3)});
  EXPECT_FALSE(validate_submeasure(broken).subadditive);
  EXPECT_FALSE(check_triangle_inequality(broken));
}

TEST(Submeasure, NonMonotoneFails) {
  const Carrier c(2);
  const auto mu = Submeasure(c, {Rational(0), Rational(1), Rational(1), Rational(1, 2)});
  const auto ax = validate_submeasure(mu);
  EXPECT_FALSE(ax.monotone);
  EXPECT_FALSE(ax.is_submeasure());
  EXPECT_THROW(metric_topology(mu), PreconditionError);
}

TEST(Submeasure, ConstructionChecks) {
  const Carrier c(1);
  EXPECT_THROW(Submeasure(c, {Rational(0)}), ValidationError);
  EXPECT_THROW(Submeasure(c, {Rational(0), Rational(-1)}), ValidationError);
}

TEST(Parsing, AcceptsCommentsAndFractions) {
  const Carrier c(2);
  const auto mu = parse(c, "# table\n0 0\n\n1 1/2  # atom 0\n2 1/2\n3 1\n");
  EXPECT_EQ(mu.values(), Submeasure::counting(c).values());
  EXPECT_EQ(parse(c, "3 2/2\n2 1\n1 1\n0 0\n")(c.top()), Rational(1));
}

TEST(Parsing, RejectsBadTables) {
  const Carrier c(1);
  EXPECT_THROW(parse(c, "0 0\n"), ValidationError);
  EXPECT_THROW(parse(c, "0 0\n1 1\n1 1\n"), ValidationError);
  EXPECT_THROW(parse(c, "0 0\n2 1\n"), ValidationError);
  EXPECT_THROW(parse(c, "0 0\n1 x\n"), ValidationError);
  EXPECT_THROW(parse(c, "0 0\n1 1/0\n"), ValidationError);
  EXPECT_THROW(parse(c, "0 0\n1 -1\n"), ValidationError);
  EXPECT_THROW(parse(c, "0 0 0\n1 1\n"), ValidationError);
  EXPECT_THROW(load_submeasure(c, "/nonexistent/table.txt"), ValidationError);
}

TEST(Metric, BallsAndTopology) {
  for (int n = 1; n <= 4; ++n) {
    const Carrier c(n);
    const auto mu = Submeasure::counting(c);
    for (const auto& a : c.elements()) {
      EXPECT_EQ(ball(mu, a, Rational(1, n)).elements(), std::vector<Element>{a});
      EXPECT_EQ(ball(mu, a, Rational(2)), c.full_set());
    }
    const auto m = metric_topology(mu);
    EXPECT_EQ(m.topology, discrete_topology(c));
    EXPECT_FALSE(m.pseudo_metric);
    EXPECT_EQ(metric_topology(Submeasure::truncated_cardinality(c)).topology, discrete_topology(c));
    const auto z = metric_topology(Submeasure::zero(c));
    EXPECT_TRUE(z.pseudo_metric);
    EXPECT_EQ(z.topology, antidiscrete_topology(c));
  }
}

TEST(Metric, RadiiCoverEveryBall) {
  const Carrier c(3);
  const auto mu = Submeasure::counting(c);
  const auto radii = ball_radii(mu);
  EXPECT_TRUE(std::is_sorted(radii.begin(), radii.end()));
  for (const auto& a : c.elements()) {
    for (int num = 1; num <= 12; ++num) {
      const Rational r(num, 4);
      const auto b = ball(mu, a, r);
      bool found = false;
      for (const auto& q : radii) found = found || ball(mu, a, q) == b;
      EXPECT_TRUE(found) << "radius " << to_string(r);
    }
  }
}

TEST(Metric, HalfballOpens) {
  for (int n = 1; n <= 3; ++n) {
    const Carrier c(n);
    for (const auto& mu : {Submeasure::counting(c), Submeasure::truncated_cardinality(c)}) {
      for (const auto& a : c.elements()) {
        for (const auto& r : ball_radii(mu)) EXPECT_TRUE(check_halfball_opens(mu, a, r).all());
      }
    }
  }
}
