#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "convlab/algebra.hpp"
#include "convlab/topology.hpp"

namespace convlab {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

/// A nonnegative rational valuation of every element of P(n).
class Submeasure {
 public:
  /// `values[m]` is the value of the element with mask m. Throws
  /// ValidationError for a non-total table or a negative value.
  Submeasure(const Carrier& carrier, std::vector<Rational> values);

  /// |atoms(a)| / n
  static Submeasure counting(const Carrier& carrier);
  /// min(1, |atoms(a)|)
  static Submeasure truncated_cardinality(const Carrier& carrier);
  static Submeasure zero(const Carrier& carrier);

  Carrier carrier() const { return carrier_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  Rational operator()(const Element& a) const;
  /// μ(a △ b)
  Rational distance(const Element& a, const Element& b) const;

 private:
  Carrier carrier_;
  std::vector<Rational> values_;
};

/// Reads lines `element-mask numerator/denominator` (or an integer value);
/// blank lines and `#` comments are skipped.
Submeasure parse_submeasure(const Carrier& carrier, std::istream& in);
Submeasure load_submeasure(const Carrier& carrier, const std::filesystem::path& path);

struct SubmeasureAxioms {
  bool zero_at_bottom = false;
  bool monotone = false;
  bool subadditive = false;
  bool strictly_positive = false;
  /// Decreasing chains in a finite algebra stabilize at their meet, so
  /// continuity at 0 reduces to zero_at_bottom.
  bool continuous = false;
  std::string continuity_note = "finite-trivial";

  bool is_submeasure() const { return zero_at_bottom && monotone && subadditive; }
};

SubmeasureAxioms validate_submeasure(const Submeasure& mu);

/// d(x, y) = μ(x △ y) obeys the triangle inequality on every triple.
bool check_triangle_inequality(const Submeasure& mu);

/// Along every decreasing chain (as an eventually constant sequence) the
/// values μ(a_n) settle at μ(⋀ a_n).
bool check_decreasing_continuity(const Submeasure& mu);

/// {x : μ(x △ a) < r}
ElementSet ball(const Submeasure& mu, const Element& a, const Rational& r);
/// Attained distances, midpoints between consecutive ones, and one radius
/// above the maximum. Every distinct ball arises from one of these.
std::vector<Rational> ball_radii(const Submeasure& mu);

struct MetricTopology {
  Topology topology;
  /// μ is not strictly positive, so d only separates up to μ-null differences.
  bool pseudo_metric = false;
};
/// Topology generated by all balls. Throws PreconditionError unless μ is
/// zero at the bottom, monotone and subadditive.
MetricTopology metric_topology(const Submeasure& mu);

struct HalfballCheck {
  bool o1_in_left = false;   // {x : μ(x∖a) < r/2} open in O_λls
  bool o2_in_right = false;  // {x : μ(a∖x) < r/2} open in O_λli
  bool contains_a = false;
  bool inside_ball = false;  // O1 ∩ O2 ⊆ B(a, r)

  bool all() const { return o1_in_left && o2_in_right && contains_a && inside_ball; }
};
HalfballCheck check_halfball_opens(const Submeasure& mu, const Element& a, const Rational& r);

}  // namespace convlab
