#pragma once

// P(ω) restricted to finite and cofinite sets, with the product
// topologies of the Alexandrov cube, its reverse and the Cantor cube.
// Topologies here are never materialized: limits are evaluated
// coordinatewise, one coordinate at a time.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace convlab::cube {

/// A finite or cofinite subset of ω. `support` is the set itself when finite
/// and its complement when cofinite; it is kept sorted and duplicate-free.
class FCSet {
 public:
  enum class Mode : std::uint8_t { finite, cofinite };

  static FCSet finite(std::vector<std::uint32_t> support);
  static FCSet cofinite(std::vector<std::uint32_t> support);
  static FCSet empty() { return finite({}); }
  static FCSet omega() { return cofinite({}); }

  Mode mode() const noexcept { return mode_; }
  bool is_finite() const noexcept { return mode_ == Mode::finite; }
  const std::vector<std::uint32_t>& support() const noexcept { return support_; }
  bool contains(std::uint32_t i) const;

  /// "{1,4}" for finite sets, "ω∖{1,4}" for cofinite ones.
  std::string to_string() const;

  friend bool operator==(const FCSet&, const FCSet&) = default;
  friend auto operator<=>(const FCSet&, const FCSet&) = default;

 private:
  FCSet(Mode mode, std::vector<std::uint32_t> support);

  Mode mode_;
  std::vector<std::uint32_t> support_;
};

FCSet fc_union(const FCSet& a, const FCSet& b);
FCSet fc_intersection(const FCSet& a, const FCSet& b);
FCSet fc_complement(const FCSet& a);
bool fc_subset(const FCSet& a, const FCSet& b);

/// Eventually periodic sequence of FCSets, canonicalized like EPSeq.
class FCSeq {
 public:
  FCSeq(std::vector<FCSet> preperiod, std::vector<FCSet> period);
  static FCSeq constant(FCSet a) { return FCSeq({}, {std::move(a)}); }

  const std::vector<FCSet>& preperiod() const noexcept { return preperiod_; }
  const std::vector<FCSet>& period() const noexcept { return period_; }
  const FCSet& at(std::size_t n) const;
  FCSeq complemented() const;
  std::string to_string() const;

  friend bool operator==(const FCSeq&, const FCSeq&) = default;

 private:
  std::vector<FCSet> preperiod_;
  std::vector<FCSet> period_;
};

/// {i : i ∈ X_n for all but finitely many n}
FCSet fc_liminf(const FCSeq& x);
/// {i : i ∈ X_n for infinitely many n}
FCSet fc_limsup(const FCSeq& x);

/// A topology on the two-point space {0,1}, as the list of its open sets
/// (bit 0 = point 0, bit 1 = point 1).
struct FactorTopology {
  std::vector<std::uint8_t> opens;
  bool is_open(std::uint8_t set) const;
};
/// {∅, {0}, {0,1}}
FactorTopology alexandrov_factor();
/// {∅, {1}, {0,1}}
FactorTopology reversed_alexandrov_factor();
/// all four subsets
FactorTopology discrete_factor();

/// Coordinates where x or a may differ from the generic behaviour, plus one
/// generic coordinate standing for all the others (the last entry).
std::vector<std::uint32_t> exceptional_coordinates(const FCSeq& x, const FCSet& a);

/// x → a in the product of copies of `factor`: for every coordinate i and
/// every factor-open V ∋ a(i), eventually x_n(i) ∈ V.
bool product_converges(const FactorTopology& factor, const FCSeq& x, const FCSet& a);

using LimitPredicate = std::function<bool(const FCSet&)>;

LimitPredicate lim_alexandrov(const FCSeq& x);
LimitPredicate lim_alexandrov_dual(const FCSeq& x);
/// The unique Cantor-cube limit, if x converges.
std::optional<FCSet> lim_cantor(const FCSeq& x);

/// Sets worth testing as limits of x: the lim inf/sup, every period value,
/// ∅, ω and every one-coordinate flip of lim inf/sup on the exceptional
/// coordinates.
std::vector<FCSet> candidate_limits(const FCSeq& x);

/// For each x and each candidate a: a is both an Alexandrov and a reversed
/// Alexandrov limit iff fc_liminf(x) = fc_limsup(x) = a.
bool check_alexandrov_pair_is_cantor(std::span<const FCSeq> sample);

/// The Cantor subbase {X : i ∉ X}, {X : i ∈ X} (i < window) is exactly the
/// union of the Alexandrov and reversed Alexandrov subbases, checked by
/// membership of every set in `probe`.
bool check_cantor_subbase_split(std::uint32_t window, std::span<const FCSet> probe);

}  // namespace convlab::cube
