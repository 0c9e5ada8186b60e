#pragma once

// Infinite-occurrence classes. On a finite carrier every convergence and every
// topological limit computed here depends on a sequence only through the set
// of values it takes infinitely often, and a subsequence can realize exactly
// the nonempty subsets of that set. See docs/reduction.md.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "convlab/algebra.hpp"

namespace convlab {

class InfClass {
 public:
  /// Throws ValidationError if `values` is empty.
  explicit InfClass(ElementSet values);
  static InfClass from_mask(const Carrier& carrier, std::uint32_t mask) {
    return InfClass(ElementSet(carrier, mask));
  }
  static InfClass singleton(const Element& a);

  const ElementSet& values() const noexcept { return values_; }
  std::uint32_t mask() const noexcept { return values_.bits(); }
  Carrier carrier() const { return values_.carrier(); }
  int size() const noexcept { return values_.size(); }

  Element liminf() const { return meet_all(values_); }
  Element limsup() const { return join_all(values_); }

  std::string to_string() const { return values_.to_string(); }

  friend bool operator==(const InfClass&, const InfClass&) = default;

 private:
  ElementSet values_;
};

InfClass inf_class(const EPSeq& x);

/// Every nonempty S′ ⊆ S, in increasing mask order; 2^|S| − 1 entries.
std::vector<InfClass> subsequence_classes(const InfClass& s);

/// Empty preperiod, period = the values of `s` in enumeration order.
EPSeq representative(const InfClass& s);

/// An increasing index map f with x ∘ f eventually periodic. `index(k)` is
/// f(k) and `sequence` is x ∘ f.
struct Subsequence {
  std::vector<std::size_t> prefix_indices;
  std::vector<std::size_t> period_offsets;
  std::size_t period_stride = 0;
  EPSeq sequence;

  std::size_t index(std::size_t k) const;
};

/// Realizes a subsequence of `x` whose class is `target`: skip the preperiod,
/// then keep the period positions holding a value of `target`.
/// Throws ValidationError unless target ⊆ inf_class(x).
Subsequence realize_subsequence(const EPSeq& x, const InfClass& target);

/// x with its first `count` terms deleted.
Subsequence drop_prefix(const EPSeq& x, std::size_t count);

/// ⟨x_{offset + k·n}⟩, k ≥ 1.
Subsequence every_kth(const EPSeq& x, std::size_t k, std::size_t offset = 0);

/// Invokes f(InfClass) for every class of the carrier in mask order.
/// Throws ScaleError above kMaxSweepAtoms.
template <class F>
void for_each_class(const Carrier& carrier, F&& f) {
  require_tabulable(carrier, "class enumeration");
  const std::uint64_t count = carrier.class_count();
  for (std::uint64_t m = 1; m <= count; ++m) {
    f(InfClass::from_mask(carrier, static_cast<std::uint32_t>(m)));
  }
}

}  // namespace convlab
