#pragma once

// Topologies on a finite carrier. A finite topology is determined by the
// minimal open neighbourhood U_a of each point: a set is open iff it contains
// U_a for each of its points. Equality of neighbourhood vectors is equality of
// open families.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "convlab/algebra.hpp"
#include "convlab/convergence.hpp"
#include "convlab/seqclass.hpp"

namespace convlab {

class Topology {
 public:
  /// Throws ValidationError unless a ∈ U_a and b ∈ U_a ⇒ U_b ⊆ U_a.
  static Topology from_neighbourhoods(const Carrier& carrier, std::vector<std::uint32_t> nbhd);
  /// Throws ValidationError unless the family contains ∅ and the carrier and
  /// is closed under unions and intersections.
  static Topology from_opens(const Carrier& carrier, std::span<const ElementSet> opens);

  Carrier carrier() const { return carrier_; }
  ElementSet neighbourhood(const Element& a) const;
  std::span<const std::uint32_t> neighbourhoods() const { return nbhd_; }

  bool is_open(const ElementSet& s) const;
  bool is_closed(const ElementSet& s) const { return is_open(~s); }
  /// Every open set in increasing mask order. Limited to kMaxSweepAtoms.
  std::vector<ElementSet> opens() const;
  std::vector<ElementSet> closed_sets() const;
  std::uint64_t open_count() const;

  /// this ⊆ other as families of open sets.
  bool coarser_than(const Topology& other) const;

  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  Topology(const Carrier& carrier, std::vector<std::uint32_t> nbhd)
      : carrier_(carrier), nbhd_(std::move(nbhd)) {}

  Carrier carrier_;
  std::vector<std::uint32_t> nbhd_;
};

Topology discrete_topology(const Carrier& carrier);
Topology antidiscrete_topology(const Carrier& carrier);

/// Smallest topology containing every member of `subbase`.
Topology generate(const Carrier& carrier, std::span<const ElementSet> subbase);

/// u_λ(A) = ⋃ λ(S) over nonempty S ⊆ A.
ElementSet sequential_closure_step(const Convergence& lambda, const ElementSet& a);

enum class SynthesisStrategy {
  /// exhaustive up to 3 atoms, closure_iteration above
  automatic,
  /// test every subset A for u_λ(A) ⊆ A
  exhaustive,
  /// iterate A ← A ∪ u_λ(A) from each point to get point closures
  closure_iteration,
};

/// O_λ: open sets are complements of the u_λ-closed sets. Throws
/// PreconditionError if λ fails (L1) or (L2).
Topology synthesize_O_lambda(const Convergence& lambda,
                             SynthesisStrategy strategy = SynthesisStrategy::automatic);

/// Points every neighbourhood of which eventually contains x.
ElementSet lim_topo(const Topology& o, const EPSeq& x);
ElementSet lim_topo(const Topology& o, const InfClass& s);

Topology join_topologies(const Topology& a, const Topology& b);

/// G(O) = lim_O as a convergence.
Convergence lim_of_topology_as_convergence(const Topology& o);

/// O = O_{lim_O}.
bool is_sequential(const Topology& o);

enum class Orientation {
  /// closed sets are upward-closed, meets of decreasing chains stay inside
  upward,
  /// closed sets are downward-closed, joins of increasing chains stay inside
  downward,
};

/// Subsets satisfying the order-theoretic closed-set description.
std::vector<ElementSet> order_closed_family(const Carrier& carrier, Orientation orientation);

/// Closed sets of `o` coincide with order_closed_family(orientation).
bool check_closed_char(const Topology& o, Orientation orientation = Orientation::upward);

/// U ∈ a ⇔ {b′ : b ∈ U} ∈ b.
bool complement_homeomorphism_check(const Topology& a, const Topology& b);

struct SpaceProperties {
  bool t0 = false;
  bool connected = false;
  bool compact = true;
  std::string compact_note = "finite";
};
SpaceProperties space_properties(const Topology& o);

}  // namespace convlab
