#pragma once

// Finite Boolean algebras P(n): elements are atom masks, subsets of the
// algebra are masks over the 2^n elements in numeric order.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "convlab/errors.hpp"

namespace convlab {

inline constexpr int kMaxAtoms = 5;
/// Largest atom count on which class-indexed tables (2^(2^n) - 1 classes)
/// are materialized.
inline constexpr int kMaxSweepAtoms = 4;
inline constexpr int kDefaultAtomCap = 4;

class Element;
class ElementSet;

class Carrier {
 public:
  /// Throws ScaleError unless 1 <= atoms <= kMaxAtoms.
  explicit Carrier(int atoms);

  int atoms() const noexcept { return atoms_; }
  /// Number of elements, 2^atoms.
  std::uint32_t size() const noexcept { return std::uint32_t{1} << atoms_; }
  /// Number of nonempty subsets of the carrier.
  std::uint64_t class_count() const noexcept { return (std::uint64_t{1} << size()) - 1; }
  bool tabulable() const noexcept { return atoms_ <= kMaxSweepAtoms; }

  Element bottom() const;
  Element top() const;
  Element element(std::uint32_t mask) const;
  std::vector<Element> elements() const;

  ElementSet empty_set() const;
  ElementSet full_set() const;

  /// Throws CarrierMismatch when the atom counts differ.
  void require_same(const Carrier& other) const;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  int atoms_;
};

/// Throws ScaleError if the carrier is too large for an exhaustive sweep.
void require_tabulable(const Carrier& carrier, const char* what);

class Element {
 public:
  Element(const Carrier& carrier, std::uint32_t mask);

  std::uint32_t mask() const noexcept { return mask_; }
  Carrier carrier() const { return Carrier(atoms_); }
  int atoms() const noexcept { return atoms_; }
  bool has_atom(int i) const noexcept { return i >= 0 && i < atoms_ && ((mask_ >> i) & 1u) != 0; }
  bool is_bottom() const noexcept { return mask_ == 0; }
  bool is_top() const noexcept { return mask_ == (std::uint32_t{1} << atoms_) - 1; }

  /// Atom-list literal, e.g. "{0,2}" or "{}".
  std::string to_string() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element& a, const Element& b) = default;

 private:
  std::uint8_t atoms_;
  std::uint8_t mask_;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

Element meet(const Element& a, const Element& b);
Element join(const Element& a, const Element& b);
Element complement(const Element& a);
/// Relative difference a ∧ b′.
Element difference(const Element& a, const Element& b);
Element symmetric_difference(const Element& a, const Element& b);
bool leq(const Element& a, const Element& b);

/// A subset of the carrier, stored as a mask indexed by element mask.
class ElementSet {
 public:
  explicit ElementSet(const Carrier& carrier, std::uint32_t bits = 0);
  ElementSet(const Carrier& carrier, std::span<const Element> elements);

  std::uint32_t bits() const noexcept { return bits_; }
  Carrier carrier() const { return Carrier(atoms_); }
  int atoms() const noexcept { return atoms_; }

  bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept;
  bool contains(const Element& e) const;
  bool contains_mask(std::uint32_t element_mask) const noexcept {
    return element_mask < 32 && ((bits_ >> element_mask) & 1u) != 0;
  }
  bool subset_of(const ElementSet& other) const;

  ElementSet& insert(const Element& e);
  std::vector<Element> elements() const;

  ElementSet operator&(const ElementSet& o) const;
  ElementSet operator|(const ElementSet& o) const;
  /// Complement within the carrier.
  ElementSet operator~() const;
  ElementSet minus(const ElementSet& o) const;

  /// "{{0},{0,1}}" style listing in enumeration order.
  std::string to_string() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::uint32_t bits_;
  std::uint8_t atoms_;
};

std::ostream& operator<<(std::ostream& os, const ElementSet& s);

ElementSet upset(const ElementSet& a);
ElementSet downset(const ElementSet& a);
/// {b′ : b ∈ a}
ElementSet complement_image(const ElementSet& a);
bool is_upward_closed(const ElementSet& a);
bool is_downward_closed(const ElementSet& a);

/// ⋁ of the members; bottom for the empty set.
Element join_all(const ElementSet& a);
/// ⋀ of the members; top for the empty set.
Element meet_all(const ElementSet& a);

/// Eventually periodic sequence: preperiod followed by the period repeated
/// forever. Stored in canonical form: the period is primitive (no whole
/// repetition) and the preperiod is as short as possible, so two EPSeq
/// compare equal iff they denote the same sequence.
class EPSeq {
 public:
  EPSeq(std::vector<Element> preperiod, std::vector<Element> period);
  static EPSeq constant(const Element& a) { return EPSeq({}, {a}); }

  Carrier carrier() const { return period_.front().carrier(); }
  const std::vector<Element>& preperiod() const noexcept { return preperiod_; }
  const std::vector<Element>& period() const noexcept { return period_; }

  /// The n-th term.
  Element at(std::size_t n) const;
  /// Pointwise complement.
  EPSeq complemented() const;
  /// Same tail, extra values prepended.
  EPSeq with_prefix(std::span<const Element> prefix) const;

  /// Literal form accepted by parse_sequence: "[a,b;c,d]".
  std::string to_string() const;

  friend bool operator==(const EPSeq&, const EPSeq&) = default;

 private:
  std::vector<Element> preperiod_;
  std::vector<Element> period_;
};

std::ostream& operator<<(std::ostream& os, const EPSeq& x);

Element liminf(const EPSeq& x);
Element limsup(const EPSeq& x);

/// Parses `[pre1,pre2,...;per1,per2,...]` with elements written `{i,j,...}`.
/// Throws ParseError carrying the offending offset.
EPSeq parse_sequence(const Carrier& carrier, std::string_view literal);
Element parse_element(const Carrier& carrier, std::string_view literal);

}  // namespace convlab
