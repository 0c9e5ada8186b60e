#include "convlab/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <ostream>
#include <sstream>

#include "convlab/bits.hpp"
#include "convlab/canonical.hpp"

namespace convlab {

namespace {

std::uint32_t full_bits(int atoms) {
  return static_cast<std::uint32_t>(bits::low_mask(std::uint32_t{1} << atoms));
}

}  // namespace

// ---------------------------------------------------------------- Carrier

Carrier::Carrier(int atoms) : atoms_(atoms) {
  if (atoms < 1 || atoms > kMaxAtoms) {
    throw ScaleError("atom count " + std::to_string(atoms) + " outside [1, " +
                     std::to_string(kMaxAtoms) + "]");
  }
}

Element Carrier::bottom() const { return Element(*this, 0); }
Element Carrier::top() const { return Element(*this, size() - 1); }
Element Carrier::element(std::uint32_t mask) const { return Element(*this, mask); }

std::vector<Element> Carrier::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::uint32_t m = 0; m < size(); ++m) out.emplace_back(*this, m);
  return out;
}

ElementSet Carrier::empty_set() const { return ElementSet(*this, 0); }
ElementSet Carrier::full_set() const { return ElementSet(*this, full_bits(atoms_)); }

void Carrier::require_same(const Carrier& other) const {
  if (atoms_ != other.atoms_) {
    throw CarrierMismatch("carrier mismatch: P(" + std::to_string(atoms_) + ") vs P(" +
                          std::to_string(other.atoms_) + ")");
  }
}

void require_tabulable(const Carrier& carrier, const char* what) {
  if (!carrier.tabulable()) {
    throw ScaleError(std::string(what) + " sweeps all classes and is limited to " +
                     std::to_string(kMaxSweepAtoms) + " atoms (got " +
                     std::to_string(carrier.atoms()) + ")");
  }
}

// ---------------------------------------------------------------- Element

Element::Element(const Carrier& carrier, std::uint32_t mask)
    : atoms_(static_cast<std::uint8_t>(carrier.atoms())), mask_(static_cast<std::uint8_t>(mask)) {
  if (mask >= carrier.size()) {
    throw ValidationError("element mask " + std::to_string(mask) + " outside P(" +
                          std::to_string(carrier.atoms()) + ")");
  }
}

std::string Element::to_string() const {
  std::string out = "{";
  bool first = true;
  bits::for_each_bit(mask_, [&](unsigned i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

namespace {

void check_pair(const Element& a, const Element& b) { a.carrier().require_same(b.carrier()); }

}  // namespace

Element meet(const Element& a, const Element& b) {
  check_pair(a, b);
  return Element(a.carrier(), a.mask() & b.mask());
}

Element join(const Element& a, const Element& b) {
  check_pair(a, b);
  return Element(a.carrier(), a.mask() | b.mask());
}

Element complement(const Element& a) {
  return Element(a.carrier(), ~a.mask() & (a.carrier().size() - 1));
}

Element difference(const Element& a, const Element& b) {
  check_pair(a, b);
  return Element(a.carrier(), a.mask() & ~b.mask());
}

Element symmetric_difference(const Element& a, const Element& b) {
  check_pair(a, b);
  return Element(a.carrier(), a.mask() ^ b.mask());
}

bool leq(const Element& a, const Element& b) {
  check_pair(a, b);
  return (a.mask() & ~b.mask()) == 0;
}

// ------------------------------------------------------------- ElementSet

ElementSet::ElementSet(const Carrier& carrier, std::uint32_t bits)
    : bits_(bits), atoms_(static_cast<std::uint8_t>(carrier.atoms())) {
  if ((bits & ~full_bits(carrier.atoms())) != 0) {
    throw ValidationError("element set has members outside P(" +
                          std::to_string(carrier.atoms()) + ")");
  }
}

ElementSet::ElementSet(const Carrier& carrier, std::span<const Element> elements)
    : ElementSet(carrier) {
  for (const auto& e : elements) insert(e);
}

int ElementSet::size() const noexcept { return std::popcount(bits_); }

bool ElementSet::contains(const Element& e) const {
  carrier().require_same(e.carrier());
  return contains_mask(e.mask());
}

bool ElementSet::subset_of(const ElementSet& other) const {
  carrier().require_same(other.carrier());
  return (bits_ & ~other.bits_) == 0;
}

ElementSet& ElementSet::insert(const Element& e) {
  carrier().require_same(e.carrier());
  bits_ |= std::uint32_t{1} << e.mask();
  return *this;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  const Carrier c = carrier();
  bits::for_each_bit(bits_, [&](unsigned m) { out.emplace_back(c, m); });
  return out;
}

ElementSet ElementSet::operator&(const ElementSet& o) const {
  carrier().require_same(o.carrier());
  return ElementSet(carrier(), bits_ & o.bits_);
}

ElementSet ElementSet::operator|(const ElementSet& o) const {
  carrier().require_same(o.carrier());
  return ElementSet(carrier(), bits_ | o.bits_);
}

ElementSet ElementSet::operator~() const {
  return ElementSet(carrier(), ~bits_ & full_bits(atoms_));
}

ElementSet ElementSet::minus(const ElementSet& o) const {
  carrier().require_same(o.carrier());
  return ElementSet(carrier(), bits_ & ~o.bits_);
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& e : elements()) {
    if (!first) out += ',';
    out += e.to_string();
    first = false;
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const ElementSet& s) { return os << s.to_string(); }

ElementSet upset(const ElementSet& a) {
  const Carrier c = a.carrier();
  std::uint32_t out = 0;
  for (std::uint32_t b = 0; b < c.size(); ++b) {
    bool above = false;
    bits::for_each_bit(a.bits(), [&](unsigned m) { above = above || (m & ~b) == 0; });
    if (above) out |= std::uint32_t{1} << b;
  }
  return ElementSet(c, out);
}

ElementSet downset(const ElementSet& a) {
  const Carrier c = a.carrier();
  std::uint32_t out = 0;
  for (std::uint32_t b = 0; b < c.size(); ++b) {
    bool below = false;
    bits::for_each_bit(a.bits(), [&](unsigned m) { below = below || (b & ~m) == 0; });
    if (below) out |= std::uint32_t{1} << b;
  }
  return ElementSet(c, out);
}

ElementSet complement_image(const ElementSet& a) {
  const std::uint32_t top = a.carrier().size() - 1;
  std::uint32_t out = 0;
  bits::for_each_bit(a.bits(), [&](unsigned m) { out |= std::uint32_t{1} << (top ^ m); });
  return ElementSet(a.carrier(), out);
}

bool is_upward_closed(const ElementSet& a) { return upset(a) == a; }
bool is_downward_closed(const ElementSet& a) { return downset(a) == a; }

Element join_all(const ElementSet& a) {
  std::uint32_t m = 0;
  bits::for_each_bit(a.bits(), [&](unsigned e) { m |= e; });
  return Element(a.carrier(), m);
}

Element meet_all(const ElementSet& a) {
  std::uint32_t m = a.carrier().size() - 1;
  bits::for_each_bit(a.bits(), [&](unsigned e) { m &= e; });
  return Element(a.carrier(), m);
}

// ------------------------------------------------------------------ EPSeq

EPSeq::EPSeq(std::vector<Element> preperiod, std::vector<Element> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw ValidationError("sequence period must be nonempty");
  const Carrier c = period_.front().carrier();
  for (const auto& e : preperiod_) c.require_same(e.carrier());
  for (const auto& e : period_) c.require_same(e.carrier());

  detail::canonicalize_periodic(preperiod_, period_);
}

Element EPSeq::at(std::size_t n) const {
  if (n < preperiod_.size()) return preperiod_[n];
  return period_[(n - preperiod_.size()) % period_.size()];
}

EPSeq EPSeq::complemented() const {
  std::vector<Element> pre, per;
  for (const auto& e : preperiod_) pre.push_back(complement(e));
  for (const auto& e : period_) per.push_back(complement(e));
  return EPSeq(std::move(pre), std::move(per));
}

EPSeq EPSeq::with_prefix(std::span<const Element> prefix) const {
  std::vector<Element> pre(prefix.begin(), prefix.end());
  pre.insert(pre.end(), preperiod_.begin(), preperiod_.end());
  return EPSeq(std::move(pre), period_);
}

std::string EPSeq::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < preperiod_.size(); ++i) {
    if (i) out += ',';
    out += preperiod_[i].to_string();
  }
  out += ';';
  for (std::size_t i = 0; i < period_.size(); ++i) {
    if (i) out += ',';
    out += period_[i].to_string();
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const EPSeq& x) { return os << x.to_string(); }

Element liminf(const EPSeq& x) {
  return meet_all(ElementSet(x.carrier(), std::span<const Element>(x.period())));
}

Element limsup(const EPSeq& x) {
  return join_all(ElementSet(x.carrier(), std::span<const Element>(x.period())));
}

// ---------------------------------------------------------------- parsing

namespace {

class Cursor {
 public:
  Cursor(const Carrier& carrier, std::string_view text) : carrier_(carrier), text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  Element element() {
    expect('{');
    std::uint32_t mask = 0;
    if (peek() == '}') {
      ++pos_;
      return Element(carrier_, 0);
    }
    while (true) {
      skip_ws();
      const std::size_t start = pos_;
      int atom = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        atom = atom * 10 + (text_[pos_] - '0');
        if (atom >= 64) break;
        ++pos_;
      }
      if (pos_ == start) fail("expected atom index");
      if (atom >= carrier_.atoms()) {
        pos_ = start;
        fail("atom " + std::to_string(atom) + " outside P(" + std::to_string(carrier_.atoms()) +
             ")");
      }
      mask |= std::uint32_t{1} << atom;
      const char c = peek();
      if (c == ',') {
        ++pos_;
        continue;
      }
      if (c == '}') {
        ++pos_;
        break;
      }
      fail("expected ',' or '}'");
    }
    return Element(carrier_, mask);
  }

  std::vector<Element> element_list(char terminator) {
    std::vector<Element> out;
    if (peek() == terminator) return out;
    while (true) {
      out.push_back(element());
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      return out;
    }
  }

 private:
  Carrier carrier_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

EPSeq parse_sequence(const Carrier& carrier, std::string_view literal) {
  Cursor cur(carrier, literal);
  cur.expect('[');
  auto pre = cur.element_list(';');
  cur.expect(';');
  auto per = cur.element_list(']');
  if (per.empty()) cur.fail("period must contain at least one element");
  cur.expect(']');
  if (!cur.at_end()) cur.fail("trailing characters");
  return EPSeq(std::move(pre), std::move(per));
}

Element parse_element(const Carrier& carrier, std::string_view literal) {
  Cursor cur(carrier, literal);
  Element e = cur.element();
  if (!cur.at_end()) cur.fail("trailing characters");
  return e;
}

}  // namespace convlab
