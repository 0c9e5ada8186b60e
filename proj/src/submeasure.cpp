#include "convlab/submeasure.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>

#include "convlab/bits.hpp"
#include "convlab/convergence.hpp"

namespace convlab {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Submeasure::Submeasure(const Carrier& carrier, std::vector<Rational> values)
    : carrier_(carrier), values_(std::move(values)) {
  if (values_.size() != carrier.size()) {
    throw ValidationError("submeasure table has " + std::to_string(values_.size()) +
                          " entries, P(" + std::to_string(carrier.atoms()) + ") needs " +
                          std::to_string(carrier.size()));
  }
  for (std::size_t m = 0; m < values_.size(); ++m) {
    if (values_[m] < Rational(0)) {
      throw ValidationError("submeasure value at mask " + std::to_string(m) + " is negative");
    }
  }
}

Submeasure Submeasure::counting(const Carrier& carrier) {
  std::vector<Rational> v;
  for (std::uint32_t m = 0; m < carrier.size(); ++m) {
    v.emplace_back(std::popcount(m), carrier.atoms());
  }
  return Submeasure(carrier, std::move(v));
}

Submeasure Submeasure::truncated_cardinality(const Carrier& carrier) {
  std::vector<Rational> v;
  for (std::uint32_t m = 0; m < carrier.size(); ++m) v.emplace_back(m == 0 ? 0 : 1);
  return Submeasure(carrier, std::move(v));
}

Submeasure Submeasure::zero(const Carrier& carrier) {
  return Submeasure(carrier, std::vector<Rational>(carrier.size(), Rational(0)));
}

Rational Submeasure::operator()(const Element& a) const {
  carrier_.require_same(a.carrier());
  return values_[a.mask()];
}

Rational Submeasure::distance(const Element& a, const Element& b) const {
  return (*this)(symmetric_difference(a, b));
}

// ---------------------------------------------------------------- loading

namespace {

std::int64_t parse_int(std::string_view text, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("submeasure line " + std::to_string(line) + ": bad integer '" +
                          std::string(text) + "'");
  }
  return v;
}

}  // namespace

Submeasure parse_submeasure(const Carrier& carrier, std::istream& in) {
  std::vector<std::optional<Rational>> table(carrier.size());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string mask_text, value_text, extra;
    if (!(fields >> mask_text)) continue;
    if (!(fields >> value_text) || (fields >> extra)) {
      throw ValidationError("submeasure line " + std::to_string(lineno) +
                            ": expected `mask numerator/denominator`");
    }
    const auto mask = parse_int(mask_text, lineno);
    if (mask < 0 || mask >= static_cast<std::int64_t>(carrier.size())) {
      throw ValidationError("submeasure line " + std::to_string(lineno) + ": mask " + mask_text +
                            " outside P(" + std::to_string(carrier.atoms()) + ")");
    }
    Rational value;
    if (auto slash = value_text.find('/'); slash != std::string::npos) {
      const auto den = parse_int(std::string_view(value_text).substr(slash + 1), lineno);
      if (den == 0) {
        throw ValidationError("submeasure line " + std::to_string(lineno) + ": zero denominator");
      }
      value = Rational(parse_int(std::string_view(value_text).substr(0, slash), lineno), den);
    } else {
      value = Rational(parse_int(value_text, lineno));
    }
    if (table[mask]) {
      throw ValidationError("submeasure line " + std::to_string(lineno) + ": mask " + mask_text +
                            " given twice");
    }
    table[mask] = value;
  }
  std::vector<Rational> values;
  for (std::size_t m = 0; m < table.size(); ++m) {
    if (!table[m]) {
      throw ValidationError("submeasure table is not total: no value for mask " +
                            std::to_string(m));
    }
    values.push_back(*table[m]);
  }
  return Submeasure(carrier, std::move(values));
}

Submeasure load_submeasure(const Carrier& carrier, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open submeasure file " + path.string());
  return parse_submeasure(carrier, in);
}

// ----------------------------------------------------------------- axioms

SubmeasureAxioms validate_submeasure(const Submeasure& mu) {
  const auto& v = mu.values();
  const std::uint32_t n = mu.carrier().size();
  SubmeasureAxioms ax;
  ax.zero_at_bottom = v[0] == Rational(0);
  ax.monotone = true;
  ax.subadditive = true;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if ((a & ~b) == 0 && v[a] > v[b]) ax.monotone = false;
      if (v[a | b] > v[a] + v[b]) ax.subadditive = false;
    }
  }
  ax.strictly_positive = true;
  for (std::uint32_t a = 1; a < n; ++a) {
    if (v[a] <= Rational(0)) ax.strictly_positive = false;
  }
  ax.continuous = ax.zero_at_bottom;
  return ax;
}

bool check_triangle_inequality(const Submeasure& mu) {
  const auto& v = mu.values();
  const std::uint32_t n = mu.carrier().size();
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      for (std::uint32_t z = 0; z < n; ++z) {
        if (v[x ^ z] > v[x ^ y] + v[y ^ z]) return false;
      }
    }
  }
  return true;
}

bool check_decreasing_continuity(const Submeasure& mu) {
  const Carrier c = mu.carrier();
  std::vector<Element> chain;
  bool ok = true;
  auto extend = [&](auto&& self) -> void {
    if (!ok) return;
    const EPSeq x(std::vector<Element>(chain.begin(), chain.end() - 1), {chain.back()});
    const Element bottom_of_chain = meet_all(ElementSet(c, std::span<const Element>(chain)));
    const std::size_t settle = x.preperiod().size();
    for (std::size_t k = settle; k < settle + 4; ++k) {
      if (mu(x.at(k)) != mu(bottom_of_chain)) ok = false;
    }
    const std::uint32_t last = chain.back().mask();
    for (std::uint32_t next = 0; next < c.size(); ++next) {
      if ((next & ~last) == 0 && next != last) {
        chain.push_back(c.element(next));
        self(self);
        chain.pop_back();
      }
    }
  };
  for (const auto& start : c.elements()) {
    chain.assign(1, start);
    extend(extend);
  }
  return ok;
}

// ----------------------------------------------------------------- metric

ElementSet ball(const Submeasure& mu, const Element& a, const Rational& r) {
  const Carrier c = mu.carrier();
  std::uint32_t out = 0;
  for (std::uint32_t x = 0; x < c.size(); ++x) {
    if (mu.values()[x ^ a.mask()] < r) out |= std::uint32_t{1} << x;
  }
  return ElementSet(c, out);
}

std::vector<Rational> ball_radii(const Submeasure& mu) {
  // d(x, a) ranges over the values of μ itself (x = a △ b).
  std::set<Rational> attained(mu.values().begin(), mu.values().end());
  std::vector<Rational> radii(attained.begin(), attained.end());
  std::vector<Rational> out;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] > Rational(0)) out.push_back(radii[i]);
    if (i + 1 < radii.size()) out.push_back((radii[i] + radii[i + 1]) / 2);
  }
  out.push_back(radii.back() + 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MetricTopology metric_topology(const Submeasure& mu) {
  const auto ax = validate_submeasure(mu);
  if (!ax.is_submeasure()) {
    throw PreconditionError("metric_topology needs a submeasure that vanishes at zero, is monotone and is subadditive");
  }
  const Carrier c = mu.carrier();
  std::vector<ElementSet> balls;
  for (const auto& a : c.elements()) {
    for (const auto& r : ball_radii(mu)) balls.push_back(ball(mu, a, r));
  }
  return MetricTopology{generate(c, balls), !ax.strictly_positive};
}

HalfballCheck check_halfball_opens(const Submeasure& mu, const Element& a, const Rational& r) {
  const Carrier c = mu.carrier();
  c.require_same(a.carrier());
  const Rational half = r / 2;
  std::uint32_t o1 = 0, o2 = 0;
  for (std::uint32_t x = 0; x < c.size(); ++x) {
    if (mu.values()[x & ~a.mask()] < half) o1 |= std::uint32_t{1} << x;
    if (mu.values()[a.mask() & ~x] < half) o2 |= std::uint32_t{1} << x;
  }
  const ElementSet left(c, o1), right(c, o2);
  HalfballCheck out;
  out.o1_in_left = synthesize_O_lambda(ls_convergence(c)).is_open(left);
  out.o2_in_right = synthesize_O_lambda(li_convergence(c)).is_open(right);
  out.contains_a = left.contains(a) && right.contains(a);
  out.inside_ball = (left & right).subset_of(ball(mu, a, r));
  return out;
}

}  // namespace convlab
