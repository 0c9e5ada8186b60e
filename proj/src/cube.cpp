#include "convlab/cube.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "convlab/canonical.hpp"
#include "convlab/errors.hpp"

namespace convlab::cube {

namespace {

using Support = std::vector<std::uint32_t>;

Support set_union(const Support& a, const Support& b) {
  Support out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Support set_intersection(const Support& a, const Support& b) {
  Support out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Support set_difference(const Support& a, const Support& b) {
  Support out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string list(const Support& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

// ------------------------------------------------------------------ FCSet

FCSet::FCSet(Mode mode, std::vector<std::uint32_t> support)
    : mode_(mode), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

FCSet FCSet::finite(std::vector<std::uint32_t> support) {
  return FCSet(Mode::finite, std::move(support));
}

FCSet FCSet::cofinite(std::vector<std::uint32_t> support) {
  return FCSet(Mode::cofinite, std::move(support));
}

bool FCSet::contains(std::uint32_t i) const {
  const bool listed = std::binary_search(support_.begin(), support_.end(), i);
  return is_finite() ? listed : !listed;
}

std::string FCSet::to_string() const {
  return is_finite() ? list(support_) : "ω∖" + list(support_);
}

FCSet fc_union(const FCSet& a, const FCSet& b) {
  if (a.is_finite() && b.is_finite()) return FCSet::finite(set_union(a.support(), b.support()));
  if (!a.is_finite() && !b.is_finite()) {
    return FCSet::cofinite(set_intersection(a.support(), b.support()));
  }
  const FCSet& fin = a.is_finite() ? a : b;
  const FCSet& cof = a.is_finite() ? b : a;
  return FCSet::cofinite(set_difference(cof.support(), fin.support()));
}

FCSet fc_intersection(const FCSet& a, const FCSet& b) {
  if (a.is_finite() && b.is_finite()) {
    return FCSet::finite(set_intersection(a.support(), b.support()));
  }
  if (!a.is_finite() && !b.is_finite()) return FCSet::cofinite(set_union(a.support(), b.support()));
  const FCSet& fin = a.is_finite() ? a : b;
  const FCSet& cof = a.is_finite() ? b : a;
  return FCSet::finite(set_difference(fin.support(), cof.support()));
}

FCSet fc_complement(const FCSet& a) {
  return a.is_finite() ? FCSet::cofinite(a.support()) : FCSet::finite(a.support());
}

bool fc_subset(const FCSet& a, const FCSet& b) { return fc_union(a, b) == b; }

// ------------------------------------------------------------------ FCSeq

FCSeq::FCSeq(std::vector<FCSet> preperiod, std::vector<FCSet> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw ValidationError("sequence period must be nonempty");
  detail::canonicalize_periodic(preperiod_, period_);
}

const FCSet& FCSeq::at(std::size_t n) const {
  if (n < preperiod_.size()) return preperiod_[n];
  return period_[(n - preperiod_.size()) % period_.size()];
}

FCSeq FCSeq::complemented() const {
  std::vector<FCSet> pre, per;
  for (const auto& s : preperiod_) pre.push_back(fc_complement(s));
  for (const auto& s : period_) per.push_back(fc_complement(s));
  return FCSeq(std::move(pre), std::move(per));
}

std::string FCSeq::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < preperiod_.size(); ++i) out += (i ? "," : "") + preperiod_[i].to_string();
  out += ';';
  for (std::size_t i = 0; i < period_.size(); ++i) out += (i ? "," : "") + period_[i].to_string();
  return out + "]";
}

FCSet fc_liminf(const FCSeq& x) {
  FCSet out = FCSet::omega();
  for (const auto& s : x.period()) out = fc_intersection(out, s);
  return out;
}

FCSet fc_limsup(const FCSeq& x) {
  FCSet out = FCSet::empty();
  for (const auto& s : x.period()) out = fc_union(out, s);
  return out;
}

// ------------------------------------------------------------- coordinates

bool FactorTopology::is_open(std::uint8_t set) const {
  return std::find(opens.begin(), opens.end(), set) != opens.end();
}

FactorTopology alexandrov_factor() { return {{0b00, 0b01, 0b11}}; }
FactorTopology reversed_alexandrov_factor() { return {{0b00, 0b10, 0b11}}; }
FactorTopology discrete_factor() { return {{0b00, 0b01, 0b10, 0b11}}; }

std::vector<std::uint32_t> exceptional_coordinates(const FCSeq& x, const FCSet& a) {
  Support coords = a.support();
  for (const auto& s : x.preperiod()) coords = set_union(coords, s.support());
  for (const auto& s : x.period()) coords = set_union(coords, s.support());
  // Outside these coordinates every set is constant (its mode), so one
  // fresh coordinate behaves like all the rest.
  coords.push_back(coords.empty() ? 0 : coords.back() + 1);
  return coords;
}

bool product_converges(const FactorTopology& factor, const FCSeq& x, const FCSet& a) {
  for (const auto i : exceptional_coordinates(x, a)) {
    const unsigned target = a.contains(i) ? 1 : 0;
    for (const auto v : factor.opens) {
      if (((v >> target) & 1u) == 0) continue;
      // Eventually in V iff every period value's coordinate lies in V.
      for (const auto& s : x.period()) {
        if (((v >> (s.contains(i) ? 1 : 0)) & 1u) == 0) return false;
      }
    }
  }
  return true;
}

LimitPredicate lim_alexandrov(const FCSeq& x) {
  return [x](const FCSet& a) { return product_converges(alexandrov_factor(), x, a); };
}

LimitPredicate lim_alexandrov_dual(const FCSeq& x) {
  return [x](const FCSet& a) { return product_converges(reversed_alexandrov_factor(), x, a); };
}

std::optional<FCSet> lim_cantor(const FCSeq& x) {
  const auto coords = exceptional_coordinates(x, FCSet::empty());
  const std::uint32_t generic = coords.back();
  auto settled = [&](std::uint32_t i) -> std::optional<bool> {
    const bool first = x.period().front().contains(i);
    for (const auto& s : x.period()) {
      if (s.contains(i) != first) return std::nullopt;
    }
    return first;
  };
  const auto generic_value = settled(generic);
  if (!generic_value) return std::nullopt;
  Support flipped;
  for (std::size_t k = 0; k + 1 < coords.size(); ++k) {
    const auto v = settled(coords[k]);
    if (!v) return std::nullopt;
    if (*v != *generic_value) flipped.push_back(coords[k]);
  }
  FCSet candidate = *generic_value ? FCSet::cofinite(flipped) : FCSet::finite(flipped);
  if (!product_converges(discrete_factor(), x, candidate)) return std::nullopt;
  return candidate;
}

std::vector<FCSet> candidate_limits(const FCSeq& x) {
  std::vector<FCSet> out{fc_liminf(x), fc_limsup(x), FCSet::empty(), FCSet::omega()};
  out.insert(out.end(), x.period().begin(), x.period().end());
  const auto coords = exceptional_coordinates(x, fc_limsup(x));
  for (const auto& base : {fc_liminf(x), fc_limsup(x)}) {
    for (const auto i : coords) {
      const FCSet single = FCSet::finite({i});
      out.push_back(base.contains(i) ? fc_intersection(base, fc_complement(single))
                                     : fc_union(base, single));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool check_alexandrov_pair_is_cantor(std::span<const FCSeq> sample) {
  for (const auto& x : sample) {
    const FCSet lo = fc_liminf(x);
    const FCSet hi = fc_limsup(x);
    const auto left = lim_alexandrov(x);
    const auto right = lim_alexandrov_dual(x);
    for (const auto& a : candidate_limits(x)) {
      const bool both = left(a) && right(a);
      const bool expected = lo == hi && a == lo;
      if (both != expected) return false;
    }
  }
  return true;
}

bool check_cantor_subbase_split(std::uint32_t window, std::span<const FCSet> probe) {
  // A subbasic set {X : χ_X(i) ∈ V} is recorded as (i, membership over probe).
  using Signature = std::pair<std::uint32_t, std::vector<bool>>;
  auto subbase = [&](const std::vector<FactorTopology>& factors) {
    std::set<Signature> out;
    for (const auto& f : factors) {
      for (const auto v : f.opens) {
        if (v == 0b00 || v == 0b11) continue;
        for (std::uint32_t i = 0; i < window; ++i) {
          std::vector<bool> member;
          for (const auto& x : probe) member.push_back(((v >> (x.contains(i) ? 1 : 0)) & 1u) != 0);
          out.emplace(i, std::move(member));
        }
      }
    }
    return out;
  };
  return subbase({discrete_factor()}) ==
         subbase({alexandrov_factor(), reversed_alexandrov_factor()});
}

}  // namespace convlab::cube
