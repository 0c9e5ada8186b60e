#include "convlab/seqclass.hpp"

#include <numeric>

#include "convlab/bits.hpp"

namespace convlab {

InfClass::InfClass(ElementSet values) : values_(values) {
  if (values_.empty()) throw ValidationError("infinite-occurrence class must be nonempty");
}

InfClass InfClass::singleton(const Element& a) {
  ElementSet s(a.carrier());
  s.insert(a);
  return InfClass(s);
}

InfClass inf_class(const EPSeq& x) {
  return InfClass(ElementSet(x.carrier(), std::span<const Element>(x.period())));
}

std::vector<InfClass> subsequence_classes(const InfClass& s) {
  std::vector<InfClass> out;
  out.reserve((std::size_t{1} << s.size()) - 1);
  const Carrier c = s.carrier();
  bits::for_each_nonempty_submask(s.mask(), [&](std::uint64_t sub) {
    out.push_back(InfClass::from_mask(c, static_cast<std::uint32_t>(sub)));
    return true;
  });
  return out;
}

EPSeq representative(const InfClass& s) { return EPSeq({}, s.values().elements()); }

std::size_t Subsequence::index(std::size_t k) const {
  if (k < prefix_indices.size()) return prefix_indices[k];
  const std::size_t j = k - prefix_indices.size();
  const std::size_t lap = j / period_offsets.size();
  return period_offsets[j % period_offsets.size()] + lap * period_stride;
}

namespace {

// Builds x ∘ f from explicit prefix indices and a periodic index pattern.
Subsequence make_subsequence(const EPSeq& x, std::vector<std::size_t> prefix,
                             std::vector<std::size_t> offsets, std::size_t stride) {
  std::vector<Element> pre, per;
  for (auto i : prefix) pre.push_back(x.at(i));
  for (auto i : offsets) per.push_back(x.at(i));
  EPSeq seq(std::move(pre), std::move(per));
  return Subsequence{std::move(prefix), std::move(offsets), stride, std::move(seq)};
}

}  // namespace

Subsequence realize_subsequence(const EPSeq& x, const InfClass& target) {
  const InfClass own = inf_class(x);
  if (!target.values().subset_of(own.values())) {
    throw ValidationError("class " + target.to_string() + " is not contained in " +
                          own.to_string());
  }
  const std::size_t start = x.preperiod().size();
  const std::size_t p = x.period().size();
  std::vector<std::size_t> offsets;
  for (std::size_t j = 0; j < p; ++j) {
    if (target.values().contains(x.period()[j])) offsets.push_back(start + j);
  }
  return make_subsequence(x, {}, std::move(offsets), p);
}

Subsequence drop_prefix(const EPSeq& x, std::size_t count) {
  return every_kth(x, 1, count);
}

Subsequence every_kth(const EPSeq& x, std::size_t k, std::size_t offset) {
  if (k == 0) throw ValidationError("every_kth needs a positive step");
  const std::size_t pre = x.preperiod().size();
  const std::size_t p = x.period().size();
  std::vector<std::size_t> prefix;
  std::size_t n = 0;
  while (offset + k * n < pre) prefix.push_back(offset + k * n++);
  // Past the preperiod, positions mod p repeat with period p / gcd(k, p).
  const std::size_t laps = p / std::gcd(k, p);
  std::vector<std::size_t> offsets;
  for (std::size_t j = 0; j < laps; ++j) offsets.push_back(offset + k * (n + j));
  return make_subsequence(x, std::move(prefix), std::move(offsets), k * laps);
}

}  // namespace convlab
