#include "convlab/sampling.hpp"

#include "convlab/bits.hpp"

namespace convlab::sampling {

std::uint64_t below(Rng& rng, std::uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

Element random_element(const Carrier& carrier, Rng& rng) {
  return carrier.element(static_cast<std::uint32_t>(below(rng, carrier.size())));
}

EPSeq random_epseq(const Carrier& carrier, Rng& rng, std::size_t max_pre, std::size_t max_period) {
  std::vector<Element> pre, per;
  const auto pre_len = below(rng, max_pre + 1);
  const auto per_len = 1 + below(rng, max_period);
  for (std::uint64_t i = 0; i < pre_len; ++i) pre.push_back(random_element(carrier, rng));
  for (std::uint64_t i = 0; i < per_len; ++i) per.push_back(random_element(carrier, rng));
  return EPSeq(std::move(pre), std::move(per));
}

InfClass random_class(const Carrier& carrier, Rng& rng) {
  return InfClass::from_mask(carrier, static_cast<std::uint32_t>(1 + below(rng, carrier.class_count())));
}

Convergence random_convergence(const Carrier& carrier, Rng& rng) {
  require_tabulable(carrier, "random convergence");
  const auto full = bits::low_mask(carrier.size());
  std::vector<std::uint32_t> table(carrier.class_count() + 1);
  for (auto& v : table) v = static_cast<std::uint32_t>(rng() & full);
  return Convergence::from_table(carrier, std::move(table), "random");
}

Convergence repair_L1_L2(const Convergence& lambda) {
  const Carrier c = lambda.carrier();
  auto src = lambda.table();
  std::vector<std::uint32_t> t(src.begin(), src.end());
  for (std::uint32_t a = 0; a < c.size(); ++a) t[std::size_t{1} << a] |= std::uint32_t{1} << a;
  t[0] = static_cast<std::uint32_t>(bits::low_mask(c.size()));
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < t.size(); ++m) {
      if (m & bit) t[m] &= t[m ^ bit];
    }
  }
  return Convergence::from_table(c, std::move(t), lambda.name());
}

Topology random_topology(const Carrier& carrier, Rng& rng) {
  const auto full = bits::low_mask(carrier.size());
  const auto count = below(rng, 2 * carrier.size() + 1);
  std::vector<ElementSet> subbase;
  for (std::uint64_t i = 0; i < count; ++i) {
    // Sparse and dense sets both show up: AND/OR a couple of draws.
    std::uint64_t draw = rng() & full;
    switch (below(rng, 3)) {
      case 0: draw &= rng(); break;
      case 1: draw |= rng() & full; break;
      default: break;
    }
    subbase.emplace_back(carrier, static_cast<std::uint32_t>(draw));
  }
  return generate(carrier, subbase);
}

cube::FCSet random_fcset(Rng& rng, std::uint32_t window) {
  std::vector<std::uint32_t> support;
  const auto draw = rng();
  for (std::uint32_t i = 0; i < window; ++i) {
    if ((draw >> i) & 1u) support.push_back(i);
  }
  return below(rng, 2) == 0 ? cube::FCSet::finite(std::move(support))
                            : cube::FCSet::cofinite(std::move(support));
}

cube::FCSeq random_fcseq(Rng& rng, std::uint32_t window, std::size_t max_pre,
                         std::size_t max_period) {
  std::vector<cube::FCSet> pre, per;
  const auto pre_len = below(rng, max_pre + 1);
  const auto per_len = 1 + below(rng, max_period);
  for (std::uint64_t i = 0; i < pre_len; ++i) pre.push_back(random_fcset(rng, window));
  // Constant sequences are otherwise rare; force some.
  if (below(rng, 5) == 0) {
    per.push_back(random_fcset(rng, window));
  } else {
    for (std::uint64_t i = 0; i < per_len; ++i) per.push_back(random_fcset(rng, window));
  }
  return cube::FCSeq(std::move(pre), std::move(per));
}

}  // namespace convlab::sampling
