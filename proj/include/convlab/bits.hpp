#pragma once

#include <bit>
#include <cstdint>

namespace convlab::bits {

template <class F>
constexpr void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask != 0) {
    f(static_cast<unsigned>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

/// Visits every nonempty submask of `mask` in increasing numeric order.
/// The callback may return false to stop early.
template <class F>
constexpr bool for_each_nonempty_submask(std::uint64_t mask, F&& f) {
  std::uint64_t sub = 0;
  while (true) {
    sub = (sub - mask) & mask;
    if (sub == 0) return true;
    if (!f(sub)) return false;
  }
}

inline constexpr std::uint64_t low_mask(unsigned width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace convlab::bits
