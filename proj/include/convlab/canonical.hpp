#pragma once

#include <algorithm>
#include <vector>

namespace convlab::detail {

/// Rewrites (preperiod, period) so the period is primitive and the
/// preperiod is as short as possible; the denoted sequence is unchanged.
template <class T>
void canonicalize_periodic(std::vector<T>& preperiod, std::vector<T>& period) {
  const std::size_t p = period.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < p && repeats; ++i) repeats = period[i] == period[i - d];
    if (repeats) {
      period.erase(period.begin() + static_cast<std::ptrdiff_t>(d), period.end());
      break;
    }
  }
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    preperiod.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
}

}  // namespace convlab::detail
