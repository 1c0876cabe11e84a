#pragma once

// Brute-force partition counting, kept independent of the library.

#include <vector>

namespace oracle {

/// Number of partitions of d into parts of size at most n, by walking every
/// exponent vector (e1..en) with ei <= d / i and counting weighted sums equal to d.
inline long long count_partitions_brute(int n, int d) {
  if (d == 0)
    return 1;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  long long count = 0;
  while (true) {
    int s = 0;
    for (int i = 0; i < n; ++i)
      s += (i + 1) * e[static_cast<std::size_t>(i)];
    if (s == d)
      ++count;
    int pos = 0;
    while (pos < n) {
      auto& slot = e[static_cast<std::size_t>(pos)];
      if ((slot + 1) * (pos + 1) <= d) {
        ++slot;
        break;
      }
      slot = 0;
      ++pos;
    }
    if (pos == n)
      break;
  }
  return count;
}

}  // namespace oracle
