#include "fusion/combinatorics.hpp"

#include <algorithm>
#include <limits>

namespace fusion {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const auto num = static_cast<std::uint64_t>(n - k + i);
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    // r * num is divisible by i at every step.
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t monomial_count(int d, int degree) { return binomial(d + degree - 1, degree); }

double pochhammer(double a, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= a + i;
  return r;
}

}  // namespace fusion
