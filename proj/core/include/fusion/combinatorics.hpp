#pragma once

#include <cstdint>

namespace fusion {

/// C(n, k); 0 outside 0 <= k <= n, saturates at UINT64_MAX on overflow.
std::uint64_t binomial(int n, int k);

/// Number of monomials of total degree `degree` in d variables.
std::uint64_t monomial_count(int d, int degree);

/// Rising factorial (a)_p = a (a+1) ... (a+p-1); (a)_0 = 1.
double pochhammer(double a, int p);

}  // namespace fusion
