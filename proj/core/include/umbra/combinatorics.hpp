#pragma once

#include <cstddef>

#include "umbra/rational.hpp"

namespace umbra {

Integer factorial(std::size_t n);

// Zero when k > n.
Integer binomial(std::size_t n, std::size_t k);

// n!/(n-k)! = n(n-1)...(n-k+1), zero when k > n.
Integer falling_factorial(std::size_t n, std::size_t k);

// (-1)^k as +1 or -1.
inline int alternating_sign(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace umbra
