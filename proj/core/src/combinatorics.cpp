#include "umbra/combinatorics.hpp"

namespace umbra {

Integer factorial(std::size_t n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Integer falling_factorial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer result = 1;
  for (std::size_t i = 0; i < k; ++i) result *= static_cast<unsigned long>(n - i);
  return result;
}

}  // namespace umbra
