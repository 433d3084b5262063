#include "symvol/algebra/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace symvol {

BigInt factorial(unsigned k) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), k);
  return result;
}

BigInt double_factorial_odd(int m) {
  if (m < -1 || m % 2 == 0) {
    throw std::domain_error("double_factorial_odd: expected odd m >= -1, got " +
                            std::to_string(m));
  }
  if (m == -1) return BigInt(1);
  BigInt result;
  mpz_2fac_ui(result.get_mpz_t(), static_cast<unsigned long>(m));
  return result;
}

}  // namespace symvol
