#include "geninv/number_theory.hpp"

#include "geninv/errors.hpp"

namespace geninv {

Factorization factorize(std::uint64_t n) {
  if (n < 2) throw PreconditionError("factorize needs n >= 2");
  Factorization out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p <= n / p; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace geninv
