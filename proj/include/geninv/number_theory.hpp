#pragma once

#include <cstdint>
#include <vector>

namespace geninv {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, ascending by prime. Trial division; moduli are small.
using Factorization = std::vector<PrimePower>;

Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

}  // namespace geninv
