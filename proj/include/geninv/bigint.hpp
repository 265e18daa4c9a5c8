#pragma once

// Arbitrary-precision integers (GMP) wired into Eigen's scalar traits.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace geninv {

using BigInt = mpz_class;

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 platform required");

inline BigInt to_bigint(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

inline bool fits_u64(const BigInt& v) { return sgn(v) >= 0 && v.fits_ulong_p(); }

inline std::uint64_t to_u64(const BigInt& v) { return v.get_ui(); }

/// Least non-negative residue of v modulo n.
inline std::uint64_t residue(const BigInt& v, std::uint64_t n) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(n));
}

}  // namespace geninv

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
