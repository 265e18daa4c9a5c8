#include "geninv/ring.hpp"

#include "geninv/errors.hpp"

namespace geninv {

RingSpec RingSpec::integers() { return RingSpec(0, 1, false); }

RingSpec RingSpec::modular(std::uint64_t n) {
  if (n < 2) throw PreconditionError("modulus must be at least 2, got " + std::to_string(n));
  if (n > kMaxModulus)
    throw CapExceeded("modulus " + std::to_string(n) + " exceeds 2^32");
  return RingSpec(n, 1, false);
}

RingSpec RingSpec::matrix(const RingSpec& base, int dim) {
  if (base.is_matrix()) throw PreconditionError("matrices of matrices are not supported");
  if (dim < 1) throw PreconditionError("matrix dimension must be at least 1");
  return RingSpec(base.modulus_, dim, true);
}

RingSpec RingSpec::scalar_ring() const { return RingSpec(modulus_, 1, false); }

BigInt RingSpec::size() const {
  if (!is_finite()) throw UnsupportedRing(to_string() + " is infinite");
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(modulus_),
                static_cast<unsigned long>(dim_) * static_cast<unsigned long>(dim_));
  return result;
}

std::string RingSpec::to_string() const {
  std::string base = modulus_ == 0 ? "Z" : "Z/" + std::to_string(modulus_);
  if (!matrix_) return base;
  return "M" + std::to_string(dim_) + "(" + base + ")";
}

}  // namespace geninv
