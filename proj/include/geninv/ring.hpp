#pragma once

#include "geninv/bigint.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace geninv {

/// Largest supported modulus. Residues then fit in 32 bits and a single
/// product of two residues fits in an unsigned 64-bit word.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

/// Describes one of the supported rings: Z, Z/n, or k x k matrices over one
/// of those. Matrices of matrices are not representable.
class RingSpec {
 public:
  static RingSpec integers();
  static RingSpec modular(std::uint64_t n);
  static RingSpec matrix(const RingSpec& base, int dim);

  bool is_matrix() const noexcept { return matrix_; }
  bool is_finite() const noexcept { return modulus_ != 0; }
  bool is_integers_based() const noexcept { return modulus_ == 0; }

  /// 1 for scalar rings.
  int dim() const noexcept { return dim_; }

  /// The modulus n of the scalar base, absent for Z.
  std::optional<std::uint64_t> modulus() const {
    if (modulus_ == 0) return std::nullopt;
    return modulus_;
  }

  /// Scalar base ring (itself when scalar).
  RingSpec scalar_ring() const;

  /// Number of elements, n^(k^2); throws UnsupportedRing for infinite rings.
  BigInt size() const;

  /// Ring literal: `Z`, `Z/9`, `M2(Z/3)`, `M3(Z)`.
  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(std::uint64_t modulus, int dim, bool matrix)
      : modulus_(modulus), dim_(dim), matrix_(matrix) {}

  std::uint64_t modulus_ = 0;  // 0 encodes Z
  int dim_ = 1;
  bool matrix_ = false;
};

}  // namespace geninv
