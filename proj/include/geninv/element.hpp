#pragma once

// Immutable ring elements backed by dense Eigen storage.
//
// Every element is stored as a k x k matrix (k = 1 for scalar rings). The
// scalar type depends on the base ring: residues in [0, n) use 64-bit
// unsigned words, integers use GMP. Arithmetic kernels are templated on that
// scalar and dispatched once per operation.

#include "geninv/bigint.hpp"
#include "geninv/ring.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <variant>

namespace geninv {

template <typename Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ResidueMatrix = Dense<std::uint64_t>;
using IntMatrix = Dense<BigInt>;

class Element {
 public:
  /// Reduces every entry into the ring; `entries` must be dim x dim.
  Element(const RingSpec& ring, const IntMatrix& entries);

  /// Residues must already lie in [0, n).
  static Element from_residues(const RingSpec& ring, ResidueMatrix residues);

  /// The scalar c times the identity.
  static Element scalar(const RingSpec& ring, const BigInt& c);

  const RingSpec& ring() const noexcept { return ring_; }
  int dim() const noexcept { return ring_.dim(); }

  /// Canonical entry: a residue in [0, n) or an integer.
  BigInt entry(int row, int col) const;

  /// Entries lifted to integers (residues stay in [0, n)).
  IntMatrix to_integer_matrix() const;

  bool is_zero() const;
  bool is_one() const;

  std::size_t hash() const;

  friend bool operator==(const Element& x, const Element& y);

  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator-(const Element& x);
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator*(const BigInt& c, const Element& x);

  // Direct access for kernels that need the raw storage.
  const ResidueMatrix* residues() const { return std::get_if<ResidueMatrix>(&data_); }
  const IntMatrix* integers() const { return std::get_if<IntMatrix>(&data_); }

 private:
  Element(const RingSpec& ring, ResidueMatrix m) : ring_(ring), data_(std::move(m)) {}
  Element(const RingSpec& ring, IntMatrix m, std::nullptr_t) : ring_(ring), data_(std::move(m)) {}

  RingSpec ring_;
  std::variant<ResidueMatrix, IntMatrix> data_;
};

Element zero(const RingSpec& ring);
Element identity(const RingSpec& ring);

/// Square-and-multiply; x^0 is the identity.
Element pow(const Element& x, std::uint64_t exponent);

/// Exact division of every entry by d. Only meaningful over Z; throws
/// PreconditionError when some entry is not divisible.
Element divide_exact(const Element& x, const BigInt& d);

/// Throws RingMismatch unless x and y share a ring.
void require_same_ring(const Element& x, const Element& y);

inline bool commute(const Element& x, const Element& y) { return x * y == y * x; }

}  // namespace geninv

template <>
struct std::hash<geninv::Element> {
  std::size_t operator()(const geninv::Element& x) const noexcept { return x.hash(); }
};
