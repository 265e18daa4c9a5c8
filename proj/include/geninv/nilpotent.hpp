#pragma once

// Nilpotency, unipotent inversion and the small idempotent/tripotent/unit
// predicates the inverse constructions are built from.

#include "geninv/element.hpp"
#include "geninv/ring.hpp"

#include <cstdint>
#include <optional>

namespace geninv {

/// Minimal m >= 1 with x^m = 0.
struct NilpotencyWitness {
  unsigned index;

  friend bool operator==(const NilpotencyWitness&, const NilpotencyWitness&) = default;
};

/// B such that x is nilpotent iff x^B = 0.
///
///   Z/n          : largest prime exponent e of n
///   M_k(Z)       : k
///   M_k(Z/n)     : k * e
///   Z            : 1 (Z is a domain)
///
/// Modulo the nilradical a finite base is a product of fields, where a
/// nilpotent k x k matrix already has vanishing k-th power; the remaining
/// factor lies in the nilradical, which vanishes after e-fold products.
unsigned nilpotency_bound(const RingSpec& ring);

std::optional<NilpotencyWitness> is_nilpotent(const Element& x);

/// Inverse of u = 1 + w via the finite alternating series
/// 1 - w + w^2 - ... +- w^(m-1), with m the witness index of w.
/// Throws PreconditionError when the product check fails (bad witness).
Element inverse_of_unipotent(const Element& u, const NilpotencyWitness& w_witness);

/// Same, with the witness computed from u - 1.
Element inverse_of_unipotent(const Element& u);

bool is_idempotent(const Element& x);
bool is_tripotent(const Element& x);

/// Determinant over the base ring (scalars return themselves).
Element determinant(const Element& x);

bool is_unit(const Element& x);

}  // namespace geninv
