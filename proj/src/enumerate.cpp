#include "geninv/enumerate.hpp"

#include "geninv/errors.hpp"

namespace geninv {

std::uint64_t enumerable_size(const RingSpec& ring) {
  const BigInt size = ring.size();
  if (!fits_u64(size)) throw CapExceeded(ring.to_string() + " is too large to enumerate");
  return to_u64(size);
}

Element element_at(const RingSpec& ring, std::uint64_t index) {
  const std::uint64_t n = *ring.modulus();
  const int k = ring.dim();
  ResidueMatrix m(k, k);
  for (int pos = k * k - 1; pos >= 0; --pos) {
    m(pos / k, pos % k) = index % n;
    index /= n;
  }
  return Element::from_residues(ring, std::move(m));
}

std::uint64_t index_of(const Element& x) {
  const auto n = x.ring().modulus();
  if (!n) throw UnsupportedRing(x.ring().to_string() + " is infinite");
  const ResidueMatrix& r = *x.residues();
  const int k = x.dim();
  std::uint64_t index = 0;
  for (int pos = 0; pos < k * k; ++pos) index = index * *n + r(pos / k, pos % k);
  return index;
}

}  // namespace geninv
