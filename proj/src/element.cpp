#include "geninv/element.hpp"

#include "geninv/errors.hpp"

#include <utility>

namespace geninv {

namespace {

using u128 = unsigned __int128;

ResidueMatrix reduce_all(const IntMatrix& m, std::uint64_t n) {
  return m.unaryExpr([n](const BigInt& v) { return residue(v, n); });
}

ResidueMatrix add_mod(const ResidueMatrix& x, const ResidueMatrix& y, std::uint64_t n) {
  return (x + y).unaryExpr([n](std::uint64_t v) { return v % n; });
}

ResidueMatrix sub_mod(const ResidueMatrix& x, const ResidueMatrix& y, std::uint64_t n) {
  return (x.array() + (n - y.array())).matrix().unaryExpr([n](std::uint64_t v) { return v % n; });
}

ResidueMatrix mul_mod(const ResidueMatrix& x, const ResidueMatrix& y, std::uint64_t n) {
  const Eigen::Index k = x.rows();
  ResidueMatrix out(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      u128 acc = 0;
      for (Eigen::Index l = 0; l < k; ++l) acc += static_cast<u128>(x(i, l)) * y(l, j);
      out(i, j) = static_cast<std::uint64_t>(acc % n);
    }
  }
  return out;
}

}  // namespace

Element::Element(const RingSpec& ring, const IntMatrix& entries) : ring_(ring) {
  if (entries.rows() != ring.dim() || entries.cols() != ring.dim())
    throw PreconditionError("element of " + ring.to_string() + " needs a " +
                            std::to_string(ring.dim()) + "x" + std::to_string(ring.dim()) +
                            " payload");
  if (auto n = ring.modulus())
    data_ = reduce_all(entries, *n);
  else
    data_ = entries;
}

Element Element::from_residues(const RingSpec& ring, ResidueMatrix residues) {
  const auto n = ring.modulus();
  if (!n) throw PreconditionError("residue payload for infinite ring " + ring.to_string());
  if (residues.rows() != ring.dim() || residues.cols() != ring.dim())
    throw PreconditionError("element of " + ring.to_string() + " needs a square payload");
  if ((residues.array() >= *n).any()) throw PreconditionError("residue out of range");
  return Element(ring, std::move(residues));
}

Element Element::scalar(const RingSpec& ring, const BigInt& c) {
  IntMatrix m = IntMatrix::Zero(ring.dim(), ring.dim());
  for (int i = 0; i < ring.dim(); ++i) m(i, i) = c;
  return Element(ring, m);
}

BigInt Element::entry(int row, int col) const {
  if (const auto* r = residues()) return to_bigint((*r)(row, col));
  return std::get<IntMatrix>(data_)(row, col);
}

IntMatrix Element::to_integer_matrix() const {
  if (const auto* r = residues())
    return r->unaryExpr([](std::uint64_t v) { return to_bigint(v); });
  return std::get<IntMatrix>(data_);
}

bool Element::is_zero() const {
  if (const auto* r = residues()) return r->isZero();
  const auto& m = std::get<IntMatrix>(data_);
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (sgn(m.data()[i]) != 0) return false;
  return true;
}

bool Element::is_one() const { return *this == identity(ring_); }

std::size_t Element::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  if (const auto* r = residues()) {
    for (Eigen::Index i = 0; i < r->size(); ++i) mix(static_cast<std::size_t>(r->data()[i]));
  } else {
    const auto& m = std::get<IntMatrix>(data_);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      const auto* z = m.data()[i].get_mpz_t();
      mix(static_cast<std::size_t>(mpz_sgn(z) * 31 + (mpz_size(z) ? mpz_getlimbn(z, 0) : 0)));
    }
  }
  return h;
}

void require_same_ring(const Element& x, const Element& y) {
  if (!(x.ring() == y.ring()))
    throw RingMismatch("ring mismatch: " + x.ring().to_string() + " vs " + y.ring().to_string());
}

bool operator==(const Element& x, const Element& y) {
  return x.ring_ == y.ring_ && x.data_ == y.data_;
}

Element operator+(const Element& x, const Element& y) {
  require_same_ring(x, y);
  if (auto n = x.ring_.modulus())
    return Element(x.ring_, add_mod(*x.residues(), *y.residues(), *n));
  return Element(x.ring_, IntMatrix(*x.integers() + *y.integers()), nullptr);
}

Element operator-(const Element& x, const Element& y) {
  require_same_ring(x, y);
  if (auto n = x.ring_.modulus())
    return Element(x.ring_, sub_mod(*x.residues(), *y.residues(), *n));
  return Element(x.ring_, IntMatrix(*x.integers() - *y.integers()), nullptr);
}

Element operator-(const Element& x) { return zero(x.ring()) - x; }

Element operator*(const Element& x, const Element& y) {
  require_same_ring(x, y);
  if (auto n = x.ring_.modulus())
    return Element(x.ring_, mul_mod(*x.residues(), *y.residues(), *n));
  return Element(x.ring_, IntMatrix(*x.integers() * *y.integers()), nullptr);
}

Element operator*(const BigInt& c, const Element& x) {
  if (auto n = x.ring_.modulus()) {
    const std::uint64_t s = residue(c, *n);
    ResidueMatrix out = x.residues()->unaryExpr([s, n](std::uint64_t v) {
      return static_cast<std::uint64_t>(static_cast<u128>(v) * s % *n);
    });
    return Element(x.ring_, std::move(out));
  }
  return Element(x.ring_, IntMatrix(*x.integers() * c), nullptr);
}

Element zero(const RingSpec& ring) { return Element::scalar(ring, 0); }

Element identity(const RingSpec& ring) { return Element::scalar(ring, 1); }

Element pow(const Element& x, std::uint64_t exponent) {
  Element result = identity(x.ring());
  Element base = x;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Element divide_exact(const Element& x, const BigInt& d) {
  if (d == 1) return x;
  if (x.ring().is_finite())
    throw PreconditionError("exact division is only defined over Z");
  if (sgn(d) == 0) throw PreconditionError("division by zero");
  IntMatrix m = x.to_integer_matrix();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (!mpz_divisible_p(m.data()[i].get_mpz_t(), d.get_mpz_t()))
      throw PreconditionError("entry " + m.data()[i].get_str() + " is not divisible by " +
                              d.get_str());
    mpz_divexact(m.data()[i].get_mpz_t(), m.data()[i].get_mpz_t(), d.get_mpz_t());
  }
  return Element(x.ring(), m);
}

}  // namespace geninv
