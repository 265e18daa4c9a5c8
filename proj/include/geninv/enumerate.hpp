#pragma once

// Deterministic enumeration of finite rings.
//
// Elements are indexed in lexicographic order of their row-major entry
// sequence, the first entry being most significant. Index i therefore maps to
// the base-n digits of i.

#include "geninv/element.hpp"
#include "geninv/ring.hpp"

#include <cstdint>
#include <iterator>

namespace geninv {

/// Ring size as a machine word; throws UnsupportedRing for infinite rings and
/// CapExceeded when the size does not fit in 64 bits.
std::uint64_t enumerable_size(const RingSpec& ring);

Element element_at(const RingSpec& ring, std::uint64_t index);

/// Inverse of element_at.
std::uint64_t index_of(const Element& x);

/// Input range over every element of a finite ring.
class ElementRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    iterator(const RingSpec* ring, std::uint64_t index) : ring_(ring), index_(index) {}

    Element operator*() const { return element_at(*ring_, index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++index_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const RingSpec* ring_;
    std::uint64_t index_;
  };

  explicit ElementRange(const RingSpec& ring) : ring_(ring), size_(enumerable_size(ring)) {}

  iterator begin() const { return {&ring_, 0}; }
  iterator end() const { return {&ring_, size_}; }
  std::uint64_t size() const noexcept { return size_; }

 private:
  RingSpec ring_;
  std::uint64_t size_;
};

inline ElementRange enumerate(const RingSpec& ring) { return ElementRange(ring); }

}  // namespace geninv
