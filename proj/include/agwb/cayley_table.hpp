#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "agwb/element.hpp"

namespace agwb {

  // A finite magma given by its multiplication table. Entries are stored
  // row-major: entry (a, b) is the product a * b.
  class CayleyTable {
   public:
    // The constant-zero table of the given order.
    explicit CayleyTable(std::size_t order);

    // Throws UsageError if entries.size() != order * order or some entry is
    // not an element.
    CayleyTable(std::size_t order, std::vector<std::uint8_t> entries);

    CayleyTable(std::initializer_list<std::initializer_list<Element>> rows);

    std::size_t order() const noexcept {
      return _order;
    }

    // Unchecked lookup for inner loops.
    Element operator()(Element a, Element b) const noexcept {
      return _entries[a * _order + b];
    }

    // Checked lookup; throws UsageError on out-of-range arguments.
    Element product(Element a, Element b) const;

    void set(Element a, Element b, Element value);

    std::span<std::uint8_t const> entries() const noexcept {
      return _entries;
    }

    // Lexicographic: order first, then entries in row-major order.
    friend bool operator==(CayleyTable const&, CayleyTable const&) = default;
    friend std::strong_ordering operator<=>(CayleyTable const&,
                                            CayleyTable const&)
        = default;

   private:
    std::size_t               _order;
    std::vector<std::uint8_t> _entries;
  };

  namespace fixtures {
    // a * b = (b - a) mod 3.
    CayleyTable sub3();
    // Constant zero, order 2.
    CayleyTable null2();
    // Left zero, order 2: a * b = a. Not left invertive.
    CayleyTable left_zero2();
    // Right zero, order 2: a * b = b. Medial but not left invertive.
    CayleyTable right_zero2();
    CayleyTable trivial();
  }  // namespace fixtures

}  // namespace agwb
