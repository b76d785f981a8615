#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "agwb/element.hpp"

namespace agwb {

  // A subset of the elements of a magma of order at most 64, stored as a
  // bit mask. Bit i is set iff element i is a member.
  class ElementSet {
   public:
    ElementSet() = default;

    explicit ElementSet(std::size_t order, std::uint64_t bits = 0);

    ElementSet(std::size_t order, std::initializer_list<Element> members);

    static ElementSet full(std::size_t order);
    static ElementSet singleton(std::size_t order, Element x);
    static ElementSet from_members(std::size_t order,
                                   std::vector<Element> const& members);

    std::size_t order() const noexcept {
      return _order;
    }
    std::uint64_t bits() const noexcept {
      return _bits;
    }
    std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }
    bool empty() const noexcept {
      return _bits == 0;
    }
    bool is_full() const noexcept {
      return _bits == full_mask(_order);
    }

    bool contains(Element x) const noexcept {
      return x < _order && ((_bits >> x) & 1U) != 0;
    }

    void insert(Element x);
    void erase(Element x);

    bool is_subset_of(ElementSet const& other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }
    bool is_proper_subset_of(ElementSet const& other) const noexcept {
      return is_subset_of(other) && _bits != other._bits;
    }

    // Least member; undefined on the empty set.
    Element front() const noexcept {
      return static_cast<Element>(std::countr_zero(_bits));
    }

    std::vector<Element> members() const;

    // Calls f(x) for every member x in increasing order.
    template <typename F>
    void for_each(F&& f) const {
      for (std::uint64_t b = _bits; b != 0; b &= b - 1) {
        f(static_cast<Element>(std::countr_zero(b)));
      }
    }

    // "{0,2,3}"
    std::string to_string() const;

    friend ElementSet operator|(ElementSet const& a, ElementSet const& b) {
      return ElementSet(a._order, a._bits | b._bits);
    }
    friend ElementSet operator&(ElementSet const& a, ElementSet const& b) {
      return ElementSet(a._order, a._bits & b._bits);
    }
    ElementSet& operator|=(ElementSet const& other) {
      _bits |= other._bits;
      return *this;
    }

    friend bool operator==(ElementSet const&, ElementSet const&) = default;

    // Canonical order: by bit pattern.
    friend std::strong_ordering operator<=>(ElementSet const& a,
                                            ElementSet const& b) {
      if (auto c = a._order <=> b._order; c != 0) {
        return c;
      }
      return a._bits <=> b._bits;
    }

    static constexpr std::uint64_t full_mask(std::size_t order) noexcept {
      return order >= 64 ? ~std::uint64_t{0}
                         : (std::uint64_t{1} << order) - 1;
    }

   private:
    std::size_t   _order = 0;
    std::uint64_t _bits  = 0;
  };

}  // namespace agwb
