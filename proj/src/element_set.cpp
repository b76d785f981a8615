#include "agwb/element_set.hpp"

#include "agwb/errors.hpp"

namespace agwb {

  ElementSet::ElementSet(std::size_t order, std::uint64_t bits)
      : _order(order), _bits(bits) {
    if (order > max_order) {
      throw UsageError("order " + std::to_string(order)
                       + " exceeds the maximum of 64");
    }
    if ((bits & ~full_mask(order)) != 0) {
      throw UsageError("element set has members outside [0, "
                       + std::to_string(order) + ")");
    }
  }

  ElementSet::ElementSet(std::size_t order, std::initializer_list<Element> xs)
      : ElementSet(order) {
    for (Element x : xs) {
      insert(x);
    }
  }

  ElementSet ElementSet::full(std::size_t order) {
    return ElementSet(order, full_mask(order));
  }

  ElementSet ElementSet::singleton(std::size_t order, Element x) {
    ElementSet s(order);
    s.insert(x);
    return s;
  }

  ElementSet ElementSet::from_members(std::size_t                 order,
                                      std::vector<Element> const& members) {
    ElementSet s(order);
    for (Element x : members) {
      s.insert(x);
    }
    return s;
  }

  void ElementSet::insert(Element x) {
    if (x >= _order) {
      throw UsageError("element " + std::to_string(x) + " out of range [0, "
                       + std::to_string(_order) + ")");
    }
    _bits |= std::uint64_t{1} << x;
  }

  void ElementSet::erase(Element x) {
    if (x < _order) {
      _bits &= ~(std::uint64_t{1} << x);
    }
  }

  std::vector<Element> ElementSet::members() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&out](Element x) { out.push_back(x); });
    return out;
  }

  std::string ElementSet::to_string() const {
    std::string out = "{";
    bool        first = true;
    for_each([&](Element x) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += std::to_string(x);
    });
    return out + "}";
  }

}  // namespace agwb
