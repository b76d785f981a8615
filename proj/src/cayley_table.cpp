#include "agwb/cayley_table.hpp"

#include <string>

#include "agwb/errors.hpp"

namespace agwb {

  namespace {
    void check_order(std::size_t order) {
      if (order == 0) {
        throw UsageError("a Cayley table must have order at least 1");
      }
      if (order > max_order) {
        throw UsageError("order " + std::to_string(order)
                         + " exceeds the maximum of "
                         + std::to_string(max_order));
      }
    }
  }  // namespace

  CayleyTable::CayleyTable(std::size_t order)
      : _order(order), _entries((check_order(order), order * order), 0) {}

  CayleyTable::CayleyTable(std::size_t order, std::vector<std::uint8_t> entries)
      : _order(order), _entries(std::move(entries)) {
    check_order(order);
    if (_entries.size() != order * order) {
      throw UsageError("expected " + std::to_string(order * order)
                       + " entries, got " + std::to_string(_entries.size()));
    }
    for (auto x : _entries) {
      if (x >= order) {
        throw UsageError("entry " + std::to_string(x) + " out of range [0, "
                         + std::to_string(order) + ")");
      }
    }
  }

  CayleyTable::CayleyTable(
      std::initializer_list<std::initializer_list<Element>> rows)
      : _order(rows.size()) {
    check_order(_order);
    _entries.reserve(_order * _order);
    for (auto const& row : rows) {
      if (row.size() != _order) {
        throw UsageError("row has " + std::to_string(row.size())
                         + " entries, expected " + std::to_string(_order));
      }
      for (Element x : row) {
        if (x >= _order) {
          throw UsageError("entry " + std::to_string(x)
                           + " out of range [0, " + std::to_string(_order)
                           + ")");
        }
        _entries.push_back(static_cast<std::uint8_t>(x));
      }
    }
  }

  Element CayleyTable::product(Element a, Element b) const {
    if (a >= _order || b >= _order) {
      throw UsageError("product(" + std::to_string(a) + ", "
                       + std::to_string(b) + ") out of range for order "
                       + std::to_string(_order));
    }
    return (*this)(a, b);
  }

  void CayleyTable::set(Element a, Element b, Element value) {
    if (a >= _order || b >= _order || value >= _order) {
      throw UsageError("set(" + std::to_string(a) + ", " + std::to_string(b)
                       + ", " + std::to_string(value)
                       + ") out of range for order " + std::to_string(_order));
    }
    _entries[a * _order + b] = static_cast<std::uint8_t>(value);
  }

  namespace fixtures {
    CayleyTable sub3() {
      return {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
    }
    CayleyTable null2() {
      return {{0, 0}, {0, 0}};
    }
    CayleyTable left_zero2() {
      return {{0, 0}, {1, 1}};
    }
    CayleyTable right_zero2() {
      return {{0, 1}, {0, 1}};
    }
    CayleyTable trivial() {
      return {{0}};
    }
  }  // namespace fixtures

}  // namespace agwb
