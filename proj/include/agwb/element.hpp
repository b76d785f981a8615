#pragma once

#include <cstddef>
#include <cstdint>

namespace agwb {

  // Elements of a magma of order n are the indices 0, ..., n - 1.
  using Element = std::uint32_t;

  // Bit masks in ElementSet and byte storage in CayleyTable cap the order.
  inline constexpr std::size_t max_order = 64;

}  // namespace agwb
