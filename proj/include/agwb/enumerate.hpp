#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agwb/cayley_table.hpp"

namespace agwb {

  // Properties an emitted table must have, beyond the left invertive law.
  struct Filters {
    bool left_identity = false;
    bool regular = false;
    bool right_invertible = false;

    bool none() const noexcept {
      return !left_identity && !regular && !right_invertible;
    }
    bool accepts(CayleyTable const& t) const;

    friend bool operator==(Filters const&, Filters const&) = default;
  };

  std::vector<std::string> const& filter_names();
  // Throws UsageError naming the valid filters.
  void add_filter(Filters& filters, std::string_view name);
  std::vector<std::string> names_of(Filters const& filters);

  // Sentinel for an unassigned cell in a task prefix.
  inline constexpr std::uint8_t unassigned = 0xFF;

  // A subtree of the row-major table-filling search: the first prefix.size()
  // cells are fixed, the rest are free.
  struct EnumerationTask {
    std::size_t               order = 1;
    std::vector<std::uint8_t> prefix;
    Filters                   filters;
    bool                      up_to_iso = false;
    // Search only tables whose row 0 is the identity row. Sound only in
    // combination with up_to_iso and filters.left_identity.
    bool anchor_left_identity = false;

    bool complete() const noexcept {
      return prefix.size() == order * order;
    }
  };

  // Throws DomainError on order 0 and UsageError above the supported order.
  EnumerationTask root_task(std::size_t order,
                            Filters     filters = {},
                            bool        up_to_iso = false);

  // Children of `task` whose prefixes have length min(depth + 1, n*n): one per
  // consistent assignment of the cells between the current prefix and that
  // length. A task whose prefix already reaches that length is returned
  // unchanged; a complete task has no children.
  std::vector<EnumerationTask> split_task(EnumerationTask const& task,
                                          std::size_t            depth);

  struct EnumerationOptions {
    // Worker threads; 0 selects the OpenMP default.
    int jobs = 0;
    // Split the root this many cells deep before handing tasks to workers;
    // 0 picks a depth from the order.
    std::size_t split_depth = 0;
  };

  // Serial depth-first search below one task. Emits, in lexicographic order,
  // every complete table satisfying the left invertive law and the filters
  // (and, when task.up_to_iso is set without the anchor, only canonical
  // ones). Anchored tasks emit the raw anchored tables.
  void search(EnumerationTask const&                        task,
              std::function<void(CayleyTable const&)> const& sink);

  // All LA-semigroups of the given order satisfying the filters, each exactly
  // once, in lexicographic order. With up_to_iso, only canonical forms are
  // emitted. The output does not depend on options.jobs.
  std::vector<CayleyTable> enumerate_la(std::size_t        order,
                                        Filters const&     filters = {},
                                        bool               up_to_iso = false,
                                        EnumerationOptions options = {});

  // Streaming variant: sink is called from the calling thread, in the same
  // order enumerate_la would return the tables.
  void enumerate_la(std::size_t                                    order,
                    Filters const&                                 filters,
                    bool                                           up_to_iso,
                    EnumerationOptions                             options,
                    std::function<void(CayleyTable const&)> const& sink);

  struct CountSummary {
    std::size_t   order = 0;
    Filters       filters;
    bool          up_to_iso = false;
    std::uint64_t raw_count = 0;  // labelled tables
    std::uint64_t iso_count = 0;  // isomorphism classes
    double        elapsed_ms = 0;

    std::uint64_t count() const noexcept {
      return up_to_iso ? iso_count : raw_count;
    }
  };

  CountSummary count_la(std::size_t        order,
                        Filters const&     filters = {},
                        bool               up_to_iso = false,
                        EnumerationOptions options = {});

}  // namespace agwb
