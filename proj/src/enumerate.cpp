#include "agwb/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <set>

#include "agwb/canonical.hpp"
#include "agwb/errors.hpp"
#include "agwb/properties.hpp"

namespace agwb {

  ////////////////////////////////////////////////////////////////////////
  // Filters
  ////////////////////////////////////////////////////////////////////////

  bool Filters::accepts(CayleyTable const& t) const {
    if (left_identity && left_identities(t).empty()) {
      return false;
    }
    if (right_invertible && !is_right_invertible(t)) {
      return false;
    }
    if (regular && !is_regular(t).holds) {
      return false;
    }
    return true;
  }

  std::vector<std::string> const& filter_names() {
    static std::vector<std::string> const names
        = {"none", "left-identity", "regular", "right-invertible"};
    return names;
  }

  void add_filter(Filters& filters, std::string_view name) {
    if (name == "none") {
      return;
    } else if (name == "left-identity") {
      filters.left_identity = true;
    } else if (name == "regular") {
      filters.regular = true;
    } else if (name == "right-invertible") {
      filters.right_invertible = true;
    } else {
      std::string valid;
      for (auto const& n : filter_names()) {
        valid += (valid.empty() ? "" : ", ") + n;
      }
      throw UsageError("unknown filter '" + std::string(name)
                       + "'; valid filters: " + valid);
    }
  }

  std::vector<std::string> names_of(Filters const& filters) {
    std::vector<std::string> out;
    if (filters.left_identity) {
      out.emplace_back("left-identity");
    }
    if (filters.regular) {
      out.emplace_back("regular");
    }
    if (filters.right_invertible) {
      out.emplace_back("right-invertible");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Search
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Row-major table filling. Each instance (xy)z = (zy)x of the left
    // invertive law is checked as soon as its four lookups are determined;
    // once xy, zy and one side are known the cell holding the other side is
    // forced. Forced cells are skipped by the branching.
    class Searcher {
     public:
      explicit Searcher(EnumerationTask const& task)
          : _task(task),
            _n(task.order),
            _cells(task.order * task.order, unassigned) {}

      // Assigns the task prefix; false if it already violates the law.
      bool load_prefix() {
        for (std::size_t k = 0; k < _task.prefix.size(); ++k) {
          auto const v = _task.prefix[k];
          if (v >= _n || !allowed(k, v)) {
            return false;
          }
          if (_cells[k] == unassigned) {
            if (!assign(k, v)) {
              return false;
            }
          } else if (_cells[k] != v) {
            return false;
          }
        }
        return true;
      }

      // Visits every consistent extension of the current cells [0, from) to
      // length `until`, calling leaf(cells) for each.
      template <typename Leaf>
      void extend(std::size_t from, std::size_t until, Leaf&& leaf) {
        while (from < until && _cells[from] != unassigned) {
          ++from;
        }
        if (from == until) {
          leaf(_cells);
          return;
        }
        for (std::size_t v = 0; v < _n; ++v) {
          if (!allowed(from, v)) {
            continue;
          }
          std::size_t const mark = _trail.size();
          if (assign(from, static_cast<std::uint8_t>(v))) {
            extend(from + 1, until, leaf);
          }
          undo(mark);
        }
      }

     private:
      bool allowed(std::size_t k, std::size_t v) const {
        // Anchored searches fix row 0 to the identity row.
        return !_task.anchor_left_identity || k >= _n || v == k;
      }

      std::uint8_t cell(std::size_t a, std::size_t b) const {
        return _cells[a * _n + b];
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          _cells[_trail.back()] = unassigned;
          _trail.pop_back();
        }
        _queue.clear();
      }

      bool force(std::size_t k, std::uint8_t v) {
        if (!allowed(k, v)) {
          return false;
        }
        _cells[k] = v;
        _trail.push_back(k);
        _queue.push_back(k);
        return true;
      }

      // Checks (xy)z == (zy)x, forcing the last unknown side if possible.
      bool instance(std::size_t x, std::size_t y, std::size_t z) {
        auto const xy = cell(x, y);
        if (xy == unassigned) {
          return true;
        }
        auto const zy = cell(z, y);
        if (zy == unassigned) {
          return true;
        }
        auto const lhs = cell(xy, z);
        auto const rhs = cell(zy, x);
        if (lhs != unassigned && rhs != unassigned) {
          return lhs == rhs;
        }
        if (lhs == unassigned && rhs == unassigned) {
          return true;
        }
        return lhs == unassigned ? force(xy * _n + z, rhs)
                                 : force(zy * _n + x, lhs);
      }

      // Sets cell k and propagates through every instance that uses a newly
      // determined cell in one of its lookups.
      bool assign(std::size_t k, std::uint8_t v) {
        _queue.clear();
        if (!force(k, v)) {
          return false;
        }
        while (!_queue.empty()) {
          std::size_t const c = _queue.back();
          _queue.pop_back();
          std::size_t const a = c / _n;
          std::size_t const b = c % _n;
          for (std::size_t i = 0; i < _n; ++i) {
            // The cell as the inner lookup xy (x=a, y=b) or zy (z=a, y=b).
            if (!instance(a, b, i) || !instance(i, b, a)) {
              return false;
            }
          }
          for (std::size_t p = 0; p < _n; ++p) {
            for (std::size_t q = 0; q < _n; ++q) {
              // The cell as the outer lookup (xy)z or (zy)x with pq = a.
              if (cell(p, q) == a
                  && (!instance(p, q, b) || !instance(b, q, p))) {
                return false;
              }
            }
          }
        }
        return true;
      }

      EnumerationTask const&    _task;
      std::size_t               _n;
      std::vector<std::uint8_t> _cells;
      std::vector<std::size_t>  _trail;
      std::vector<std::size_t>  _queue;
    };

    std::size_t default_split_depth(EnumerationTask const& task) {
      std::size_t const n = task.order;
      std::size_t       depth = n <= 2 ? 0 : 3;
      if (task.anchor_left_identity) {
        depth += n;
      }
      return std::min(depth, n * n - 1);
    }

    int thread_count(int jobs) {
      return jobs > 0 ? jobs : omp_get_max_threads();
    }

  }  // namespace

  EnumerationTask root_task(std::size_t order, Filters filters, bool up_to_iso) {
    if (order == 0) {
      throw DomainError("order must be at least 1");
    }
    if (order > 16) {
      throw UsageError("enumeration is limited to order 16");
    }
    EnumerationTask task;
    task.order = order;
    task.filters = filters;
    task.up_to_iso = up_to_iso;
    return task;
  }

  std::vector<EnumerationTask> split_task(EnumerationTask const& task,
                                          std::size_t            depth) {
    std::size_t const cells = task.order * task.order;
    if (task.prefix.size() >= cells) {
      return {};
    }
    std::size_t const target = std::min(depth + 1, cells);
    if (task.prefix.size() >= target) {
      return {task};
    }
    Searcher searcher(task);
    if (!searcher.load_prefix()) {
      return {};
    }
    std::vector<EnumerationTask> out;
    searcher.extend(task.prefix.size(),
                    target,
                    [&](std::vector<std::uint8_t> const& filled) {
                      EnumerationTask child = task;
                      child.prefix.assign(filled.begin(),
                                          filled.begin() + target);
                      out.push_back(std::move(child));
                    });
    return out;
  }

  void search(EnumerationTask const&                         task,
              std::function<void(CayleyTable const&)> const& sink) {
    Searcher searcher(task);
    if (!searcher.load_prefix()) {
      return;
    }
    std::size_t const cells = task.order * task.order;
    bool const        canonical_only = task.up_to_iso && !task.anchor_left_identity;
    searcher.extend(task.prefix.size(),
                    cells,
                    [&](std::vector<std::uint8_t> const& filled) {
                      CayleyTable t(task.order, filled);
                      if (!task.filters.accepts(t)) {
                        return;
                      }
                      if (canonical_only && !is_canonical(t)) {
                        return;
                      }
                      sink(t);
                    });
  }

  void enumerate_la(std::size_t                                    order,
                    Filters const&                                 filters,
                    bool                                           up_to_iso,
                    EnumerationOptions                             options,
                    std::function<void(CayleyTable const&)> const& sink) {
    EnumerationTask root = root_task(order, filters, up_to_iso);
    root.anchor_left_identity = up_to_iso && filters.left_identity;

    std::size_t const depth = options.split_depth != 0
                                  ? options.split_depth
                                  : default_split_depth(root);
    auto const        tasks = split_task(root, depth);
    int const         threads = thread_count(options.jobs);
    std::size_t const batch = std::max<std::size_t>(64, 16 * threads);

    std::set<CayleyTable> anchored_forms;
    for (std::size_t start = 0; start < tasks.size(); start += batch) {
      std::size_t const stop = std::min(tasks.size(), start + batch);
      std::vector<std::vector<CayleyTable>> found(stop - start);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
      for (std::size_t i = start; i < stop; ++i) {
        auto& out = found[i - start];
        search(tasks[i], [&](CayleyTable const& t) {
          if (root.anchor_left_identity) {
            out.push_back(canonicalize(t).table);
          } else {
            out.push_back(t);
          }
        });
      }
      for (auto& chunk : found) {
        if (root.anchor_left_identity) {
          anchored_forms.insert(chunk.begin(), chunk.end());
        } else {
          for (auto const& t : chunk) {
            sink(t);
          }
        }
      }
    }
    for (auto const& t : anchored_forms) {
      sink(t);
    }
  }

  std::vector<CayleyTable> enumerate_la(std::size_t        order,
                                        Filters const&     filters,
                                        bool               up_to_iso,
                                        EnumerationOptions options) {
    std::vector<CayleyTable> out;
    enumerate_la(order, filters, up_to_iso, options, [&out](auto const& t) {
      out.push_back(t);
    });
    return out;
  }

  CountSummary count_la(std::size_t        order,
                        Filters const&     filters,
                        bool               up_to_iso,
                        EnumerationOptions options) {
    auto const start = std::chrono::steady_clock::now();

    EnumerationTask const root = root_task(order, filters, false);
    std::size_t const     depth = options.split_depth != 0
                                      ? options.split_depth
                                      : default_split_depth(root);
    auto const            tasks = split_task(root, depth);
    int const             threads = thread_count(options.jobs);

    std::uint64_t raw = 0;
    std::uint64_t iso = 0;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) \
    reduction(+ : raw, iso)
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      search(tasks[i], [&](CayleyTable const& t) {
        ++raw;
        if (is_canonical(t)) {
          ++iso;
        }
      });
    }

    CountSummary out;
    out.order = order;
    out.filters = filters;
    out.up_to_iso = up_to_iso;
    out.raw_count = raw;
    out.iso_count = iso;
    out.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return out;
  }

}  // namespace agwb
