#include "agwb/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "agwb/errors.hpp"

namespace agwb {

  namespace {

    void require_permutation(Permutation const& perm, std::size_t n) {
      if (perm.size() != n) {
        throw UsageError("permutation has " + std::to_string(perm.size())
                         + " points, expected " + std::to_string(n));
      }
      std::vector<bool> seen(n, false);
      for (Element x : perm) {
        if (x >= n || seen[x]) {
          throw UsageError("not a permutation of [0, " + std::to_string(n)
                           + ")");
        }
        seen[x] = true;
      }
    }

    enum class Outcome { larger, equal, smaller };

    // Compares the relabelled table, visiting old elements in the order
    // given by `old_at` (old_at[i] is the old element receiving label i),
    // against `best`. When smaller and `out` is non-null, writes the full
    // relabelled table to *out.
    Outcome compare_relabelled(CayleyTable const&               t,
                               std::vector<Element> const&      old_at,
                               std::vector<Element> const&      new_of,
                               std::span<std::uint8_t const>    best,
                               std::vector<std::uint8_t>*       out) {
      std::size_t const n = t.order();
      std::size_t       k = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j, ++k) {
          auto v = static_cast<std::uint8_t>(new_of[t(old_at[i], old_at[j])]);
          if (v > best[k]) {
            return Outcome::larger;
          }
          if (v < best[k]) {
            if (out != nullptr) {
              out->assign(best.begin(), best.end());
              std::size_t m = 0;
              for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b, ++m) {
                  (*out)[m] = static_cast<std::uint8_t>(
                      new_of[t(old_at[a], old_at[b])]);
                }
              }
            }
            return Outcome::smaller;
          }
        }
      }
      return Outcome::equal;
    }

  }  // namespace

  Permutation inverse(Permutation const& perm) {
    Permutation inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      inv[perm[i]] = static_cast<Element>(i);
    }
    return inv;
  }

  CayleyTable relabel(CayleyTable const& t, Permutation const& perm) {
    std::size_t const n = t.order();
    require_permutation(perm, n);
    CayleyTable out(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        out.set(perm[a], perm[b], perm[t(a, b)]);
      }
    }
    return out;
  }

  CanonicalForm canonicalize(CayleyTable const& t, Permutation& perm) {
    std::size_t const    n = t.order();
    std::vector<Element> old_at(n);
    std::iota(old_at.begin(), old_at.end(), Element{0});
    std::vector<std::uint8_t> best(t.entries().begin(), t.entries().end());
    std::vector<Element>      best_old_at = old_at;
    std::vector<Element>      new_of(n);
    std::vector<std::uint8_t> scratch;
    while (std::next_permutation(old_at.begin(), old_at.end())) {
      for (std::size_t i = 0; i < n; ++i) {
        new_of[old_at[i]] = static_cast<Element>(i);
      }
      if (compare_relabelled(t, old_at, new_of, best, &scratch)
          == Outcome::smaller) {
        best.swap(scratch);
        best_old_at = old_at;
      }
    }
    perm = inverse(best_old_at);
    return CanonicalForm{CayleyTable(n, std::move(best))};
  }

  CanonicalForm canonicalize(CayleyTable const& t) {
    Permutation unused;
    return canonicalize(t, unused);
  }

  bool is_canonical(CayleyTable const& t) {
    std::size_t const    n = t.order();
    std::vector<Element> old_at(n);
    std::iota(old_at.begin(), old_at.end(), Element{0});
    std::vector<Element> new_of(n);
    while (std::next_permutation(old_at.begin(), old_at.end())) {
      for (std::size_t i = 0; i < n; ++i) {
        new_of[old_at[i]] = static_cast<Element>(i);
      }
      if (compare_relabelled(t, old_at, new_of, t.entries(), nullptr)
          == Outcome::smaller) {
        return false;
      }
    }
    return true;
  }

  IsomorphismCheck are_isomorphic(CayleyTable const& t1,
                                  CayleyTable const& t2) {
    if (t1.order() != t2.order()) {
      throw DomainError("tables of orders " + std::to_string(t1.order())
                        + " and " + std::to_string(t2.order())
                        + " cannot be isomorphic");
    }
    Permutation p1, p2;
    auto        c1 = canonicalize(t1, p1);
    auto        c2 = canonicalize(t2, p2);
    if (c1 != c2) {
      return {};
    }
    // relabel(t1, p1) == relabel(t2, p2), so t1 -> t2 is p2^-1 . p1.
    auto const  p2_inv = inverse(p2);
    Permutation iso(t1.order());
    for (std::size_t a = 0; a < iso.size(); ++a) {
      iso[a] = p2_inv[p1[a]];
    }
    return {true, std::move(iso)};
  }

}  // namespace agwb
