#pragma once

#include <optional>
#include <vector>

#include "agwb/cayley_table.hpp"

namespace agwb {

  // perm[a] is the new label of element a.
  using Permutation = std::vector<Element>;

  // The table of the relabelled magma: result(perm[a], perm[b]) =
  // perm[t(a, b)]. Throws UsageError if perm is not a permutation of the
  // elements of t.
  CayleyTable relabel(CayleyTable const& t, Permutation const& perm);

  Permutation inverse(Permutation const& perm);

  // The lexicographically least table isomorphic to a given one.
  struct CanonicalForm {
    CayleyTable table;

    friend bool operator==(CanonicalForm const&, CanonicalForm const&)
        = default;
    friend auto operator<=>(CanonicalForm const&, CanonicalForm const&)
        = default;
  };

  // Minimum over all n! relabellings, with early abort on each candidate.
  CanonicalForm canonicalize(CayleyTable const& t);

  // Also returns a permutation p with relabel(t, p) == form.table.
  CanonicalForm canonicalize(CayleyTable const& t, Permutation& perm);

  // Cheaper than canonicalize(t).table == t: stops at the first smaller
  // relabelling.
  bool is_canonical(CayleyTable const& t);

  struct IsomorphismCheck {
    bool isomorphic = false;
    // iso[a] is the image in the second table of element a of the first.
    std::optional<Permutation> iso;

    explicit operator bool() const noexcept {
      return isomorphic;
    }
  };

  // Throws DomainError if the orders differ.
  IsomorphismCheck are_isomorphic(CayleyTable const& t1, CayleyTable const& t2);

}  // namespace agwb
