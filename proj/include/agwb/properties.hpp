#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "agwb/cayley_table.hpp"
#include "agwb/element_set.hpp"

namespace agwb {

  // Outcome of checking an identity in N variables over every assignment. If
  // the identity fails, `violation` holds the lexicographically least
  // failing assignment.
  template <std::size_t N>
  struct LawCheck {
    bool                                  holds = true;
    std::optional<std::array<Element, N>> violation;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // (ab)c = (cb)a
  LawCheck<3> is_left_invertive(CayleyTable const& t);
  // (ab)(cd) = (ac)(bd)
  LawCheck<4> is_medial(CayleyTable const& t);
  // (ab)c = a(bc)
  LawCheck<3> is_associative(CayleyTable const& t);
  // ab = ba
  LawCheck<2> is_commutative(CayleyTable const& t);

  ElementSet left_identities(CayleyTable const& t);
  ElementSet right_identities(CayleyTable const& t);

  struct RegularityCheck {
    bool holds = true;
    // When holds: witnesses[a] is the least x with (ax)a = a.
    std::vector<Element> witnesses;
    // When not: the least a without a witness.
    std::optional<Element> witnessless;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  RegularityCheck is_regular(CayleyTable const& t);

  // Every a has some x with a = (ax)a and x = (xa)x.
  bool is_inverse_la(CayleyTable const& t);

  // { x : ax = e } for the left identity e. Throws DomainError if t has no
  // left identity.
  ElementSet right_inverses(CayleyTable const& t, Element a);

  // False when t has no left identity.
  bool is_right_invertible(CayleyTable const& t);

  // { e : e*e = e }
  ElementSet idempotents(CayleyTable const& t);

  // S*S = S
  bool is_globally_idempotent(CayleyTable const& t);

  struct PropertyProfile {
    bool                   is_la = false;
    bool                   is_medial = false;
    std::optional<Element> left_identity;
    std::optional<Element> right_identity;
    bool                   is_commutative = false;
    bool                   is_associative = false;
    bool                   is_regular = false;
    bool                   is_inverse_la = false;
    bool                   is_right_invertible = false;
    bool                   is_globally_idempotent = false;

    friend bool operator==(PropertyProfile const&, PropertyProfile const&)
        = default;
  };

  // Identity fields hold the least identity when there are several (only
  // possible for non-LA magmas).
  PropertyProfile profile(CayleyTable const& t);

}  // namespace agwb
