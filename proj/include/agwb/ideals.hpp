#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agwb/cayley_table.hpp"
#include "agwb/element_set.hpp"
#include "agwb/properties.hpp"

namespace agwb {

  enum class IdealKind { left, right, two_sided };

  // { ab : a in A, b in B }
  ElementSet subset_product(CayleyTable const& t,
                            ElementSet const&  A,
                            ElementSet const&  B);
  // { ab : b in B }
  ElementSet element_times(CayleyTable const& t, Element a, ElementSet const& B);
  // { ab : a in A }
  ElementSet times_element(CayleyTable const& t, ElementSet const& A, Element b);

  // Ideals are nonempty; each of these throws DomainError on an empty set.
  bool is_left_ideal(CayleyTable const& t, ElementSet const& I);
  bool is_right_ideal(CayleyTable const& t, ElementSet const& I);
  bool is_ideal(CayleyTable const& t, ElementSet const& I);
  bool is_ideal(CayleyTable const& t, ElementSet const& I, IdealKind kind);

  // Least superset of the seed closed under multiplication by S on the left
  // (right, both sides). Throws DomainError on an empty seed.
  ElementSet generated_left_ideal(CayleyTable const& t, ElementSet const& seed);
  ElementSet generated_right_ideal(CayleyTable const& t,
                                   ElementSet const&  seed);
  ElementSet generated_ideal(CayleyTable const& t, ElementSet const& seed);
  ElementSet generated_ideal(CayleyTable const& t,
                             ElementSet const&  seed,
                             IdealKind          kind);

  // Sa. Throws DomainError if t has no left identity.
  ElementSet principal_left_ideal(CayleyTable const& t, Element a);

  // All ideals of the given kind sorted by bit pattern. Uses the subset scan
  // below order 13 and unions of single-element closures above.
  std::vector<ElementSet> all_ideals(CayleyTable const& t, IdealKind kind);
  std::vector<ElementSet> all_ideals_by_subset_scan(CayleyTable const& t,
                                                    IdealKind          kind);
  std::vector<ElementSet> all_ideals_by_closure_unions(CayleyTable const& t,
                                                       IdealKind kind);

  struct SemilatticeCheck {
    bool holds = true;
    // "closure", "commutativity", "associativity" or "idempotence".
    std::string failed_law;
    // The ideals (A), (A, B) or (A, B, C) instantiating the failure.
    std::vector<ElementSet> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // The left, right and two-sided ideals of one table, computed once. Every
  // classification below quantifies over these lists.
  class IdealCatalog {
   public:
    explicit IdealCatalog(CayleyTable t);

    CayleyTable const& table() const noexcept {
      return _table;
    }
    std::span<ElementSet const> left() const noexcept {
      return _left;
    }
    std::span<ElementSet const> right() const noexcept {
      return _right;
    }
    std::span<ElementSet const> two_sided() const noexcept {
      return _two_sided;
    }
    std::span<ElementSet const> of_kind(IdealKind kind) const noexcept;

    bool contains(ElementSet const& I, IdealKind kind) const;

    // The following throw DomainError unless P is a two-sided ideal.
    bool is_prime(ElementSet const& P) const;
    bool is_semiprime(ElementSet const& P) const;
    bool is_strongly_irreducible(ElementSet const& P) const;
    bool is_minimal(ElementSet const& I) const;
    std::vector<ElementSet> minimal_primes_over(ElementSet const& I) const;

    // These throw DomainError unless P is a left ideal.
    bool is_quasi_prime(ElementSet const& P) const;
    bool is_quasi_semiprime(ElementSet const& P) const;

    // A left ideal containing no other left ideal.
    bool is_minimal_left(ElementSet const& I) const;

    bool is_fully_prime() const;
    bool is_fully_semiprime() const;
    bool totally_ordered() const;
    SemilatticeCheck forms_semilattice() const;

   private:
    void require_two_sided(ElementSet const& P) const;
    void require_left(ElementSet const& P) const;

    CayleyTable             _table;
    std::vector<ElementSet> _left;
    std::vector<ElementSet> _right;
    std::vector<ElementSet> _two_sided;
  };

  // Convenience wrappers building a catalog per call.
  bool is_prime(CayleyTable const& t, ElementSet const& P);
  bool is_semiprime(CayleyTable const& t, ElementSet const& P);
  bool is_strongly_irreducible(CayleyTable const& t, ElementSet const& P);
  bool is_quasi_prime(CayleyTable const& t, ElementSet const& P);
  bool is_quasi_semiprime(CayleyTable const& t, ElementSet const& P);
  bool is_minimal_ideal(CayleyTable const& t, ElementSet const& I);
  bool is_fully_prime(CayleyTable const& t);
  bool is_fully_semiprime(CayleyTable const& t);
  bool ideals_totally_ordered(CayleyTable const& t);
  SemilatticeCheck ideals_form_semilattice(CayleyTable const& t);
  std::vector<ElementSet> minimal_primes_over(CayleyTable const& t,
                                              ElementSet const&  I);

  struct IdealRecord {
    ElementSet carrier;
    bool       is_left = false;
    bool       is_right = false;
    bool       is_two_sided = false;
    bool       is_proper = false;
    // Two-sided ideals only.
    bool prime = false;
    bool semiprime = false;
    bool strongly_irreducible = false;
    bool minimal = false;
    // Left ideals only.
    bool quasi_prime = false;
    bool quasi_semiprime = false;
    bool idempotent = false;
  };

  struct IdealAnalysis {
    std::size_t              order = 0;
    PropertyProfile          profile;
    std::vector<IdealRecord> ideals;  // every one-sided or two-sided ideal
    bool                     totally_ordered = false;
    bool                     semilattice = false;
    bool                     fully_prime = false;
    bool                     fully_semiprime = false;
  };

  IdealAnalysis analyze_ideals(CayleyTable const& t);

}  // namespace agwb
