#include "agwb/ideals.hpp"

#include <algorithm>
#include <set>

#include "agwb/errors.hpp"

namespace agwb {

  namespace {

    void require_nonempty(ElementSet const& I, char const* what) {
      if (I.empty()) {
        throw DomainError(std::string(what) + ": ideals are nonempty");
      }
    }

    void require_same_order(CayleyTable const& t, ElementSet const& A) {
      if (A.order() != t.order()) {
        throw UsageError("element set of order " + std::to_string(A.order())
                         + " used with a table of order "
                         + std::to_string(t.order()));
      }
    }

    // column[x] = S*x and row[x] = x*S as bit masks.
    struct ProductMasks {
      explicit ProductMasks(CayleyTable const& t)
          : column(t.order(), 0), row(t.order(), 0) {
        Element const n = static_cast<Element>(t.order());
        for (Element a = 0; a < n; ++a) {
          for (Element b = 0; b < n; ++b) {
            std::uint64_t bit = std::uint64_t{1} << t(a, b);
            row[a] |= bit;
            column[b] |= bit;
          }
        }
      }

      // The multiples of x that an ideal of the given kind must absorb.
      std::uint64_t absorbed(Element x, IdealKind kind) const {
        switch (kind) {
          case IdealKind::left:
            return column[x];
          case IdealKind::right:
            return row[x];
          case IdealKind::two_sided:
            return column[x] | row[x];
        }
        return 0;
      }

      bool closed(std::uint64_t bits, IdealKind kind) const {
        for (std::uint64_t b = bits; b != 0; b &= b - 1) {
          auto x = static_cast<Element>(std::countr_zero(b));
          if ((absorbed(x, kind) & ~bits) != 0) {
            return false;
          }
        }
        return true;
      }

      std::uint64_t closure(std::uint64_t bits, IdealKind kind) const {
        std::uint64_t done = 0;
        while (std::uint64_t todo = bits & ~done) {
          auto x = static_cast<Element>(std::countr_zero(todo));
          done |= std::uint64_t{1} << x;
          bits |= absorbed(x, kind);
        }
        return bits;
      }

      std::vector<std::uint64_t> column;
      std::vector<std::uint64_t> row;
    };

  }  // namespace

  ElementSet subset_product(CayleyTable const& t,
                            ElementSet const&  A,
                            ElementSet const&  B) {
    require_same_order(t, A);
    require_same_order(t, B);
    ElementSet out(t.order());
    A.for_each([&](Element a) {
      B.for_each([&](Element b) { out.insert(t(a, b)); });
    });
    return out;
  }

  ElementSet element_times(CayleyTable const& t,
                           Element            a,
                           ElementSet const&  B) {
    return subset_product(t, ElementSet::singleton(t.order(), a), B);
  }

  ElementSet times_element(CayleyTable const& t,
                           ElementSet const&  A,
                           Element            b) {
    return subset_product(t, A, ElementSet::singleton(t.order(), b));
  }

  bool is_ideal(CayleyTable const& t, ElementSet const& I, IdealKind kind) {
    require_same_order(t, I);
    require_nonempty(I, "is_ideal");
    return ProductMasks(t).closed(I.bits(), kind);
  }

  bool is_left_ideal(CayleyTable const& t, ElementSet const& I) {
    return is_ideal(t, I, IdealKind::left);
  }

  bool is_right_ideal(CayleyTable const& t, ElementSet const& I) {
    return is_ideal(t, I, IdealKind::right);
  }

  bool is_ideal(CayleyTable const& t, ElementSet const& I) {
    return is_ideal(t, I, IdealKind::two_sided);
  }

  ElementSet generated_ideal(CayleyTable const& t,
                             ElementSet const&  seed,
                             IdealKind          kind) {
    require_same_order(t, seed);
    require_nonempty(seed, "generated_ideal");
    return ElementSet(t.order(), ProductMasks(t).closure(seed.bits(), kind));
  }

  ElementSet generated_left_ideal(CayleyTable const& t,
                                  ElementSet const&  seed) {
    return generated_ideal(t, seed, IdealKind::left);
  }

  ElementSet generated_right_ideal(CayleyTable const& t,
                                   ElementSet const&  seed) {
    return generated_ideal(t, seed, IdealKind::right);
  }

  ElementSet generated_ideal(CayleyTable const& t, ElementSet const& seed) {
    return generated_ideal(t, seed, IdealKind::two_sided);
  }

  ElementSet principal_left_ideal(CayleyTable const& t, Element a) {
    if (a >= t.order()) {
      throw UsageError("element " + std::to_string(a) + " out of range");
    }
    if (left_identities(t).empty()) {
      throw DomainError("the principal left ideal Sa needs a left identity");
    }
    return times_element(t, ElementSet::full(t.order()), a);
  }

  std::vector<ElementSet> all_ideals_by_subset_scan(CayleyTable const& t,
                                                    IdealKind          kind) {
    if (t.order() > 20) {
      throw UsageError("subset scan is limited to order 20");
    }
    ProductMasks const      masks(t);
    std::uint64_t const     limit = std::uint64_t{1} << t.order();
    std::vector<ElementSet> out;
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      if (masks.closed(bits, kind)) {
        out.emplace_back(t.order(), bits);
      }
    }
    return out;
  }

  std::vector<ElementSet> all_ideals_by_closure_unions(CayleyTable const& t,
                                                       IdealKind kind) {
    // Every ideal is the union of the ideals generated by its members.
    ProductMasks const masks(t);
    Element const      n = static_cast<Element>(t.order());
    std::vector<std::uint64_t> generators;
    for (Element x = 0; x < n; ++x) {
      generators.push_back(masks.closure(std::uint64_t{1} << x, kind));
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());

    std::set<std::uint64_t>    seen(generators.begin(), generators.end());
    std::vector<std::uint64_t> frontier(generators.begin(), generators.end());
    while (!frontier.empty()) {
      std::vector<std::uint64_t> next;
      for (auto u : frontier) {
        for (auto g : generators) {
          if ((g & ~u) != 0 && seen.insert(u | g).second) {
            next.push_back(u | g);
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<ElementSet> out;
    out.reserve(seen.size());
    for (auto bits : seen) {
      out.emplace_back(t.order(), bits);
    }
    return out;
  }

  std::vector<ElementSet> all_ideals(CayleyTable const& t, IdealKind kind) {
    return t.order() <= 12 ? all_ideals_by_subset_scan(t, kind)
                           : all_ideals_by_closure_unions(t, kind);
  }

  ////////////////////////////////////////////////////////////////////////
  // IdealCatalog
  ////////////////////////////////////////////////////////////////////////

  IdealCatalog::IdealCatalog(CayleyTable t)
      : _table(std::move(t)),
        _left(all_ideals(_table, IdealKind::left)),
        _right(all_ideals(_table, IdealKind::right)),
        _two_sided(all_ideals(_table, IdealKind::two_sided)) {}

  std::span<ElementSet const>
  IdealCatalog::of_kind(IdealKind kind) const noexcept {
    switch (kind) {
      case IdealKind::left:
        return _left;
      case IdealKind::right:
        return _right;
      case IdealKind::two_sided:
        return _two_sided;
    }
    return {};
  }

  bool IdealCatalog::contains(ElementSet const& I, IdealKind kind) const {
    auto list = of_kind(kind);
    return std::binary_search(list.begin(), list.end(), I);
  }

  void IdealCatalog::require_two_sided(ElementSet const& P) const {
    require_same_order(_table, P);
    require_nonempty(P, "ideal classification");
    if (!contains(P, IdealKind::two_sided)) {
      throw DomainError(P.to_string() + " is not an ideal");
    }
  }

  void IdealCatalog::require_left(ElementSet const& P) const {
    require_same_order(_table, P);
    require_nonempty(P, "ideal classification");
    if (!contains(P, IdealKind::left)) {
      throw DomainError(P.to_string() + " is not a left ideal");
    }
  }

  namespace {
    // AB in P implies A in P or B in P, for A, B ranging over `domain`.
    bool prime_over(CayleyTable const&          t,
                    std::span<ElementSet const> domain,
                    ElementSet const&           P) {
      for (auto const& A : domain) {
        if (A.is_subset_of(P)) {
          continue;
        }
        for (auto const& B : domain) {
          if (!B.is_subset_of(P) && subset_product(t, A, B).is_subset_of(P)) {
            return false;
          }
        }
      }
      return true;
    }

    bool semiprime_over(CayleyTable const&          t,
                        std::span<ElementSet const> domain,
                        ElementSet const&           P) {
      for (auto const& I : domain) {
        if (!I.is_subset_of(P) && subset_product(t, I, I).is_subset_of(P)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool IdealCatalog::is_prime(ElementSet const& P) const {
    require_two_sided(P);
    return prime_over(_table, _two_sided, P);
  }

  bool IdealCatalog::is_semiprime(ElementSet const& P) const {
    require_two_sided(P);
    return semiprime_over(_table, _two_sided, P);
  }

  bool IdealCatalog::is_strongly_irreducible(ElementSet const& P) const {
    require_two_sided(P);
    for (auto const& H : _two_sided) {
      if (H.is_subset_of(P)) {
        continue;
      }
      for (auto const& K : _two_sided) {
        if (!K.is_subset_of(P) && (H & K).is_subset_of(P)) {
          return false;
        }
      }
    }
    return true;
  }

  bool IdealCatalog::is_quasi_prime(ElementSet const& P) const {
    require_left(P);
    return prime_over(_table, _left, P);
  }

  bool IdealCatalog::is_quasi_semiprime(ElementSet const& P) const {
    require_left(P);
    return semiprime_over(_table, _left, P);
  }

  bool IdealCatalog::is_minimal(ElementSet const& I) const {
    require_two_sided(I);
    return std::none_of(_two_sided.begin(),
                        _two_sided.end(),
                        [&I](auto const& J) { return J.is_proper_subset_of(I); });
  }

  bool IdealCatalog::is_minimal_left(ElementSet const& I) const {
    require_left(I);
    return std::none_of(_left.begin(), _left.end(), [&I](auto const& J) {
      return J.is_proper_subset_of(I);
    });
  }

  std::vector<ElementSet>
  IdealCatalog::minimal_primes_over(ElementSet const& I) const {
    require_two_sided(I);
    std::vector<ElementSet> primes;
    for (auto const& P : _two_sided) {
      if (I.is_subset_of(P) && prime_over(_table, _two_sided, P)) {
        primes.push_back(P);
      }
    }
    std::vector<ElementSet> out;
    for (auto const& P : primes) {
      if (std::none_of(primes.begin(), primes.end(), [&P](auto const& Q) {
            return Q.is_proper_subset_of(P);
          })) {
        out.push_back(P);
      }
    }
    return out;
  }

  bool IdealCatalog::is_fully_prime() const {
    return std::all_of(_two_sided.begin(), _two_sided.end(), [this](auto& P) {
      return prime_over(_table, _two_sided, P);
    });
  }

  bool IdealCatalog::is_fully_semiprime() const {
    return std::all_of(_two_sided.begin(), _two_sided.end(), [this](auto& P) {
      return semiprime_over(_table, _two_sided, P);
    });
  }

  bool IdealCatalog::totally_ordered() const {
    for (std::size_t i = 0; i < _two_sided.size(); ++i) {
      for (std::size_t j = i + 1; j < _two_sided.size(); ++j) {
        auto const& A = _two_sided[i];
        auto const& B = _two_sided[j];
        if (!A.is_subset_of(B) && !B.is_subset_of(A)) {
          return false;
        }
      }
    }
    return true;
  }

  SemilatticeCheck IdealCatalog::forms_semilattice() const {
    auto const& ideals = _two_sided;
    auto        prod = [this](ElementSet const& A, ElementSet const& B) {
      return subset_product(_table, A, B);
    };
    for (auto const& A : ideals) {
      for (auto const& B : ideals) {
        if (!contains(prod(A, B), IdealKind::two_sided)) {
          return {false, "closure", {A, B}};
        }
      }
    }
    for (auto const& A : ideals) {
      for (auto const& B : ideals) {
        if (prod(A, B) != prod(B, A)) {
          return {false, "commutativity", {A, B}};
        }
      }
    }
    for (auto const& A : ideals) {
      for (auto const& B : ideals) {
        auto const AB = prod(A, B);
        for (auto const& C : ideals) {
          if (prod(AB, C) != prod(A, prod(B, C))) {
            return {false, "associativity", {A, B, C}};
          }
        }
      }
    }
    for (auto const& A : ideals) {
      if (prod(A, A) != A) {
        return {false, "idempotence", {A}};
      }
    }
    return {};
  }

  bool is_prime(CayleyTable const& t, ElementSet const& P) {
    return IdealCatalog(t).is_prime(P);
  }
  bool is_semiprime(CayleyTable const& t, ElementSet const& P) {
    return IdealCatalog(t).is_semiprime(P);
  }
  bool is_strongly_irreducible(CayleyTable const& t, ElementSet const& P) {
    return IdealCatalog(t).is_strongly_irreducible(P);
  }
  bool is_quasi_prime(CayleyTable const& t, ElementSet const& P) {
    return IdealCatalog(t).is_quasi_prime(P);
  }
  bool is_quasi_semiprime(CayleyTable const& t, ElementSet const& P) {
    return IdealCatalog(t).is_quasi_semiprime(P);
  }
  bool is_minimal_ideal(CayleyTable const& t, ElementSet const& I) {
    return IdealCatalog(t).is_minimal(I);
  }
  bool is_fully_prime(CayleyTable const& t) {
    return IdealCatalog(t).is_fully_prime();
  }
  bool is_fully_semiprime(CayleyTable const& t) {
    return IdealCatalog(t).is_fully_semiprime();
  }
  bool ideals_totally_ordered(CayleyTable const& t) {
    return IdealCatalog(t).totally_ordered();
  }
  SemilatticeCheck ideals_form_semilattice(CayleyTable const& t) {
    return IdealCatalog(t).forms_semilattice();
  }
  std::vector<ElementSet> minimal_primes_over(CayleyTable const& t,
                                              ElementSet const&  I) {
    return IdealCatalog(t).minimal_primes_over(I);
  }

  IdealAnalysis analyze_ideals(CayleyTable const& t) {
    IdealCatalog const cat(t);
    IdealAnalysis      out;
    out.order = t.order();
    out.profile = profile(t);
    out.totally_ordered = cat.totally_ordered();
    out.semilattice = cat.forms_semilattice().holds;
    out.fully_prime = cat.is_fully_prime();
    out.fully_semiprime = cat.is_fully_semiprime();

    std::vector<ElementSet> carriers(cat.left().begin(), cat.left().end());
    carriers.insert(carriers.end(), cat.right().begin(), cat.right().end());
    std::sort(carriers.begin(), carriers.end());
    carriers.erase(std::unique(carriers.begin(), carriers.end()),
                   carriers.end());

    for (auto const& I : carriers) {
      IdealRecord r;
      r.carrier = I;
      r.is_left = cat.contains(I, IdealKind::left);
      r.is_right = cat.contains(I, IdealKind::right);
      r.is_two_sided = r.is_left && r.is_right;
      r.is_proper = !I.is_full();
      r.idempotent = subset_product(t, I, I) == I;
      if (r.is_two_sided) {
        r.prime = cat.is_prime(I);
        r.semiprime = cat.is_semiprime(I);
        r.strongly_irreducible = cat.is_strongly_irreducible(I);
        r.minimal = cat.is_minimal(I);
      }
      if (r.is_left) {
        r.quasi_prime = cat.is_quasi_prime(I);
        r.quasi_semiprime = cat.is_quasi_semiprime(I);
      }
      out.ideals.push_back(r);
    }
    return out;
  }

}  // namespace agwb
