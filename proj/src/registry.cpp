// The statement registry. Each clause inspects one model and returns a
// witness of failure (universal clauses) or of success (existential ones).
// Quantifiers are exhausted in lexicographic order so the first witness is
// the least one.

#include <algorithm>
#include <optional>
#include <utility>

#include "agwb/errors.hpp"
#include "agwb/verify.hpp"

namespace agwb {

  namespace {

    using Check = std::optional<Witness>;

    ElementSet whole(Model const& m) {
      return ElementSet::full(m.table.order());
    }

    ElementSet prod(Model const& m, ElementSet const& A, ElementSet const& B) {
      return subset_product(m.table, A, B);
    }

    Element square(Model const& m, Element x) {
      return m.table(x, x);
    }

    Element left_identity(Model const& m) {
      return *m.profile.left_identity;
    }

    Element count(Model const& m) {
      return static_cast<Element>(m.table.order());
    }

    // Ideals A, B with AB in P and neither in P.
    std::optional<std::pair<ElementSet, ElementSet>>
    prime_failure(Model const&                m,
                  std::span<ElementSet const> domain,
                  ElementSet const&           P) {
      for (auto const& A : domain) {
        if (A.is_subset_of(P)) {
          continue;
        }
        for (auto const& B : domain) {
          if (!B.is_subset_of(P) && prod(m, A, B).is_subset_of(P)) {
            return std::pair{A, B};
          }
        }
      }
      return std::nullopt;
    }

    std::optional<ElementSet> semiprime_failure(Model const& m,
                                                std::span<ElementSet const> domain,
                                                ElementSet const& P) {
      for (auto const& I : domain) {
        if (!I.is_subset_of(P) && prod(m, I, I).is_subset_of(P)) {
          return I;
        }
      }
      return std::nullopt;
    }

    std::optional<std::pair<ElementSet, ElementSet>>
    incomparable_ideals(Model const& m) {
      auto ideals = m.ideals.two_sided();
      for (std::size_t i = 0; i < ideals.size(); ++i) {
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
          if (!ideals[i].is_subset_of(ideals[j])
              && !ideals[j].is_subset_of(ideals[i])) {
            return std::pair{ideals[i], ideals[j]};
          }
        }
      }
      return std::nullopt;
    }

    std::optional<ElementSet> non_idempotent_ideal(Model const& m) {
      for (auto const& I : m.ideals.two_sided()) {
        if (prod(m, I, I) != I) {
          return I;
        }
      }
      return std::nullopt;
    }

    // The least ideal that is not prime, with the ideals showing it.
    std::optional<Witness> fully_prime_failure(Model const& m) {
      for (auto const& P : m.ideals.two_sided()) {
        if (auto ab = prime_failure(m, m.ideals.two_sided(), P)) {
          return Witness{{"P", P}, {"A", ab->first}, {"B", ab->second}};
        }
      }
      return std::nullopt;
    }

    bool is_fully_prime(Model const& m) {
      return !fully_prime_failure(m).has_value();
    }

    // a(Sb) = { a(sb) : s in S }
    ElementSet a_Sb(Model const& m, Element a, Element b) {
      return element_times(m.table, a, times_element(m.table, whole(m), b));
    }

    ////////////////////////////////////////////////////////////////////////
    // Clauses
    ////////////////////////////////////////////////////////////////////////

    Check lemma_1(Model const& m) {
      auto const S = whole(m);
      auto const e = left_identity(m);
      if (auto SS = prod(m, S, S); SS != S) {
        return Witness{{"SS", SS}};
      }
      if (auto eS = element_times(m.table, e, S); eS != S) {
        return Witness{{"e", e}, {"eS", eS}};
      }
      if (auto Se = times_element(m.table, S, e); Se != S) {
        return Witness{{"e", e}, {"Se", Se}};
      }
      return std::nullopt;
    }

    Check remark_1_fwd(Model const& m) {
      auto const S = whole(m);
      if (auto SS = prod(m, S, S); SS != S) {
        return Witness{{"SS", SS}};
      }
      return std::nullopt;
    }

    // Existential: S = S^2 without a left identity.
    Check remark_1_converse(Model const& m) {
      if (m.profile.is_globally_idempotent && !m.profile.left_identity) {
        return Witness{{"SS", whole(m)}};
      }
      return std::nullopt;
    }

    Check prop_1(Model const& m) {
      auto const& t = m.table;
      for (Element x = 0; x < count(m); ++x) {
        for (Element y = 0; y < count(m); ++y) {
          auto const xy = t(x, y);
          auto const lhs = t(xy, xy);
          auto const mid = t(square(m, x), square(m, y));
          auto const rhs = t(square(m, y), square(m, x));
          if (lhs != mid || mid != rhs) {
            return Witness{{"x", x}, {"y", y}};
          }
        }
      }
      return std::nullopt;
    }

    Check prop_1_ideal(Model const& m) {
      for (Element a = 0; a < count(m); ++a) {
        auto const a2S = element_times(m.table, square(m, a), whole(m));
        if (!m.ideals.contains(a2S, IdealKind::two_sided)) {
          return Witness{{"a", a}, {"a2S", a2S}};
        }
      }
      return std::nullopt;
    }

    // Every right ideal is a left ideal; shared by prop-2 and lemma-5.
    Check right_ideals_are_left(Model const& m) {
      for (auto const& I : m.ideals.right()) {
        if (!m.ideals.contains(I, IdealKind::left)) {
          return Witness{{"I", I}};
        }
      }
      return std::nullopt;
    }

    Check remark_2_1(Model const& m) {
      auto const S = whole(m);
      for (auto const& I : m.ideals.right()) {
        if (!m.ideals.contains(I, IdealKind::left)
            || !prod(m, S, I).is_subset_of(prod(m, I, S))) {
          return Witness{{"I", I}};
        }
      }
      return std::nullopt;
    }

    Check remark_2_2(Model const& m) {
      auto const S = whole(m);
      for (auto const& I : m.ideals.right()) {
        auto const SI = prod(m, S, I);
        if (!m.ideals.contains(SI, IdealKind::left)) {
          return Witness{{"I", I}, {"SI", SI}};
        }
        auto const IS = prod(m, I, S);
        if (!m.ideals.contains(IS, IdealKind::right)) {
          return Witness{{"I", I}, {"IS", IS}};
        }
      }
      return std::nullopt;
    }

    Check lemma_2(Model const& m) {
      for (auto const& I : m.ideals.left()) {
        for (Element a = 0; a < count(m); ++a) {
          auto const aI = element_times(m.table, a, I);
          if (!m.ideals.contains(aI, IdealKind::left)) {
            return Witness{{"I", I}, {"a", a}, {"aI", aI}};
          }
        }
      }
      return std::nullopt;
    }

    Check square_is_ideal(Model const& m, IdealKind kind) {
      for (auto const& I : m.ideals.of_kind(kind)) {
        auto const I2 = prod(m, I, I);
        if (!m.ideals.contains(I2, IdealKind::two_sided)) {
          return Witness{{"I", I}, {"I2", I2}};
        }
      }
      return std::nullopt;
    }

    std::vector<ElementSet> proper_ideals(Model const& m) {
      std::vector<ElementSet> out;
      for (auto const& M : m.ideals.two_sided()) {
        if (!M.is_full()) {
          out.push_back(M);
        }
      }
      return out;
    }

    // First a with M != a^2 M.
    std::optional<std::pair<Element, ElementSet>>
    a2M_failure(Model const& m, ElementSet const& M) {
      for (Element a = 0; a < count(m); ++a) {
        auto const a2M = element_times(m.table, square(m, a), M);
        if (a2M != M) {
          return std::pair{a, a2M};
        }
      }
      return std::nullopt;
    }

    Check prop_3_fwd(Model const& m) {
      for (auto const& M : proper_ideals(m)) {
        if (!m.ideals.is_minimal(M)) {
          continue;
        }
        if (auto f = a2M_failure(m, M)) {
          return Witness{{"M", M}, {"a", f->first}, {"a2M", f->second}};
        }
      }
      return std::nullopt;
    }

    Check prop_3_rev(Model const& m) {
      for (auto const& M : proper_ideals(m)) {
        if (a2M_failure(m, M)) {
          continue;
        }
        for (auto const& J : m.ideals.two_sided()) {
          if (J.is_proper_subset_of(M)) {
            return Witness{{"M", M}, {"J", J}};
          }
        }
      }
      return std::nullopt;
    }

    Check thm_1(Model const& m) {
      for (auto const& I : m.ideals.left()) {
        if (!m.ideals.is_minimal_left(I)) {
          continue;
        }
        auto const I2 = prod(m, I, I);
        for (Element a = 0; a < count(m); ++a) {
          auto const a2I2 = element_times(m.table, square(m, a), I2);
          if (!m.ideals.contains(a2I2, IdealKind::two_sided)
              || !m.ideals.is_minimal(a2I2)) {
            return Witness{{"I", I}, {"a", a}, {"a2I2", a2I2}};
          }
        }
      }
      return std::nullopt;
    }

    Check thm_2_fwd(Model const& m) {
      if (!is_fully_prime(m)) {
        return std::nullopt;
      }
      if (auto I = non_idempotent_ideal(m)) {
        return Witness{{"I", *I}};
      }
      if (auto ab = incomparable_ideals(m)) {
        return Witness{{"A", ab->first}, {"B", ab->second}};
      }
      return std::nullopt;
    }

    Check thm_2_rev(Model const& m) {
      if (non_idempotent_ideal(m) || incomparable_ideals(m)) {
        return std::nullopt;
      }
      return fully_prime_failure(m);
    }

    // a(Sb) in P implies a in P or b in P; the least (a, b) breaking it.
    std::optional<std::pair<Element, Element>>
    element_prime_failure(Model const& m, ElementSet const& P) {
      for (Element a = 0; a < count(m); ++a) {
        for (Element b = 0; b < count(m); ++b) {
          if (a_Sb(m, a, b).is_subset_of(P) && !P.contains(a)
              && !P.contains(b)) {
            return std::pair{a, b};
          }
        }
      }
      return std::nullopt;
    }

    std::optional<Element> element_semiprime_failure(Model const&      m,
                                                     ElementSet const& P) {
      for (Element a = 0; a < count(m); ++a) {
        if (a_Sb(m, a, a).is_subset_of(P) && !P.contains(a)) {
          return a;
        }
      }
      return std::nullopt;
    }

    Check thm_3_fwd(Model const& m) {
      for (auto const& P : m.ideals.left()) {
        if (!m.ideals.is_quasi_prime(P)) {
          continue;
        }
        if (auto ab = element_prime_failure(m, P)) {
          return Witness{{"P", P}, {"a", ab->first}, {"b", ab->second}};
        }
      }
      return std::nullopt;
    }

    Check thm_3_rev(Model const& m) {
      for (auto const& P : m.ideals.left()) {
        if (element_prime_failure(m, P)) {
          continue;
        }
        if (auto ab = prime_failure(m, m.ideals.left(), P)) {
          return Witness{{"P", P}, {"A", ab->first}, {"B", ab->second}};
        }
      }
      return std::nullopt;
    }

    Check cor_1_fwd(Model const& m) {
      for (auto const& P : m.ideals.left()) {
        if (!m.ideals.is_quasi_semiprime(P)) {
          continue;
        }
        if (auto a = element_semiprime_failure(m, P)) {
          return Witness{{"P", P}, {"a", *a}};
        }
      }
      return std::nullopt;
    }

    Check cor_1_rev(Model const& m) {
      for (auto const& P : m.ideals.left()) {
        if (element_semiprime_failure(m, P)) {
          continue;
        }
        if (auto I = semiprime_failure(m, m.ideals.left(), P)) {
          return Witness{{"P", P}, {"I", *I}};
        }
      }
      return std::nullopt;
    }

    Check lemma_4(Model const& m) {
      auto const e = left_identity(m);
      std::vector<ElementSet> one_sided(m.ideals.right().begin(),
                                        m.ideals.right().end());
      one_sided.insert(
          one_sided.end(), m.ideals.left().begin(), m.ideals.left().end());
      std::sort(one_sided.begin(), one_sided.end());
      for (auto const& I : one_sided) {
        if (!I.is_full() && I.contains(e)) {
          return Witness{{"I", I}, {"e", e}};
        }
      }
      return std::nullopt;
    }

    // Nonempty H(a) = { x : ax = e } is never inside a proper ideal.
    Check lemma_4_h(Model const& m) {
      auto const e = left_identity(m);
      for (auto const& I : proper_ideals(m)) {
        for (Element a = 0; a < count(m); ++a) {
          auto const H = right_inverses(m.table, a);
          if (!H.empty() && H.is_subset_of(I)) {
            return Witness{{"I", I}, {"a", a}, {"e", e}, {"H", H}};
          }
        }
      }
      return std::nullopt;
    }

    // Some a in I, x in S with ax = e.
    std::optional<std::pair<Element, Element>> unit_in(Model const&      m,
                                                       ElementSet const& I) {
      auto const                                 e = left_identity(m);
      std::optional<std::pair<Element, Element>> out;
      I.for_each([&](Element a) {
        for (Element x = 0; x < count(m) && !out; ++x) {
          if (m.table(a, x) == e) {
            out = std::pair{a, x};
          }
        }
      });
      return out;
    }

    Check thm_4_fwd(Model const& m) {
      for (auto const& I : proper_ideals(m)) {
        if (auto ax = unit_in(m, I)) {
          return Witness{{"I", I}, {"a", ax->first}, {"x", ax->second}};
        }
      }
      return std::nullopt;
    }

    Check thm_4_rev(Model const& m) {
      for (auto const& I : m.ideals.two_sided()) {
        if (I.is_full() && !unit_in(m, I)) {
          return Witness{{"I", I}};
        }
      }
      return std::nullopt;
    }

    Check prop_4_fwd(Model const& m) {
      for (auto const& P : m.ideals.two_sided()) {
        if (m.ideals.is_prime(P)
            && (!m.ideals.is_semiprime(P)
                || !m.ideals.is_strongly_irreducible(P))) {
          return Witness{{"P", P}};
        }
      }
      return std::nullopt;
    }

    Check prop_4_rev(Model const& m) {
      for (auto const& P : m.ideals.two_sided()) {
        if (m.ideals.is_semiprime(P) && m.ideals.is_strongly_irreducible(P)
            && !m.ideals.is_prime(P)) {
          return Witness{{"P", P}};
        }
      }
      return std::nullopt;
    }

    // Every nonempty chain of prime ideals, built by extending with strict
    // supersets in canonical order.
    Check thm_5(Model const& m) {
      std::vector<ElementSet> primes;
      for (auto const& P : m.ideals.two_sided()) {
        if (m.ideals.is_prime(P)) {
          primes.push_back(P);
        }
      }
      std::sort(primes.begin(),
                primes.end(),
                [](ElementSet const& a, ElementSet const& b) {
                  return std::pair(a.size(), a) < std::pair(b.size(), b);
                });
      std::vector<ElementSet> chain;
      Check                   failure;
      auto visit = [&](auto&& self, std::size_t next) -> void {
        if (failure) {
          return;
        }
        if (!chain.empty()) {
          ElementSet meet = chain.front();
          for (auto const& P : chain) {
            meet = meet & P;
          }
          if (meet.empty() || !m.ideals.contains(meet, IdealKind::two_sided)
              || !m.ideals.is_prime(meet)) {
            Witness w;
            for (std::size_t i = 0; i < chain.size(); ++i) {
              w.emplace_back("P" + std::to_string(i + 1), chain[i]);
            }
            w.emplace_back("meet", meet);
            failure = w;
            return;
          }
        }
        for (std::size_t i = next; i < primes.size(); ++i) {
          if (chain.empty() || chain.back().is_proper_subset_of(primes[i])) {
            chain.push_back(primes[i]);
            self(self, i + 1);
            chain.pop_back();
          }
        }
      };
      visit(visit, 0);
      return failure;
    }

    Check thm_6(Model const& m) {
      for (auto const& I : m.ideals.two_sided()) {
        auto const minimal = m.ideals.minimal_primes_over(I);
        if (minimal.empty()) {
          return Witness{{"I", I}};
        }
        for (auto const& P : minimal) {
          if (!I.is_subset_of(P) || !m.ideals.is_prime(P)) {
            return Witness{{"I", I}, {"P", P}};
          }
        }
      }
      return std::nullopt;
    }

    Check lemma_6(Model const& m) {
      for (auto const& P : m.ideals.right()) {
        for (auto const& Q : m.ideals.left()) {
          auto const PQ = prod(m, P, Q);
          if (PQ != (P & Q)) {
            return Witness{{"P", P}, {"Q", Q}, {"PQ", PQ}};
          }
        }
      }
      return std::nullopt;
    }

    Check lemma_6_semiprime(Model const& m) {
      for (auto const& I : m.ideals.two_sided()) {
        if (!m.ideals.is_semiprime(I)) {
          return Witness{{"I", I}};
        }
      }
      return std::nullopt;
    }

    Check thm_7(Model const& m) {
      auto const check = m.ideals.forms_semilattice();
      if (check.holds) {
        return std::nullopt;
      }
      static char const* const names[] = {"A", "B", "C"};
      Witness                  w;
      for (std::size_t i = 0; i < check.witness.size(); ++i) {
        w.emplace_back(names[i], check.witness[i]);
      }
      return w;
    }

    Check thm_8_fwd(Model const& m) {
      if (!is_fully_prime(m)) {
        return std::nullopt;
      }
      if (auto ab = incomparable_ideals(m)) {
        return Witness{{"A", ab->first}, {"B", ab->second}};
      }
      return std::nullopt;
    }

    Check thm_8_rev(Model const& m) {
      if (incomparable_ideals(m)) {
        return std::nullopt;
      }
      return fully_prime_failure(m);
    }

    Check thm_9_fwd(Model const& m) {
      for (auto const& P : m.ideals.two_sided()) {
        if (m.ideals.is_prime(P) && !m.ideals.is_strongly_irreducible(P)) {
          return Witness{{"P", P}};
        }
      }
      return std::nullopt;
    }

    Check thm_9_rev(Model const& m) {
      for (auto const& P : m.ideals.two_sided()) {
        if (m.ideals.is_strongly_irreducible(P) && !m.ideals.is_prime(P)) {
          return Witness{{"P", P}};
        }
      }
      return std::nullopt;
    }

    Check misc_1(Model const& m) {
      auto const ids = left_identities(m.table).members();
      if (ids.size() > 1) {
        return Witness{{"e1", ids[0]}, {"e2", ids[1]}};
      }
      return std::nullopt;
    }

    Check misc_2(Model const& m) {
      if (!m.profile.right_identity) {
        return std::nullopt;
      }
      auto const r = *m.profile.right_identity;
      if (auto c = is_commutative(m.table); !c) {
        auto [a, b] = *c.violation;
        return Witness{{"r", r}, {"a", a}, {"b", b}};
      }
      if (auto s = is_associative(m.table); !s) {
        auto [a, b, c] = *s.violation;
        return Witness{{"r", r}, {"a", a}, {"b", b}, {"c", c}};
      }
      for (Element x = 0; x < count(m); ++x) {
        if (m.table(r, x) != x) {
          return Witness{{"r", r}, {"a", x}};
        }
      }
      return std::nullopt;
    }

    Check misc_3(Model const& m) {
      auto const S = whole(m);
      auto const ids = idempotents(m.table).members();
      for (Element a : ids) {
        auto const aS = element_times(m.table, a, S);
        if (!prod(m, aS, S).is_subset_of(aS)) {
          return Witness{{"a", a}, {"aS", aS}};
        }
      }
      return std::nullopt;
    }

    Check misc_4(Model const& m) {
      for (auto const& A : m.ideals.two_sided()) {
        for (auto const& B : m.ideals.two_sided()) {
          auto const meet = A & B;
          if (meet.empty() || !m.ideals.contains(meet, IdealKind::two_sided)
              || !m.ideals.contains(A | B, IdealKind::two_sided)) {
            return Witness{{"A", A}, {"B", B}};
          }
        }
      }
      return std::nullopt;
    }

    Check misc_5(Model const& m) {
      return remark_1_fwd(m);
    }

    Clause universal(std::string id,
                     Scope       scope,
                     std::function<Check(Model const&)> f) {
      return Clause{std::move(id), scope, Quantifier::universal, std::move(f)};
    }

    std::vector<StatementCheck> build_registry() {
      using enum Scope;
      std::vector<StatementCheck> r;
      r.push_back({"lemma-1",
                   "Lemma 1",
                   "left identity e => SS = S = eS = Se",
                   {universal("lemma-1", left_identity, lemma_1)}});
      r.push_back(
          {"remark-1",
           "Remark 1",
           "left identity => S = S^2; some S = S^2 has no left identity",
           {universal("remark-1-fwd", left_identity, remark_1_fwd),
            Clause{"remark-1-converse",
                   any,
                   Quantifier::existential,
                   remark_1_converse}}});
      r.push_back({"prop-1",
                   "Proposition 1",
                   "left identity => (xy)^2 = x^2 y^2 = y^2 x^2; a^2 S is an "
                   "ideal",
                   {universal("prop-1", left_identity, prop_1),
                    universal("prop-1-ideal", left_identity, prop_1_ideal)}});
      r.push_back({"prop-2",
                   "Proposition 2",
                   "left identity => every right ideal is an ideal",
                   {universal("prop-2", left_identity, right_ideals_are_left)}});
      r.push_back(
          {"remark-2",
           "Remark 2",
           "S = S^2 => right ideals are left ideals and SI in IS; I right "
           "ideal => SI left ideal, IS right ideal",
           {universal("remark-2-1", globally_idempotent, remark_2_1),
            universal("remark-2-2", any, remark_2_2)}});
      r.push_back({"lemma-2",
                   "Lemma 2",
                   "left identity, I left ideal => aI is a left ideal",
                   {universal("lemma-2", left_identity, lemma_2)}});
      r.push_back(
          {"lemma-3",
           "Lemma 3",
           "left identity, I right (or left) ideal => I^2 is an ideal",
           {universal("lemma-3",
                      left_identity,
                      [](Model const& m) {
                        return square_is_ideal(m, IdealKind::right);
                      }),
            universal("remark-3", left_identity, [](Model const& m) {
              return square_is_ideal(m, IdealKind::left);
            })}});
      r.push_back({"prop-3",
                   "Proposition 3",
                   "left identity, M proper ideal: M minimal <=> M = a^2 M "
                   "for all a",
                   {universal("prop-3-fwd", left_identity, prop_3_fwd),
                    universal("prop-3-rev", left_identity, prop_3_rev)}});
      r.push_back({"thm-1",
                   "Theorem 1",
                   "left identity, I minimal left ideal => a^2 I^2 is a "
                   "minimal ideal",
                   {universal("thm-1", left_identity, thm_1)}});
      r.push_back({"thm-2",
                   "Theorem 2",
                   "left identity: fully prime <=> every ideal idempotent "
                   "and ideals totally ordered",
                   {universal("thm-2-fwd", left_identity, thm_2_fwd),
                    universal("thm-2-rev", left_identity, thm_2_rev)}});
      r.push_back({"thm-3",
                   "Theorem 3",
                   "left identity, P left ideal: quasi-prime <=> (a(Sb) in P "
                   "=> a in P or b in P)",
                   {universal("thm-3-fwd", left_identity, thm_3_fwd),
                    universal("thm-3-rev", left_identity, thm_3_rev)}});
      r.push_back({"cor-1",
                   "Corollary 1",
                   "left identity, P left ideal: quasi-semiprime <=> (a(Sa) "
                   "in P => a in P)",
                   {universal("cor-1-fwd", left_identity, cor_1_fwd),
                    universal("cor-1-rev", left_identity, cor_1_rev)}});
      r.push_back({"lemma-4",
                   "Lemma 4",
                   "left identity e, I proper one-sided ideal => e not in I; "
                   "nonempty H(a) not inside a proper ideal",
                   {universal("lemma-4", left_identity, lemma_4),
                    universal("lemma-4-h", left_identity, lemma_4_h)}});
      r.push_back({"thm-4",
                   "Theorem 4",
                   "right invertible, I ideal: I proper <=> no a in I, x in S "
                   "with ax = e",
                   {universal("thm-4-fwd", right_invertible, thm_4_fwd),
                    universal("thm-4-rev", right_invertible, thm_4_rev)}});
      r.push_back({"prop-4",
                   "Proposition 4",
                   "P ideal: prime <=> semiprime and strongly irreducible",
                   {universal("prop-4-fwd", any, prop_4_fwd),
                    universal("prop-4-rev", any, prop_4_rev)}});
      r.push_back({"thm-5",
                   "Theorem 5",
                   "the intersection of a chain of prime ideals is prime",
                   {universal("thm-5", any, thm_5)}});
      r.push_back({"thm-6",
                   "Theorem 6",
                   "every ideal lies in a minimal prime ideal",
                   {universal("thm-6", any, thm_6)}});
      r.push_back({"lemma-5",
                   "Lemma 5",
                   "regular => every right ideal is an ideal",
                   {universal("lemma-5", regular, right_ideals_are_left)}});
      r.push_back({"lemma-6",
                   "Lemma 6",
                   "regular, P right ideal, Q left ideal => PQ = P & Q; "
                   "ideals are semiprime",
                   {universal("lemma-6", regular, lemma_6),
                    universal("lemma-6-semiprime", regular, lemma_6_semiprime)}});
      r.push_back({"thm-7",
                   "Theorem 7",
                   "regular => ideals form a semilattice under AB",
                   {universal("thm-7", regular, thm_7)}});
      r.push_back({"thm-8",
                   "Theorem 8",
                   "regular: fully prime <=> ideals totally ordered",
                   {universal("thm-8-fwd", regular, thm_8_fwd),
                    universal("thm-8-rev", regular, thm_8_rev)}});
      r.push_back({"thm-9",
                   "Theorem 9",
                   "regular, P ideal: prime <=> strongly irreducible",
                   {universal("thm-9-fwd", regular, thm_9_fwd),
                    universal("thm-9-rev", regular, thm_9_rev)}});
      r.push_back({"misc-1",
                   "Introduction",
                   "a left identity is unique",
                   {universal("misc-1", any, misc_1)}});
      r.push_back({"misc-2",
                   "Introduction",
                   "right identity => commutative monoid",
                   {universal("misc-2", any, misc_2)}});
      r.push_back({"misc-3",
                   "Ideals, note on idempotents",
                   "left identity, a idempotent => (aS)S in aS",
                   {universal("misc-3", left_identity, misc_3)}});
      r.push_back({"misc-4",
                   "Ideals, note on intersections",
                   "intersections and unions of ideals are ideals",
                   {universal("misc-4", any, misc_4)}});
      r.push_back({"misc-5",
                   "Regular LA-semigroups, opening note",
                   "regular => S = S^2",
                   {universal("misc-5", regular, misc_5)}});
      return r;
    }

  }  // namespace

  std::vector<StatementCheck> const& registry() {
    static std::vector<StatementCheck> const r = build_registry();
    return r;
  }

  StatementCheck const& find_statement(std::string const& id) {
    for (auto const& s : registry()) {
      if (s.id == id) {
        return s;
      }
    }
    throw UsageError("unknown statement id '" + id + "'");
  }

}  // namespace agwb
