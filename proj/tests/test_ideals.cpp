#include <random>

#include <catch_amalgamated.hpp>

#include "agwb/errors.hpp"
#include "agwb/ideals.hpp"
#include "reference/naive.hpp"
#include "test_util.hpp"

using namespace agwb;

namespace {
  ElementSet S(std::size_t n) {
    return ElementSet::full(n);
  }

  naive::Set to_naive(ElementSet const& s) {
    auto m = s.members();
    return naive::Set(m.begin(), m.end());
  }

  std::vector<naive::Set> to_naive(std::span<ElementSet const> xs) {
    std::vector<naive::Set> out;
    for (auto const& x : xs) {
      out.push_back(to_naive(x));
    }
    return out;
  }
}  // namespace

TEST_CASE("subset products", "[ideals]") {
  auto const null2 = fixtures::null2();
  auto const sub3 = fixtures::sub3();
  REQUIRE(subset_product(null2, S(2), S(2)) == ElementSet(2, {0}));
  REQUIRE(subset_product(sub3, ElementSet(3, {0}), ElementSet(3, {1}))
          == ElementSet(3, {1}));
  REQUIRE(subset_product(sub3, ElementSet(3), S(3)).empty());
  REQUIRE(subset_product(sub3, S(3), ElementSet(3)).empty());
}

TEST_CASE("ideal predicates", "[ideals]") {
  auto const null2 = fixtures::null2();
  auto const sub3 = fixtures::sub3();
  REQUIRE(is_ideal(null2, ElementSet(2, {0})));
  REQUIRE_FALSE(is_ideal(sub3, ElementSet(3, {0})));
  REQUIRE_FALSE(is_left_ideal(sub3, ElementSet(3, {0})));
  REQUIRE(is_ideal(sub3, S(3)));
  REQUIRE(is_left_ideal(null2, S(2)));
  REQUIRE(is_right_ideal(fixtures::trivial(), S(1)));
  REQUIRE_THROWS_AS(is_ideal(sub3, ElementSet(3)), DomainError);
  REQUIRE_THROWS_AS(is_left_ideal(null2, ElementSet(2)), DomainError);
}

TEST_CASE("generated ideals", "[ideals]") {
  auto const null2 = fixtures::null2();
  auto const sub3 = fixtures::sub3();
  REQUIRE(generated_left_ideal(null2, ElementSet(2, {1})) == S(2));
  REQUIRE(generated_ideal(null2, ElementSet(2, {1})) == S(2));
  REQUIRE(generated_left_ideal(sub3, ElementSet(3, {1})) == S(3));
  REQUIRE(generated_right_ideal(sub3, S(3)) == S(3));
  REQUIRE(generated_ideal(fixtures::trivial(), S(1)) == S(1));
  REQUIRE_THROWS_AS(generated_left_ideal(sub3, ElementSet(3)), DomainError);
}

TEST_CASE("principal left ideal", "[ideals]") {
  REQUIRE(principal_left_ideal(fixtures::sub3(), 1) == S(3));
  REQUIRE(principal_left_ideal(fixtures::sub3(), 0) == S(3));
  REQUIRE_THROWS_AS(principal_left_ideal(fixtures::null2(), 0), DomainError);
}

TEST_CASE("all ideals of the fixtures", "[ideals]") {
  using V = std::vector<ElementSet>;
  REQUIRE(all_ideals(fixtures::null2(), IdealKind::two_sided)
          == V{ElementSet(2, {0}), S(2)});
  REQUIRE(all_ideals(fixtures::sub3(), IdealKind::two_sided) == V{S(3)});
  for (auto kind : {IdealKind::left, IdealKind::right, IdealKind::two_sided}) {
    REQUIRE(all_ideals(fixtures::trivial(), kind) == V{S(1)});
  }
}

TEST_CASE("prime and related classifications on the fixtures", "[ideals]") {
  auto const null2 = fixtures::null2();
  auto const sub3 = fixtures::sub3();
  auto const zero = ElementSet(2, {0});

  REQUIRE_FALSE(is_prime(null2, zero));
  REQUIRE(is_prime(null2, S(2)));
  REQUIRE(is_prime(sub3, S(3)));

  REQUIRE_FALSE(is_semiprime(null2, zero));
  REQUIRE(is_semiprime(null2, S(2)));
  REQUIRE(is_semiprime(sub3, S(3)));

  REQUIRE(is_strongly_irreducible(null2, zero));
  REQUIRE(is_strongly_irreducible(null2, S(2)));
  REQUIRE(is_strongly_irreducible(sub3, S(3)));

  REQUIRE_FALSE(is_quasi_prime(null2, zero));
  REQUIRE(is_quasi_prime(null2, S(2)));
  REQUIRE(is_quasi_semiprime(sub3, S(3)));

  REQUIRE(is_minimal_ideal(null2, zero));
  REQUIRE_FALSE(is_minimal_ideal(null2, S(2)));
  REQUIRE(is_minimal_ideal(sub3, S(3)));

  REQUIRE(is_fully_prime(sub3));
  REQUIRE_FALSE(is_fully_prime(null2));
  REQUIRE_FALSE(is_fully_semiprime(null2));

  REQUIRE(ideals_totally_ordered(null2));
  REQUIRE(ideals_totally_ordered(sub3));

  REQUIRE(ideals_form_semilattice(sub3).holds);
  REQUIRE(ideals_form_semilattice(fixtures::trivial()).holds);
  auto sl = ideals_form_semilattice(null2);
  REQUIRE_FALSE(sl.holds);
  REQUIRE(sl.failed_law == "idempotence");
  REQUIRE(sl.witness == std::vector<ElementSet>{S(2)});

  using V = std::vector<ElementSet>;
  REQUIRE(minimal_primes_over(null2, zero) == V{S(2)});
  REQUIRE(minimal_primes_over(sub3, S(3)) == V{S(3)});
  REQUIRE(minimal_primes_over(null2, S(2)) == V{S(2)});
}

TEST_CASE("classifications reject sets that are not ideals", "[ideals]") {
  auto const sub3 = fixtures::sub3();
  auto const zero = ElementSet(3, {0});
  REQUIRE_THROWS_AS(is_prime(sub3, zero), DomainError);
  REQUIRE_THROWS_AS(is_semiprime(sub3, zero), DomainError);
  REQUIRE_THROWS_AS(is_strongly_irreducible(sub3, zero), DomainError);
  REQUIRE_THROWS_AS(is_quasi_prime(sub3, zero), DomainError);
  REQUIRE_THROWS_AS(is_minimal_ideal(sub3, zero), DomainError);
  REQUIRE_THROWS_AS(minimal_primes_over(sub3, zero), DomainError);
  REQUIRE_THROWS_AS(is_prime(sub3, ElementSet(3)), DomainError);
}

TEST_CASE("an order-4 LA-semigroup with incomparable ideals", "[ideals]") {
  std::optional<CayleyTable> found;
  for (auto const& t : test_util::canonical_la(4)) {
    if (!ideals_totally_ordered(t)) {
      found = t;
      break;
    }
  }
  REQUIRE(found);
  auto const ideals = all_ideals(*found, IdealKind::two_sided);
  bool incomparable = false;
  for (auto const& A : ideals)
    for (auto const& B : ideals)
      incomparable = incomparable || (!A.is_subset_of(B) && !B.is_subset_of(A));
  REQUIRE(incomparable);
}

TEST_CASE("ideal enumeration strategies agree with the naive filter",
          "[ideals][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& t : test_util::labelled_la(n)) {
      auto const r = naive::rows(t);
      auto const scan = all_ideals_by_subset_scan(t, IdealKind::two_sided);
      REQUIRE(scan == all_ideals_by_closure_unions(t, IdealKind::two_sided));
      REQUIRE(to_naive(scan) == naive::ideals(r));
      auto const left = all_ideals(t, IdealKind::left);
      REQUIRE(left == all_ideals_by_closure_unions(t, IdealKind::left));
      REQUIRE(to_naive(left) == naive::left_ideals(r));
      auto const right = all_ideals(t, IdealKind::right);
      REQUIRE(right == all_ideals_by_closure_unions(t, IdealKind::right));
      REQUIRE(to_naive(right) == naive::right_ideals(r));
    }
  }
  // Arbitrary magmas up to the subset-scan limit.
  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto const t = test_util::random_table(rng, 5 + trial % 8);
    for (auto kind : {IdealKind::left, IdealKind::right, IdealKind::two_sided}) {
      REQUIRE(all_ideals_by_subset_scan(t, kind)
              == all_ideals_by_closure_unions(t, kind));
    }
  }
}

TEST_CASE("classifications agree with the naive reference",
          "[ideals][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& t : test_util::canonical_la(n)) {
      auto const         r = naive::rows(t);
      IdealCatalog const cat(t);
      INFO(test_util::show(t));
      for (auto const& P : cat.two_sided()) {
        auto const p = to_naive(P);
        REQUIRE(cat.is_prime(P) == naive::prime(r, p));
        REQUIRE(cat.is_semiprime(P) == naive::semiprime(r, p));
        REQUIRE(cat.is_strongly_irreducible(P)
                == naive::strongly_irreducible(r, p));
        REQUIRE(cat.is_minimal(P) == naive::minimal(r, p));
      }
      for (auto const& P : cat.left()) {
        REQUIRE(cat.is_quasi_prime(P) == naive::quasi_prime(r, to_naive(P)));
      }
      REQUIRE(cat.is_fully_prime() == naive::fully_prime(r));
      REQUIRE(cat.totally_ordered() == naive::totally_ordered(r));
    }
  }
}

TEST_CASE("set-theoretic facts about ideals of LA-semigroups",
          "[ideals][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& t : test_util::canonical_la(n)) {
      IdealCatalog const cat(t);
      auto const         p = profile(t);
      INFO(test_util::show(t));
      for (auto const& P : cat.two_sided()) {
        REQUIRE(cat.is_prime(P)
                == (cat.is_semiprime(P) && cat.is_strongly_irreducible(P)));
      }
      for (auto const& A : cat.two_sided()) {
        for (auto const& B : cat.two_sided()) {
          REQUIRE(cat.contains(A & B, IdealKind::two_sided));
          REQUIRE(cat.contains(A | B, IdealKind::two_sided));
        }
      }
      if (p.left_identity || p.is_regular) {
        for (auto const& I : cat.right()) {
          REQUIRE(cat.contains(I, IdealKind::two_sided));
        }
      }
      if (p.is_regular) {
        for (auto const& P : cat.right())
          for (auto const& Q : cat.left())
            REQUIRE(subset_product(t, P, Q) == (P & Q));
      }
      if (p.left_identity) {
        Element const e = *p.left_identity;
        for (auto const& I : cat.right()) {
          REQUIRE(cat.contains(subset_product(t, I, I), IdealKind::two_sided));
        }
        for (auto const& I : cat.left()) {
          for (Element a = 0; a < t.order(); ++a) {
            REQUIRE(cat.contains(element_times(t, a, I), IdealKind::left));
          }
        }
        for (auto const& I : cat.two_sided()) {
          if (I.is_full()) {
            continue;
          }
          REQUIRE_FALSE(I.contains(e));
          I.for_each([&](Element a) {
            for (Element x = 0; x < t.order(); ++x) {
              REQUIRE(t(a, x) != e);
            }
          });
        }
        for (Element a = 0; a < t.order(); ++a) {
          auto const Sa = principal_left_ideal(t, a);
          REQUIRE(Sa.contains(a));
          REQUIRE(cat.contains(Sa, IdealKind::left));
        }
      }
    }
  }
}

TEST_CASE("generated left ideal is a closure operator",
          "[ideals][property]") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t const n = 1 + trial % 6;
    auto const        t = test_util::random_table(rng, n);
    std::uniform_int_distribution<std::uint64_t> pick(
        1, ElementSet::full_mask(n));
    ElementSet const A(n, pick(rng));
    ElementSet const B = A | ElementSet(n, pick(rng));
    auto const       cA = generated_left_ideal(t, A);
    REQUIRE(A.is_subset_of(cA));
    REQUIRE(cA.is_subset_of(generated_left_ideal(t, B)));
    REQUIRE(generated_left_ideal(t, cA) == cA);
    REQUIRE(is_left_ideal(t, cA));
    auto const naive_closure
        = naive::generated_left_ideal(naive::rows(t), to_naive(A));
    REQUIRE(to_naive(cA) == naive_closure);
  }
}

TEST_CASE("analysis records", "[ideals]") {
  auto const a = analyze_ideals(fixtures::null2());
  REQUIRE(a.ideals.size() == 2);
  auto const& zero = a.ideals[0];
  REQUIRE(zero.carrier == ElementSet(2, {0}));
  REQUIRE(zero.is_two_sided);
  REQUIRE(zero.is_proper);
  REQUIRE_FALSE(zero.prime);
  REQUIRE_FALSE(zero.semiprime);
  REQUIRE(zero.strongly_irreducible);
  REQUIRE(zero.minimal);
  REQUIRE(zero.idempotent);
  REQUIRE_FALSE(a.ideals[1].idempotent);
  REQUIRE(a.totally_ordered);
  REQUIRE_FALSE(a.semilattice);

  auto const b = analyze_ideals(fixtures::sub3());
  REQUIRE(b.ideals.size() == 1);
  REQUIRE(b.fully_prime);
  for (auto const& r : b.ideals) {
    if (r.prime) {
      REQUIRE(r.semiprime);
      REQUIRE(r.strongly_irreducible);
    }
    REQUIRE(r.is_two_sided == (r.is_left && r.is_right));
  }
}
