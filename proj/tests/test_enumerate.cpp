#include <algorithm>
#include <set>

#include <catch_amalgamated.hpp>

#include "agwb/canonical.hpp"
#include "agwb/enumerate.hpp"
#include "agwb/errors.hpp"
#include "agwb/properties.hpp"
#include "reference/naive.hpp"
#include "test_util.hpp"

using namespace agwb;

namespace {
  std::vector<CayleyTable> filtered(std::vector<CayleyTable> const& xs,
                                    Filters const&                  f) {
    std::vector<CayleyTable> out;
    std::copy_if(xs.begin(), xs.end(), std::back_inserter(out),
                 [&](auto const& t) { return f.accepts(t); });
    return out;
  }

  std::vector<CayleyTable> canonical_forms(std::vector<CayleyTable> const& xs) {
    std::set<CayleyTable> forms;
    for (auto const& t : xs) {
      forms.insert(canonicalize(t).table);
    }
    return {forms.begin(), forms.end()};
  }

  std::vector<Filters> all_filter_combinations() {
    std::vector<Filters> out;
    for (int mask = 0; mask < 8; ++mask) {
      out.push_back(Filters{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0});
    }
    return out;
  }
}  // namespace

TEST_CASE("filter names", "[enumerate]") {
  Filters f;
  add_filter(f, "none");
  REQUIRE(f.none());
  add_filter(f, "left-identity");
  add_filter(f, "regular");
  REQUIRE(names_of(f) == std::vector<std::string>{"left-identity", "regular"});
  REQUIRE_THROWS_AS(add_filter(f, "unital"), UsageError);
  REQUIRE(filter_names().size() == 4);
}

TEST_CASE("degenerate orders", "[enumerate]") {
  REQUIRE_THROWS_AS(enumerate_la(0), DomainError);
  REQUIRE_THROWS_AS(root_task(0), DomainError);
  REQUIRE_THROWS_AS(root_task(17), UsageError);
  REQUIRE(enumerate_la(1) == std::vector<CayleyTable>{fixtures::trivial()});
  REQUIRE(count_la(1).raw_count == 1);
  REQUIRE(count_la(1).iso_count == 1);
}

TEST_CASE("enumeration matches brute force for small orders",
          "[enumerate][oracle]") {
  for (int n = 1; n <= 3; ++n) {
    auto const oracle = naive::brute_force_la(n);
    auto const found = enumerate_la(n);
    REQUIRE(found == oracle);
    auto const c = count_la(n);
    REQUIRE(c.raw_count == oracle.size());
    REQUIRE(c.iso_count == naive::count_orbits(oracle));
    for (auto const& f : all_filter_combinations()) {
      INFO("n=" << n << " filters=" << names_of(f).size());
      auto const expect = filtered(oracle, f);
      REQUIRE(enumerate_la(n, f) == expect);
      REQUIRE(enumerate_la(n, f, true) == canonical_forms(expect));
      REQUIRE(count_la(n, f).raw_count == expect.size());
      REQUIRE(count_la(n, f).iso_count == naive::count_orbits(expect));
    }
  }
  REQUIRE(count_la(2).raw_count == 6);
  REQUIRE(count_la(2).iso_count == 3);
  REQUIRE(count_la(3).raw_count == 105);
  REQUIRE(count_la(3).iso_count == 20);
}

TEST_CASE("order 4 classes and filters", "[enumerate]") {
  auto const labelled = test_util::labelled_la(4);
  REQUIRE(labelled.size() == 7336);
  auto const classes = test_util::canonical_la(4);
  REQUIRE(classes == canonical_forms(labelled));
  REQUIRE(classes.size() == 331);
  for (auto const& f : all_filter_combinations()) {
    // The left-identity anchor only changes how classes are reached.
    REQUIRE(enumerate_la(4, f, true) == canonical_forms(filtered(labelled, f)));
  }
}

TEST_CASE("split tasks partition the search", "[enumerate]") {
  auto const root = root_task(2);
  auto const kids = split_task(root, 0);
  REQUIRE(kids.size() <= 2);
  REQUIRE(kids.size() >= 1);
  for (auto const& k : kids) {
    REQUIRE(k.prefix.size() == 1);
  }
  REQUIRE(split_task(kids.front(), 0).size() == 1);

  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t depth : {0u, 2u, 5u}) {
      auto const               parent = root_task(n);
      std::vector<CayleyTable> all;
      for (auto const& child : split_task(parent, depth)) {
        search(child, [&](CayleyTable const& t) { all.push_back(t); });
      }
      std::vector<CayleyTable> whole;
      search(parent, [&](CayleyTable const& t) { whole.push_back(t); });
      REQUIRE(all == whole);
    }
  }

  auto complete = root_task(1);
  complete.prefix = {0};
  REQUIRE(complete.complete());
  REQUIRE(split_task(complete, 3).empty());
}

TEST_CASE("output is independent of threads and split depth",
          "[enumerate]") {
  for (std::size_t n : {3u, 4u}) {
    for (bool iso : {false, true}) {
      auto const base = enumerate_la(n, {}, iso, {1, 0});
      for (int jobs : {1, 2, 4}) {
        for (std::size_t depth : {0u, 1u, 4u, 9u}) {
          REQUIRE(enumerate_la(n, {}, iso, {jobs, depth}) == base);
        }
      }
      std::vector<CayleyTable> streamed;
      enumerate_la(n, {}, iso, {3, 0},
                   [&](CayleyTable const& t) { streamed.push_back(t); });
      REQUIRE(streamed == base);
    }
  }
}

TEST_CASE("every emitted table is an LA-semigroup", "[enumerate][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const tables = test_util::labelled_la(n);
    REQUIRE(std::is_sorted(tables.begin(), tables.end()));
    REQUIRE(std::adjacent_find(tables.begin(), tables.end()) == tables.end());
    for (auto const& t : tables) {
      REQUIRE(is_left_invertive(t).holds);
      REQUIRE(is_medial(t).holds);
    }
  }
}
