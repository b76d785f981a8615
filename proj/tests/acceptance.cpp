// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "agwb/canonical.hpp"
#include "agwb/enumerate.hpp"
#include "agwb/ideals.hpp"
#include "agwb/properties.hpp"
#include "agwb/report_json.hpp"
#include "agwb/table_io.hpp"
#include "agwb/verify.hpp"
#include "reference/naive.hpp"

using namespace agwb;

namespace {

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok && pass) {
        pass = false;
        detail = what;
      }
    }
  };

  int failures = 0;

  void report(int number, char const* name, std::function<Outcome()> body) {
    auto const start = Clock::now();
    Outcome    o;
    try {
      o = body();
    } catch (std::exception const& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %d %s (%.2fs): %s\n",
                o.pass ? "PASS" : "FAIL",
                number,
                name,
                seconds_since(start),
                o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }

  std::vector<CayleyTable> labelled(std::size_t n) {
    return enumerate_la(n, {}, false);
  }

  Permutation random_perm(std::mt19937& rng, std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), Element{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }

  naive::Set to_naive(ElementSet const& s) {
    auto m = s.members();
    return naive::Set(m.begin(), m.end());
  }

  Outcome oracle_equivalence() {
    Outcome     o;
    auto const  start = Clock::now();
    std::string counts;
    for (int n : {2, 3}) {
      auto const oracle = naive::brute_force_la(n);
      auto const found = enumerate_la(n);
      o.require(found == oracle,
                "order " + std::to_string(n) + " differs from brute force");
      auto const c = count_la(n);
      auto const orbits = naive::count_orbits(oracle);
      o.require(c.raw_count == oracle.size() && c.iso_count == orbits,
                "order " + std::to_string(n) + " counts differ");
      counts += "n=" + std::to_string(n) + " labelled="
                + std::to_string(oracle.size())
                + " classes=" + std::to_string(orbits) + " ";
    }
    double const elapsed = seconds_since(start);
    o.require(elapsed < 10.0, "took " + std::to_string(elapsed) + "s");
    if (o.pass) {
      o.detail = counts + "(16 and 19683 candidates scanned)";
    }
    return o;
  }

  Outcome medial_consequence() {
    Outcome     o;
    auto const  start = Clock::now();
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& t : labelled(n)) {
        ++checked;
        o.require(is_medial(t).holds, "non-medial model:\n" + serialize_table(t));
      }
    }
    double const elapsed = seconds_since(start);
    o.require(elapsed < 300.0, "took " + std::to_string(elapsed) + "s");
    if (o.pass) {
      o.detail = std::to_string(checked) + " labelled models, all medial";
    }
    return o;
  }

  Outcome identities() {
    Outcome     o;
    std::size_t with_left = 0;
    std::size_t with_right = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& t : labelled(n)) {
        auto const left = left_identities(t);
        o.require(left.size() <= 1,
                  "two left identities:\n" + serialize_table(t));
        with_left += left.empty() ? 0 : 1;
        auto const right = right_identities(t);
        if (right.empty()) {
          continue;
        }
        ++with_right;
        bool const monoid = is_commutative(t).holds && is_associative(t).holds
                            && left == right && right.size() == 1;
        o.require(monoid,
                  "right identity without commutative monoid:\n"
                      + serialize_table(t));
      }
    }
    if (o.pass) {
      o.detail = std::to_string(with_left) + " models with a left identity, "
                 + std::to_string(with_right)
                 + " with a right identity, all commutative monoids";
    }
    return o;
  }

  std::string verdict_line(SuiteReport const& r) {
    std::string out;
    for (auto const& s : r.statements) {
      out += s.id + "=" + verdict_string(s.verdict, s.max_order) + " ";
    }
    return out;
  }

  Outcome definitional_suite(std::vector<ModelBatch> const& batches) {
    std::vector<std::string> const ids{"prop-4",
                                       "misc-4",
                                       "lemma-4",
                                       "lemma-5",
                                       "lemma-6",
                                       "prop-2",
                                       "lemma-2",
                                       "lemma-3",
                                       "lemma-1",
                                       "misc-5"};
    Outcome    o;
    auto const r = run_suite(batches, 4, ids);
    o.require(r.statements.size() == ids.size(), "missing statements");
    for (auto const& s : r.statements) {
      o.require(s.verdict == Verdict::verified && s.max_order == 4
                    && s.counterexample() == nullptr,
                s.id + " is " + verdict_string(s.verdict, s.max_order));
    }
    if (o.pass) {
      o.detail = verdict_line(r);
    }
    return o;
  }

  Outcome recorded_outcome_suite(std::vector<ModelBatch> const& batches) {
    std::vector<std::string> const ids{"prop-3",
                                       "thm-1",
                                       "thm-2",
                                       "thm-3",
                                       "cor-1",
                                       "thm-4",
                                       "thm-5",
                                       "thm-6",
                                       "thm-7",
                                       "thm-8",
                                       "thm-9",
                                       "misc-3",
                                       "remark-2"};
    Outcome o;
    auto    strip = [](SuiteReport const& r) {
      auto j = to_json(r);
      j.erase("elapsed_ms");
      return j.dump();
    };
    SuiteOptions one;
    one.run.jobs = 1;
    SuiteOptions several;
    several.run.jobs = 4;
    auto const first = run_suite(4, ids, one);
    o.require(first.statements.size() == ids.size(), "missing statements");
    for (auto const& s : first.statements) {
      for (auto const& c : s.clauses) {
        for (auto const& cx : c.counterexamples) {
          o.require(replay(cx), cx.clause_id + " witness does not replay");
          auto const back = counterexample_from_json(to_json(cx), s.id);
          o.require(replay(back),
                    cx.clause_id + " witness does not replay from JSON");
        }
      }
      if (s.verdict == Verdict::counterexample) {
        o.require(s.counterexample() != nullptr, s.id + " has no witness");
      }
    }
    auto const reference = strip(first);
    o.require(strip(run_suite(4, ids, several)) == reference,
              "report differs between --jobs 1 and 4");
    o.require(strip(run_suite(batches, 4, ids, one)) == reference,
              "report differs between runs");
    if (o.pass) {
      o.detail = verdict_line(first);
    }
    return o;
  }

  Outcome fixture_regression() {
    Outcome o;
    auto const sub3 = read_table_file(AGWB_FIXTURES "/sub3.tbl");
    auto const null2 = read_table_file(AGWB_FIXTURES "/null2.tbl");
    o.require(sub3 == fixtures::sub3() && null2 == fixtures::null2(),
              "fixture files do not match the built-in tables");

    auto const r3 = naive::rows(sub3);
    auto const p3 = profile(sub3);
    auto const a3 = analyze_ideals(sub3);
    auto const S3 = ElementSet::full(3);
    o.require(p3.is_la && naive::left_invertive(r3), "SUB3 is_la");
    o.require(p3.left_identity == Element{0}
                  && naive::left_identities(r3) == naive::Set{0},
              "SUB3 left identity");
    o.require(p3.is_regular && naive::regular(r3), "SUB3 regular");
    o.require(p3.is_right_invertible && naive::right_invertible(r3),
              "SUB3 right invertible");
    o.require(!p3.is_associative && !naive::associative(r3),
              "SUB3 non-associative");
    o.require(!p3.is_commutative && !naive::commutative(r3),
              "SUB3 non-commutative");
    o.require(a3.ideals.size() == 1 && a3.ideals[0].carrier == S3
                  && naive::ideals(r3) == std::vector<naive::Set>{{0, 1, 2}},
              "SUB3 single ideal S");
    o.require(a3.fully_prime && naive::fully_prime(r3), "SUB3 fully prime");

    auto const r2 = naive::rows(null2);
    auto const p2 = profile(null2);
    auto const a2 = analyze_ideals(null2);
    auto const zero = ElementSet(2, {0});
    o.require(p2.is_la && naive::left_invertive(r2), "NULL2 is_la");
    o.require(!p2.left_identity && naive::left_identities(r2).empty(),
              "NULL2 no left identity");
    o.require(!p2.is_regular && !naive::regular(r2), "NULL2 not regular");
    std::vector<ElementSet> two_sided;
    for (auto const& rec : a2.ideals) {
      if (rec.is_two_sided) {
        two_sided.push_back(rec.carrier);
      }
    }
    o.require(two_sided == std::vector<ElementSet>{zero, ElementSet::full(2)}
                  && naive::ideals(r2)
                         == std::vector<naive::Set>{{0}, {0, 1}},
              "NULL2 ideals {0} and S");
    o.require(!is_semiprime(null2, zero) && !naive::semiprime(r2, {0}),
              "NULL2 {0} not semiprime");
    o.require(is_strongly_irreducible(null2, zero)
                  && naive::strongly_irreducible(r2, {0}),
              "NULL2 {0} strongly irreducible");
    o.require(!a2.fully_prime && !naive::fully_prime(r2),
              "NULL2 not fully prime");
    o.require(a2.totally_ordered && naive::totally_ordered(r2),
              "NULL2 ideals totally ordered");
    if (o.pass) {
      o.detail = "SUB3 and NULL2 analyses match the naive reference";
    }
    return o;
  }

  Outcome closure_laws() {
    Outcome      o;
    std::mt19937 rng(20261016);
    auto const   la4 = labelled(4);
    std::uniform_int_distribution<std::size_t> pick_la(0, la4.size() - 1);
    int const                                  pairs = 1000;
    for (int trial = 0; trial < pairs && o.pass; ++trial) {
      // Alternate arbitrary magmas of order 1..6 with LA models of order 4.
      CayleyTable t = fixtures::trivial();
      if (trial % 2 == 0) {
        std::size_t const                  n = 1 + (trial / 2) % 6;
        std::uniform_int_distribution<int> cell(0, static_cast<int>(n) - 1);
        std::vector<std::uint8_t>          entries(n * n);
        for (auto& x : entries) {
          x = static_cast<std::uint8_t>(cell(rng));
        }
        t = CayleyTable(n, entries);
      } else {
        t = la4[pick_la(rng)];
      }
      std::size_t const                             n = t.order();
      std::uniform_int_distribution<std::uint64_t> mask(
          1, ElementSet::full_mask(n));
      ElementSet const A(n, mask(rng));
      ElementSet const B = A | ElementSet(n, mask(rng));
      for (auto kind : {IdealKind::left, IdealKind::right, IdealKind::two_sided}) {
        auto const cA = generated_ideal(t, A, kind);
        auto const cB = generated_ideal(t, B, kind);
        std::string const where
            = "trial " + std::to_string(trial) + "\n" + serialize_table(t);
        o.require(A.is_subset_of(cA), "not extensive, " + where);
        o.require(cA.is_subset_of(cB), "not monotone, " + where);
        o.require(generated_ideal(t, cA, kind) == cA,
                  "not idempotent, " + where);
        o.require(is_ideal(t, cA, kind), "not an ideal, " + where);
      }
      o.require(to_naive(generated_left_ideal(t, A))
                    == naive::generated_left_ideal(naive::rows(t),
                                                   to_naive(A)),
                "left closure differs from the naive reference");
    }
    if (o.pass) {
      o.detail = std::to_string(pairs)
                 + " (table, seed) pairs, left/right/two-sided closures";
    }
    return o;
  }

  Outcome isomorphism() {
    Outcome                  o;
    std::mt19937             rng(4242);
    std::vector<CayleyTable> pool;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const ts = labelled(n);
      pool.insert(pool.end(), ts.begin(), ts.end());
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int const                                  relabelings = 500;
    for (int trial = 0; trial < relabelings; ++trial) {
      auto const& t = pool[pick(rng)];
      auto const  form = canonicalize(t);
      o.require(canonicalize(form.table) == form,
                "not idempotent on\n" + serialize_table(t));
      auto const moved = relabel(t, random_perm(rng, t.order()));
      o.require(canonicalize(moved) == form,
                "not constant on the orbit of\n" + serialize_table(t));
    }
    std::string counts;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const orbits = naive::count_orbits(labelled(n));
      auto const classes = enumerate_la(n, {}, true).size();
      o.require(classes == orbits,
                "order " + std::to_string(n) + ": " + std::to_string(classes)
                    + " classes vs " + std::to_string(orbits) + " orbits");
      counts += " n=" + std::to_string(n) + ":" + std::to_string(classes);
    }
    if (o.pass) {
      o.detail = std::to_string(relabelings)
                 + " relabelings; class counts match orbits" + counts;
    }
    return o;
  }

}  // namespace

int main() {
  auto const batches = model_batches(4, false);
  report(1, "oracle-equivalence", oracle_equivalence);
  report(2, "medial-consequence", medial_consequence);
  report(3, "identity-elements", identities);
  report(4, "definitional-suite", [&] { return definitional_suite(batches); });
  report(5, "recorded-outcome-suite",
         [&] { return recorded_outcome_suite(batches); });
  report(6, "fixture-regression", fixture_regression);
  report(7, "closure-operator-laws", closure_laws);
  report(8, "isomorphism-machinery", isomorphism);
  return failures == 0 ? 0 : 1;
}
