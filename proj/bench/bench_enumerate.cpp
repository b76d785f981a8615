// Serial search versus the OpenMP driver, plus the brute-force reference.
//
//   bench_enumerate [max-order=4] [repeats=3]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "agwb/enumerate.hpp"
#include "agwb/verify.hpp"
#include "reference/naive.hpp"

namespace {

  double best_ms(int repeats, std::function<std::size_t()> const& f,
                 std::size_t& result) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
      auto const start = std::chrono::steady_clock::now();
      result = f();
      double const ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
      best = ms < best ? ms : best;
    }
    return best;
  }

  void row(char const* what, std::size_t n, std::size_t count, double ms) {
    std::printf("%-28s n=%zu  %10zu  %10.2f ms\n", what, n, count, ms);
  }

}  // namespace

int main(int argc, char** argv) {
  std::size_t const max_order = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
  int const         repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  int const         threads = omp_get_max_threads();
  std::printf("threads: %d\n", threads);

  for (std::size_t n = 1; n <= max_order; ++n) {
    for (bool iso : {false, true}) {
      std::size_t count = 0;
      double      ms = best_ms(repeats,
                          [&] {
                            std::size_t k = 0;
                            auto        task = agwb::root_task(n, {}, iso);
                            agwb::search(task, [&](auto const&) { ++k; });
                            return k;
                          },
                          count);
      row(iso ? "serial search, classes" : "serial search, labelled",
          n, count, ms);
      ms = best_ms(repeats,
                   [&] {
                     return agwb::enumerate_la(n, {}, iso, {threads, 0}).size();
                   },
                   count);
      row(iso ? "parallel driver, classes" : "parallel driver, labelled",
          n, count, ms);
    }
  }

  for (int n = 2; n <= 3; ++n) {
    std::size_t count = 0;
    double ms = best_ms(1, [&] { return naive::brute_force_la(n).size(); }, count);
    row("brute force", static_cast<std::size_t>(n), count, ms);
  }

  std::size_t const suite_order = max_order < 4 ? max_order : 4;
  for (int jobs : {1, threads}) {
    std::size_t count = 0;
    agwb::SuiteOptions options;
    options.run.jobs = jobs;
    double const ms = best_ms(1,
                              [&] {
                                return agwb::run_suite(suite_order, {}, options)
                                    .statements.size();
                              },
                              count);
    std::string const label = "verify suite, jobs=" + std::to_string(jobs);
    row(label.c_str(), suite_order, count, ms);
  }
  return 0;
}
