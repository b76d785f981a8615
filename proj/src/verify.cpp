#include "agwb/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <set>

#include "agwb/enumerate.hpp"
#include "agwb/errors.hpp"

namespace agwb {

  Model::Model(CayleyTable t)
      : table(t), profile(agwb::profile(t)), ideals(std::move(t)) {}

  char const* scope_name(Scope scope) {
    switch (scope) {
      case Scope::any:
        return "any";
      case Scope::left_identity:
        return "left-identity";
      case Scope::regular:
        return "regular";
      case Scope::right_invertible:
        return "right-invertible";
      case Scope::globally_idempotent:
        return "S=S^2";
    }
    return "?";
  }

  bool in_scope(Scope scope, PropertyProfile const& p) {
    switch (scope) {
      case Scope::any:
        return true;
      case Scope::left_identity:
        return p.left_identity.has_value();
      case Scope::regular:
        return p.is_regular;
      case Scope::right_invertible:
        return p.is_right_invertible;
      case Scope::globally_idempotent:
        return p.is_globally_idempotent;
    }
    return false;
  }

  std::string verdict_string(Verdict v, std::size_t max_order) {
    switch (v) {
      case Verdict::verified:
        return "VERIFIED(" + std::to_string(max_order) + ")";
      case Verdict::counterexample:
        return "COUNTEREXAMPLE";
      case Verdict::skipped:
        return "SKIPPED";
    }
    return "?";
  }

  Counterexample const* StatementReport::counterexample() const {
    for (auto const& c : clauses) {
      if (!c.counterexamples.empty()) {
        return &c.counterexamples.front();
      }
    }
    return nullptr;
  }

  namespace {

    Clause const& find_clause(StatementCheck const& s, std::string const& id) {
      for (auto const& c : s.clauses) {
        if (c.id == id) {
          return c;
        }
      }
      throw UsageError("statement '" + s.id + "' has no clause '" + id + "'");
    }

    int thread_count(int jobs) {
      return jobs > 0 ? jobs : omp_get_max_threads();
    }

    // Evaluates the clause on every in-scope model of a batch. Results are
    // indexed like batch.models; out-of-scope entries stay empty.
    std::vector<std::optional<Witness>>
    evaluate(Clause const& clause, ModelBatch const& batch, int jobs) {
      std::size_t const                   count = batch.models.size();
      std::vector<std::optional<Witness>> results(count);
      std::exception_ptr                  error;
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count(jobs))
      for (std::size_t i = 0; i < count; ++i) {
        auto const& model = batch.models[i];
        if (!in_scope(clause.scope, model.profile)) {
          continue;
        }
        try {
          results[i] = clause.check(model);
        } catch (...) {
#pragma omp critical(agwb_verify_error)
          if (!error) {
            error = std::current_exception();
          }
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
      return results;
    }

    ClauseReport run_clause(StatementCheck const&      statement,
                            Clause const&              clause,
                            std::span<ModelBatch const> batches,
                            std::size_t                max_order,
                            RunOptions const&          options) {
      ClauseReport report;
      report.id = clause.id;
      report.scope = clause.scope;
      report.quantifier = clause.quantifier;
      report.max_order = max_order;
      bool const existential = clause.quantifier == Quantifier::existential;
      bool       done = false;

      for (auto const& batch : batches) {
        if (done) {
          break;
        }
        auto const results = evaluate(clause, batch, options.jobs);
        bool       any_in_scope = false;
        for (std::size_t i = 0; i < batch.models.size() && !done; ++i) {
          auto const& model = batch.models[i];
          if (!in_scope(clause.scope, model.profile)) {
            continue;
          }
          any_in_scope = true;
          ++report.models_checked;
          if (!results[i]) {
            continue;
          }
          Counterexample found{
              statement.id, clause.id, model.table, *results[i]};
          if (existential) {
            report.example = std::move(found);
            done = true;
          } else {
            report.counterexamples.push_back(std::move(found));
            done = !options.collect_all;
          }
        }
        if (any_in_scope) {
          report.orders.push_back(batch.order);
        }
      }

      if (existential) {
        if (report.example) {
          report.verdict = Verdict::verified;
          report.note = "witness found at order "
                        + std::to_string(report.example->model.order());
        } else {
          report.verdict = Verdict::skipped;
          report.note = report.models_checked == 0
                            ? "empty scope"
                            : "no witness up to order "
                                  + std::to_string(max_order);
        }
      } else if (!report.counterexamples.empty()) {
        report.verdict = Verdict::counterexample;
      } else if (report.models_checked == 0) {
        report.verdict = Verdict::skipped;
        report.note = "empty scope";
      } else {
        report.verdict = Verdict::verified;
      }
      return report;
    }

  }  // namespace

  bool replay(Counterexample const& cx) {
    auto const&  statement = find_statement(cx.statement_id);
    auto const&  clause = find_clause(statement, cx.clause_id);
    Model const  model(cx.model);
    if (!is_left_invertive(model.table)
        || !in_scope(clause.scope, model.profile)) {
      return false;
    }
    auto const again = clause.check(model);
    return again.has_value() && *again == cx.witness;
  }

  StatementReport run_statement(StatementCheck const&      check,
                                std::span<ModelBatch const> batches,
                                std::size_t                max_order,
                                RunOptions                 options) {
    StatementReport report;
    report.id = check.id;
    report.reference = check.reference;
    report.claim = check.claim;
    report.max_order = max_order;
    std::set<std::size_t> orders;
    for (auto const& clause : check.clauses) {
      report.clauses.push_back(
          run_clause(check, clause, batches, max_order, options));
      auto const& c = report.clauses.back();
      orders.insert(c.orders.begin(), c.orders.end());
      report.models_checked = std::max(report.models_checked, c.models_checked);
    }
    report.orders.assign(orders.begin(), orders.end());

    auto has = [&report](Verdict v) {
      return std::any_of(report.clauses.begin(),
                         report.clauses.end(),
                         [v](auto const& c) { return c.verdict == v; });
    };
    if (has(Verdict::counterexample)) {
      report.verdict = Verdict::counterexample;
    } else if (has(Verdict::verified)) {
      report.verdict = Verdict::verified;
    } else {
      report.verdict = Verdict::skipped;
    }
    return report;
  }

  std::vector<ModelBatch> model_batches(std::size_t max_order,
                                        bool        labelled,
                                        int         jobs) {
    std::vector<ModelBatch> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto const tables
          = enumerate_la(n, Filters{}, !labelled, EnumerationOptions{jobs, 0});
      std::vector<std::optional<Model>> built(tables.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(thread_count(jobs))
      for (std::size_t i = 0; i < tables.size(); ++i) {
        built[i].emplace(tables[i]);
      }
      ModelBatch batch;
      batch.order = n;
      batch.models.reserve(built.size());
      for (auto& m : built) {
        batch.models.push_back(std::move(*m));
      }
      out.push_back(std::move(batch));
    }
    return out;
  }

  namespace {
    std::vector<StatementCheck const*>
    select(std::vector<std::string> const& only) {
      std::vector<StatementCheck const*> out;
      if (only.empty()) {
        for (auto const& s : registry()) {
          out.push_back(&s);
        }
        return out;
      }
      for (auto const& id : only) {
        find_statement(id);  // validates
      }
      for (auto const& s : registry()) {
        if (std::find(only.begin(), only.end(), s.id) != only.end()) {
          out.push_back(&s);
        }
      }
      return out;
    }
  }  // namespace

  SuiteReport run_suite(std::span<ModelBatch const>     batches,
                        std::size_t                     max_order,
                        std::vector<std::string> const& only,
                        SuiteOptions                    options) {
    auto const start = std::chrono::steady_clock::now();
    auto const selected = select(only);
    SuiteReport report;
    report.max_order = max_order;
    report.up_to_iso = !options.labelled;
    for (auto const* s : selected) {
      report.statements.push_back(
          run_statement(*s, batches, max_order, options.run));
      switch (report.statements.back().verdict) {
        case Verdict::verified:
          ++report.verified;
          break;
        case Verdict::counterexample:
          ++report.counterexamples;
          break;
        case Verdict::skipped:
          ++report.skipped;
          break;
      }
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
  }

  SuiteReport run_suite(std::size_t                     max_order,
                        std::vector<std::string> const& only,
                        SuiteOptions                    options) {
    if (max_order == 0) {
      throw UsageError("max order must be at least 1");
    }
    select(only);  // reject unknown ids before enumerating
    auto const start = std::chrono::steady_clock::now();
    auto const batches
        = model_batches(max_order, options.labelled, options.run.jobs);
    auto report = run_suite(batches, max_order, only, options);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
  }

  int exit_code(SuiteReport const& report) {
    return report.counterexamples == 0 ? 0 : 2;
  }

}  // namespace agwb
