#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "agwb/cayley_table.hpp"
#include "agwb/element_set.hpp"
#include "agwb/ideals.hpp"
#include "agwb/properties.hpp"

namespace agwb {

  // Everything a checker needs about one model, computed once and shared by
  // all statements.
  struct Model {
    explicit Model(CayleyTable t);

    CayleyTable     table;
    PropertyProfile profile;
    IdealCatalog    ideals;
  };

  // Which models a clause is about.
  enum class Scope {
    any,
    left_identity,
    regular,
    right_invertible,
    globally_idempotent,
  };

  char const* scope_name(Scope scope);
  bool        in_scope(Scope scope, PropertyProfile const& profile);

  using WitnessValue = std::variant<Element, ElementSet>;

  // Named elements and subsets instantiating a failed (or, for existential
  // clauses, a satisfied) condition, in the order the checker bound them.
  using Witness = std::vector<std::pair<std::string, WitnessValue>>;

  enum class Quantifier { universal, existential };

  // One independently reported part of a statement, e.g. one direction of a
  // biconditional.
  struct Clause {
    std::string id;
    Scope       scope = Scope::any;
    Quantifier  quantifier = Quantifier::universal;
    // Universal: a witness of failure, or nothing if the model satisfies the
    // clause. Existential: a witness of success, or nothing.
    std::function<std::optional<Witness>(Model const&)> check;
  };

  struct StatementCheck {
    std::string         id;
    std::string         reference;  // e.g. "Theorem 2"
    std::string         claim;      // the checked claim in symbols
    std::vector<Clause> clauses;
  };

  // The fixed statement list; ids are stable.
  std::vector<StatementCheck> const& registry();

  // Throws UsageError for an unknown id.
  StatementCheck const& find_statement(std::string const& id);

  struct Counterexample {
    std::string statement_id;
    std::string clause_id;
    CayleyTable model;
    Witness     witness;
  };

  // Re-runs the clause on the stored model; true iff it fails again with the
  // same witness.
  bool replay(Counterexample const& cx);

  enum class Verdict { verified, counterexample, skipped };

  struct ClauseReport {
    std::string              id;
    Scope                    scope = Scope::any;
    Quantifier               quantifier = Quantifier::universal;
    Verdict                  verdict = Verdict::skipped;
    std::size_t              max_order = 0;
    std::vector<std::size_t> orders;  // orders with at least one model in scope
    std::size_t              models_checked = 0;
    std::vector<Counterexample> counterexamples;
    // Existential clauses: the first model satisfying the clause.
    std::optional<Counterexample> example;
    std::string                   note;
  };

  struct StatementReport {
    std::string               id;
    std::string               reference;
    std::string               claim;
    Verdict                   verdict = Verdict::skipped;
    std::size_t               max_order = 0;
    std::vector<std::size_t>  orders;
    std::size_t               models_checked = 0;
    std::vector<ClauseReport> clauses;

    // First counterexample over all clauses, if any.
    Counterexample const* counterexample() const;
  };

  // "VERIFIED(4)", "COUNTEREXAMPLE", "SKIPPED"
  std::string verdict_string(Verdict v, std::size_t max_order);

  struct RunOptions {
    bool collect_all = false;
    int  jobs = 0;
  };

  // Models of one order, in the order they are scanned.
  struct ModelBatch {
    std::size_t        order = 0;
    std::vector<Model> models;
  };

  // Scans the batches in order. Clauses stop at their first counterexample
  // unless options.collect_all is set.
  StatementReport run_statement(StatementCheck const&      check,
                                std::span<ModelBatch const> batches,
                                std::size_t                max_order,
                                RunOptions                 options = {});

  struct SuiteReport {
    std::size_t                  max_order = 0;
    bool                         up_to_iso = true;
    std::vector<StatementReport> statements;
    std::size_t                  verified = 0;
    std::size_t                  counterexamples = 0;
    std::size_t                  skipped = 0;
    double                       elapsed_ms = 0;
  };

  struct SuiteOptions {
    RunOptions run;
    // Check every labelled model instead of one per isomorphism class.
    bool labelled = false;
  };

  // All LA-semigroups of orders 1..max_order, canonical representatives
  // unless labelled.
  std::vector<ModelBatch> model_batches(std::size_t max_order,
                                        bool        labelled,
                                        int         jobs = 0);

  // Runs the statements with the given ids (all if empty) in registry order.
  // Throws UsageError for max_order 0 or an unknown id.
  SuiteReport run_suite(std::size_t                     max_order,
                        std::vector<std::string> const& only = {},
                        SuiteOptions                    options = {});

  SuiteReport run_suite(std::span<ModelBatch const>     batches,
                        std::size_t                     max_order,
                        std::vector<std::string> const& only = {},
                        SuiteOptions                    options = {});

  // 0 if every statement is VERIFIED or SKIPPED, 2 otherwise.
  int exit_code(SuiteReport const& report);

}  // namespace agwb
