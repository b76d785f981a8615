#pragma once

#include <string>

#include <json.hpp>

#include "agwb/cayley_table.hpp"
#include "agwb/enumerate.hpp"
#include "agwb/ideals.hpp"
#include "agwb/properties.hpp"
#include "agwb/verify.hpp"

namespace agwb {

  nlohmann::ordered_json to_json(PropertyProfile const& p);
  // Profile plus the least violating tuple of each law and regularity
  // witnesses.
  nlohmann::ordered_json check_json(CayleyTable const& t);
  nlohmann::ordered_json to_json(ElementSet const& s);
  nlohmann::ordered_json to_json(IdealAnalysis const& a);
  nlohmann::ordered_json to_json(CountSummary const& c);
  nlohmann::ordered_json to_json(Witness const& w);
  nlohmann::ordered_json to_json(Counterexample const& cx);
  nlohmann::ordered_json to_json(SuiteReport const& r);

  // Inverse of to_json(Counterexample) given the element order.
  Counterexample counterexample_from_json(nlohmann::ordered_json const& j,
                                          std::string const& statement_id);

  // Human-readable renderings.
  std::string check_text(CayleyTable const& t);
  std::string to_text(IdealAnalysis const& a);
  std::string to_text(SuiteReport const& r);
  std::string to_text(Witness const& w);

  // "la medial left_identity=0 regular ..." used as the comment header of
  // emitted tables.
  std::string profile_tags(PropertyProfile const& p);

}  // namespace agwb
