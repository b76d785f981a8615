#include "agwb/report_json.hpp"

#include <sstream>

#include "agwb/errors.hpp"
#include "agwb/table_io.hpp"

namespace agwb {

  using nlohmann::ordered_json;

  namespace {

    ordered_json optional_element(std::optional<Element> const& x) {
      return x ? ordered_json(*x) : ordered_json(nullptr);
    }

    template <std::size_t N>
    ordered_json violation(LawCheck<N> const& c) {
      if (c.holds) {
        return nullptr;
      }
      return ordered_json(*c.violation);
    }

    std::string flag(bool b) {
      return b ? "true" : "false";
    }

    template <std::size_t N>
    std::string tuple_text(std::array<Element, N> const& xs) {
      std::string out = "(";
      for (std::size_t i = 0; i < N; ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(xs[i]);
      }
      return out + ")";
    }

    template <std::size_t N>
    std::string law_text(LawCheck<N> const& c) {
      return c.holds ? "true" : "false, violated at " + tuple_text(*c.violation);
    }

  }  // namespace

  ordered_json to_json(PropertyProfile const& p) {
    return ordered_json{
        {"is_la", p.is_la},
        {"is_medial", p.is_medial},
        {"left_identity", optional_element(p.left_identity)},
        {"right_identity", optional_element(p.right_identity)},
        {"is_commutative", p.is_commutative},
        {"is_associative", p.is_associative},
        {"is_regular", p.is_regular},
        {"is_inverse_la", p.is_inverse_la},
        {"is_right_invertible", p.is_right_invertible},
        {"is_globally_idempotent", p.is_globally_idempotent},
    };
  }

  ordered_json to_json(ElementSet const& s) {
    return ordered_json(s.members());
  }

  ordered_json check_json(CayleyTable const& t) {
    auto const   reg = is_regular(t);
    ordered_json out;
    out["order"] = t.order();
    out["profile"] = to_json(profile(t));
    out["violations"] = ordered_json{
        {"left_invertive", violation(is_left_invertive(t))},
        {"medial", violation(is_medial(t))},
        {"associative", violation(is_associative(t))},
        {"commutative", violation(is_commutative(t))},
    };
    out["left_identities"] = to_json(left_identities(t));
    out["right_identities"] = to_json(right_identities(t));
    out["regular_witnesses"]
        = reg.holds ? ordered_json(reg.witnesses) : ordered_json(nullptr);
    out["witnessless"] = optional_element(reg.witnessless);
    return out;
  }

  std::string check_text(CayleyTable const& t) {
    auto const         p = profile(t);
    auto const         reg = is_regular(t);
    std::ostringstream os;
    os << "order:            " << t.order() << '\n';
    os << "is_la:            " << law_text(is_left_invertive(t)) << '\n';
    os << "is_medial:        " << law_text(is_medial(t)) << '\n';
    os << "left_identity:    "
       << (p.left_identity ? std::to_string(*p.left_identity) : "none")
       << '\n';
    os << "right_identity:   "
       << (p.right_identity ? std::to_string(*p.right_identity) : "none")
       << '\n';
    os << "commutative:      " << law_text(is_commutative(t)) << '\n';
    os << "associative:      " << law_text(is_associative(t)) << '\n';
    os << "regular:          "
       << (reg.holds ? "true"
                     : "false, no witness for "
                           + std::to_string(*reg.witnessless))
       << '\n';
    os << "inverse_la:       " << flag(p.is_inverse_la) << '\n';
    os << "right_invertible: " << flag(p.is_right_invertible) << '\n';
    os << "S=S^2:            " << flag(p.is_globally_idempotent) << '\n';
    return os.str();
  }

  ordered_json to_json(IdealAnalysis const& a) {
    ordered_json out;
    out["order"] = a.order;
    out["profile"] = to_json(a.profile);
    ordered_json ideals = ordered_json::array();
    for (auto const& r : a.ideals) {
      ideals.push_back(ordered_json{
          {"members", to_json(r.carrier)},
          {"left", r.is_left},
          {"right", r.is_right},
          {"two_sided", r.is_two_sided},
          {"proper", r.is_proper},
          {"prime", r.prime},
          {"semiprime", r.semiprime},
          {"strongly_irreducible", r.strongly_irreducible},
          {"quasi_prime", r.quasi_prime},
          {"quasi_semiprime", r.quasi_semiprime},
          {"minimal", r.minimal},
          {"idempotent", r.idempotent},
      });
    }
    out["ideals"] = std::move(ideals);
    out["totally_ordered"] = a.totally_ordered;
    out["semilattice"] = a.semilattice;
    out["fully_prime"] = a.fully_prime;
    out["fully_semiprime"] = a.fully_semiprime;
    return out;
  }

  std::string to_text(IdealAnalysis const& a) {
    std::size_t two_sided = 0;
    for (auto const& r : a.ideals) {
      two_sided += r.is_two_sided ? 1 : 0;
    }
    std::ostringstream os;
    os << a.ideals.size() << " one- or two-sided ideals, " << two_sided
       << " two-sided\n";
    for (auto const& r : a.ideals) {
      os << "  " << r.carrier.to_string() << ' '
         << (r.is_two_sided ? "ideal"
             : r.is_left    ? "left ideal"
                            : "right ideal");
      if (!r.is_proper) {
        os << " (S)";
      }
      std::string tags;
      auto        tag = [&tags](bool on, char const* name) {
        if (on) {
          tags += tags.empty() ? "" : " ";
          tags += name;
        }
      };
      tag(r.prime, "prime");
      tag(r.semiprime, "semiprime");
      tag(r.strongly_irreducible, "strongly-irreducible");
      tag(r.quasi_prime, "quasi-prime");
      tag(r.quasi_semiprime, "quasi-semiprime");
      tag(r.minimal, "minimal");
      tag(r.idempotent, "idempotent");
      if (!tags.empty()) {
        os << ": " << tags;
      }
      os << '\n';
    }
    os << "totally ordered: " << flag(a.totally_ordered) << '\n';
    os << "semilattice:     " << flag(a.semilattice) << '\n';
    os << "fully prime:     " << flag(a.fully_prime) << '\n';
    os << "fully semiprime: " << flag(a.fully_semiprime) << '\n';
    return os.str();
  }

  ordered_json to_json(CountSummary const& c) {
    return ordered_json{
        {"order", c.order},
        {"filters", names_of(c.filters)},
        {"raw_count", c.raw_count},
        {"iso_count", c.iso_count},
        {"elapsed_ms", c.elapsed_ms},
    };
  }

  ordered_json to_json(Witness const& w) {
    ordered_json out = ordered_json::object();
    for (auto const& [name, value] : w) {
      if (auto const* x = std::get_if<Element>(&value)) {
        out[name] = *x;
      } else {
        out[name] = to_json(std::get<ElementSet>(value));
      }
    }
    return out;
  }

  std::string to_text(Witness const& w) {
    std::string out;
    for (auto const& [name, value] : w) {
      out += out.empty() ? "" : ", ";
      out += name + "=";
      if (auto const* x = std::get_if<Element>(&value)) {
        out += std::to_string(*x);
      } else {
        out += std::get<ElementSet>(value).to_string();
      }
    }
    return out;
  }

  ordered_json to_json(Counterexample const& cx) {
    return ordered_json{
        {"clause", cx.clause_id},
        {"table", serialize_table(cx.model)},
        {"witness", to_json(cx.witness)},
    };
  }

  Counterexample counterexample_from_json(ordered_json const& j,
                                          std::string const&  statement_id) {
    Counterexample cx{statement_id,
                      j.at("clause").get<std::string>(),
                      parse_table(j.at("table").get<std::string>()),
                      {}};
    std::size_t const n = cx.model.order();
    for (auto const& [name, value] : j.at("witness").items()) {
      if (value.is_array()) {
        cx.witness.emplace_back(
            name,
            ElementSet::from_members(n, value.get<std::vector<Element>>()));
      } else {
        cx.witness.emplace_back(name, value.get<Element>());
      }
    }
    return cx;
  }

  namespace {
    ordered_json to_json(ClauseReport const& c) {
      ordered_json out;
      out["id"] = c.id;
      out["scope"] = scope_name(c.scope);
      out["quantifier"] = c.quantifier == Quantifier::universal
                              ? "universal"
                              : "existential";
      out["verdict"] = verdict_string(c.verdict, c.max_order);
      out["orders"] = c.orders;
      out["models_checked"] = c.models_checked;
      if (!c.counterexamples.empty()) {
        out["counterexample"] = agwb::to_json(c.counterexamples.front());
      }
      if (c.counterexamples.size() > 1) {
        ordered_json all = ordered_json::array();
        for (auto const& cx : c.counterexamples) {
          all.push_back(agwb::to_json(cx));
        }
        out["counterexamples"] = std::move(all);
      }
      if (c.example) {
        out["example"] = agwb::to_json(*c.example);
      }
      if (!c.note.empty()) {
        out["note"] = c.note;
      }
      return out;
    }
  }  // namespace

  ordered_json to_json(SuiteReport const& r) {
    ordered_json out;
    out["max_order"] = r.max_order;
    out["up_to_iso"] = r.up_to_iso;
    ordered_json statements = ordered_json::array();
    for (auto const& s : r.statements) {
      ordered_json js;
      js["id"] = s.id;
      js["ref"] = s.reference;
      js["claim"] = s.claim;
      js["verdict"] = verdict_string(s.verdict, s.max_order);
      js["orders"] = s.orders;
      js["models_checked"] = s.models_checked;
      if (auto const* cx = s.counterexample()) {
        js["counterexample"] = to_json(*cx);
      }
      ordered_json clauses = ordered_json::array();
      for (auto const& c : s.clauses) {
        clauses.push_back(to_json(c));
      }
      js["clauses"] = std::move(clauses);
      statements.push_back(std::move(js));
    }
    out["statements"] = std::move(statements);
    out["totals"] = ordered_json{{"verified", r.verified},
                                 {"counterexample", r.counterexamples},
                                 {"skipped", r.skipped}};
    out["elapsed_ms"] = r.elapsed_ms;
    return out;
  }

  std::string to_text(SuiteReport const& r) {
    std::ostringstream os;
    os << "statements checked on all LA-semigroups of order <= "
       << r.max_order << (r.up_to_iso ? " (up to isomorphism)" : " (labelled)")
       << "\n\n";
    for (auto const& s : r.statements) {
      os << s.id << std::string(s.id.size() < 10 ? 10 - s.id.size() : 1, ' ')
         << verdict_string(s.verdict, s.max_order) << "  [" << s.reference
         << "] " << s.claim << '\n';
      for (auto const& c : s.clauses) {
        os << "    " << c.id << ": " << verdict_string(c.verdict, c.max_order)
           << ", " << c.models_checked << " models";
        if (!c.note.empty()) {
          os << " (" << c.note << ')';
        }
        os << '\n';
        auto show = [&os](char const* label, Counterexample const& cx) {
          os << "      " << label << ": " << to_text(cx.witness) << " in\n";
          std::istringstream table(serialize_table(cx.model));
          for (std::string line; std::getline(table, line);) {
            os << "        " << line << '\n';
          }
        };
        if (!c.counterexamples.empty()) {
          show("counterexample", c.counterexamples.front());
        }
        if (c.example) {
          show("example", *c.example);
        }
      }
    }
    os << '\n'
       << r.verified << " verified, " << r.counterexamples
       << " with counterexamples, " << r.skipped << " skipped\n";
    return os.str();
  }

  std::string profile_tags(PropertyProfile const& p) {
    std::string out = p.is_la ? "la" : "not-la";
    auto        add = [&out](std::string const& s) { out += " " + s; };
    if (p.is_medial) {
      add("medial");
    }
    if (p.left_identity) {
      add("left_identity=" + std::to_string(*p.left_identity));
    }
    if (p.right_identity) {
      add("right_identity=" + std::to_string(*p.right_identity));
    }
    if (p.is_commutative) {
      add("commutative");
    }
    if (p.is_associative) {
      add("associative");
    }
    if (p.is_regular) {
      add("regular");
    }
    if (p.is_inverse_la) {
      add("inverse");
    }
    if (p.is_right_invertible) {
      add("right_invertible");
    }
    if (p.is_globally_idempotent) {
      add("S=S^2");
    }
    return out;
  }

}  // namespace agwb
