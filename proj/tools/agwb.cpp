// agwb: command-line front end for the LA-semigroup workbench.
//
//   agwb check FILE            identities and element-level properties
//   agwb ideals FILE           ideal lattice and classification
//   agwb enumerate --order N   all LA-semigroups of order N
//   agwb verify --max-order K  statement suite over enumerated models
//   agwb canon FILE            canonical form under relabelling
//
// Exit codes: 0 success, 1 usage or input error, 2 counterexample found.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "agwb/canonical.hpp"
#include "agwb/enumerate.hpp"
#include "agwb/errors.hpp"
#include "agwb/ideals.hpp"
#include "agwb/report_json.hpp"
#include "agwb/table_io.hpp"
#include "agwb/verify.hpp"

namespace {

  using nlohmann::ordered_json;

  // Writes to --out when given, stdout otherwise.
  class Output {
   public:
    explicit Output(std::string const& path) {
      if (!path.empty()) {
        _file.open(path);
        if (!_file) {
          throw agwb::UsageError("cannot write '" + path + "'");
        }
      }
    }

    std::ostream& stream() {
      return _file.is_open() ? _file : std::cout;
    }

   private:
    std::ofstream _file;
  };

  struct CommonOptions {
    bool        json = false;
    std::string out;
  };

  void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_flag("--json", opts.json, "Machine-readable JSON output");
    cmd->add_option("--out", opts.out, "Write the report to this path");
  }

  int cmd_check(std::string const& path, CommonOptions const& opts) {
    auto const t = agwb::read_table_file(path);
    Output     out(opts.out);
    if (opts.json) {
      out.stream() << agwb::check_json(t).dump(2) << '\n';
    } else {
      out.stream() << agwb::check_text(t);
    }
    return 0;
  }

  int cmd_ideals(std::string const&   path,
                 bool                 force,
                 CommonOptions const& opts) {
    auto const t = agwb::read_table_file(path);
    bool const la = agwb::is_left_invertive(t).holds;
    if (!la && !force) {
      std::cerr << "agwb: " << path
                << " is not an LA-semigroup (use --force to analyse anyway)\n";
      return 1;
    }
    auto const analysis = agwb::analyze_ideals(t);
    Output     out(opts.out);
    if (opts.json) {
      auto j = agwb::to_json(analysis);
      if (!la) {
        j["forced"] = true;
      }
      out.stream() << j.dump(2) << '\n';
    } else {
      if (!la) {
        out.stream() << "WARNING: not an LA-semigroup, analysed with --force\n";
      }
      out.stream() << agwb::to_text(analysis);
    }
    return 0;
  }

  struct EnumerateOptions {
    std::size_t              order = 0;
    bool                     up_to_iso = false;
    std::vector<std::string> filters;
    bool                     count_only = false;
    bool                     emit = false;
    int                      jobs = 0;
  };

  int cmd_enumerate(EnumerateOptions const& e, CommonOptions const& opts) {
    agwb::Filters filters;
    for (auto const& name : e.filters) {
      agwb::add_filter(filters, name);
    }
    agwb::EnumerationOptions run{e.jobs, 0};
    Output                   out(opts.out);
    if (e.emit) {
      std::size_t index = 0;
      agwb::enumerate_la(
          e.order, filters, e.up_to_iso, run, [&](agwb::CayleyTable const& t) {
            auto const header = "model " + std::to_string(index++) + ": "
                                + agwb::profile_tags(agwb::profile(t));
            out.stream() << agwb::serialize_table(t, header);
          });
      return 0;
    }
    auto const summary = agwb::count_la(e.order, filters, e.up_to_iso, run);
    out.stream() << agwb::to_json(summary).dump(opts.json ? 2 : -1) << '\n';
    return 0;
  }

  struct VerifyOptions {
    std::size_t              max_order = 3;
    std::vector<std::string> only;
    bool                     collect_all = false;
    bool                     labelled = false;
    int                      jobs = 0;
  };

  int cmd_verify(VerifyOptions const& v, CommonOptions const& opts) {
    agwb::SuiteOptions suite;
    suite.run.collect_all = v.collect_all;
    suite.run.jobs = v.jobs;
    suite.labelled = v.labelled;
    auto const report = agwb::run_suite(v.max_order, v.only, suite);
    Output     out(opts.out);
    if (opts.json) {
      out.stream() << agwb::to_json(report).dump(2) << '\n';
    } else {
      out.stream() << agwb::to_text(report);
    }
    return agwb::exit_code(report);
  }

  int cmd_canon(std::string const& path, CommonOptions const& opts) {
    auto const        t = agwb::read_table_file(path);
    agwb::Permutation perm;
    auto const        form = agwb::canonicalize(t, perm);
    Output            out(opts.out);
    if (opts.json) {
      out.stream() << ordered_json{{"table", agwb::serialize_table(form.table)},
                                   {"permutation", perm},
                                   {"already_canonical", form.table == t}}
                          .dump(2)
                   << '\n';
    } else {
      std::string perm_text;
      for (auto x : perm) {
        perm_text += (perm_text.empty() ? "" : " ") + std::to_string(x);
      }
      out.stream() << agwb::serialize_table(form.table,
                                            "relabelling: " + perm_text);
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-model workbench for LA-semigroups"};
  app.require_subcommand(1, 1);

  CommonOptions common;
  std::string   file;
  bool          force = false;

  auto* check = app.add_subcommand("check", "Check identities and properties");
  check->add_option("file", file, "Table file")->required();
  add_common(check, common);

  auto* ideals = app.add_subcommand("ideals", "Classify the ideals of a table");
  ideals->add_option("file", file, "Table file")->required();
  ideals->add_flag("--force", force, "Analyse tables that are not LA");
  add_common(ideals, common);

  EnumerateOptions en;
  auto* enumerate = app.add_subcommand("enumerate",
                                       "Enumerate LA-semigroups of one order");
  enumerate->add_option("--order", en.order, "Order n >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--up-to-iso", en.up_to_iso, "One table per class");
  enumerate->add_option("--filter", en.filters,
                        "left-identity, regular, right-invertible (repeatable)");
  auto* count_only
      = enumerate->add_flag("--count-only", en.count_only, "Counts as JSON");
  auto* emit = enumerate->add_flag("--emit", en.emit, "Write every table");
  count_only->excludes(emit);
  enumerate->add_option("--jobs", en.jobs, "Worker threads (0: default)")
      ->envname("AGWB_JOBS");
  add_common(enumerate, common);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run the statement suite");
  verify->add_option("--max-order", vo.max_order, "Largest order checked")
      ->check(CLI::PositiveNumber);
  verify->add_option("--only", vo.only, "Statement ids to run");
  verify->add_flag("--collect-all", vo.collect_all,
                   "Keep scanning after the first counterexample");
  verify->add_flag("--labelled", vo.labelled,
                   "Check every labelled table, not one per class");
  verify->add_option("--jobs", vo.jobs, "Worker threads (0: default)")
      ->envname("AGWB_JOBS");
  add_common(verify, common);

  auto* canon = app.add_subcommand("canon", "Print the canonical form");
  canon->add_option("file", file, "Table file")->required();
  add_common(canon, common);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (check->parsed()) {
      return cmd_check(file, common);
    } else if (ideals->parsed()) {
      return cmd_ideals(file, force, common);
    } else if (enumerate->parsed()) {
      return cmd_enumerate(en, common);
    } else if (verify->parsed()) {
      return cmd_verify(vo, common);
    } else if (canon->parsed()) {
      return cmd_canon(file, common);
    }
  } catch (agwb::ParseError const& e) {
    std::cerr << "agwb: " << file << ": " << e.what() << '\n';
    return 1;
  } catch (agwb::Error const& e) {
    std::cerr << "agwb: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
