#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "delta2/alternating.hpp"
#include "delta2/determinize.hpp"
#include "delta2/hoa.hpp"
#include "delta2/normalize.hpp"
#include "delta2/word.hpp"
#include "delta2/xcheck.hpp"

namespace delta2 {

// Exit codes: 0 success, 1 property violation / counterexample / UNSAT,
// 2 usage or input error.
namespace cli {

inline Alphabet alphabet_for(Formula f, const std::string& props_flag) {
  std::vector<std::string> props = atom_names(f);
  if (!props_flag.empty()) {
    std::stringstream ss(props_flag);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) props.push_back(item);
    std::sort(props.begin(), props.end());
    props.erase(std::unique(props.begin(), props.end()), props.end());
  }
  return Alphabet(props);
}

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"LTL normalisation and omega-automata toolkit"};
  app.require_subcommand(1);

  std::string formula_text, lasso_text, props_flag, input_path;
  bool dual = false, no_simplify = false, report_json = false;
  std::string format;
  std::string polarize;

  auto* cmd_normalize =
      app.add_subcommand("normalize", "rewrite a formula into Delta_2 form");
  cmd_normalize->add_option("formula", formula_text)->required();
  cmd_normalize->add_flag("--dual", dual, "use the dual (Pi_2-core) variant");
  cmd_normalize->add_flag("--no-simplify", no_simplify);
  cmd_normalize->add_flag("--report-json", report_json,
                          "print the full disjunct report as JSON");

  auto* cmd_stable = app.add_subcommand(
      "stable-nf", "normal form valid on stable words only");
  cmd_stable->add_option("formula", formula_text)->required();
  cmd_stable->add_flag("--no-simplify", no_simplify);
  cmd_stable->add_flag("--report-json", report_json);

  auto* cmd_classify = app.add_subcommand(
      "classify", "smallest syntactic-future hierarchy classes");
  cmd_classify->add_option("formula", formula_text)->required();

  auto* cmd_check =
      app.add_subcommand("check", "evaluate a formula on a lasso word");
  cmd_check->add_option("--formula", formula_text)->required();
  cmd_check->add_option("--lasso", lasso_text)->required();
  cmd_check->add_option("--props", props_flag,
                        "extra propositions, comma separated");

  auto* cmd_to_a1w = app.add_subcommand(
      "to-a1w", "translate into a very weak alternating automaton");
  cmd_to_a1w->add_option("formula", formula_text)->required();
  cmd_to_a1w->add_option("--format", format)
      ->check(CLI::IsMember({"json", "hoa", "dot"}));
  cmd_to_a1w->add_flag_function(
      "--json", [&](std::int64_t) { format = "json"; }, "JSON output");
  cmd_to_a1w->add_flag_function(
      "--hoa", [&](std::int64_t) { format = "hoa"; }, "HOA v1.1 output");
  cmd_to_a1w->add_flag_function(
      "--dot", [&](std::int64_t) { format = "dot"; }, "DOT output");
  cmd_to_a1w->add_option("--polarize", polarize,
                         "add a polarised initial state (sigma|pi)")
      ->check(CLI::IsMember({"sigma", "pi"}));
  cmd_to_a1w->add_option("--props", props_flag);

  auto* cmd_to_drw = app.add_subcommand(
      "to-drw", "translate into a deterministic Rabin automaton");
  cmd_to_drw->add_option("formula", formula_text)->required();
  cmd_to_drw->add_option("--format", format)
      ->check(CLI::IsMember({"json", "hoa", "dot"}));
  cmd_to_drw->add_flag_function(
      "--hoa", [&](std::int64_t) { format = "hoa"; }, "HOA v1 output");
  cmd_to_drw->add_flag_function(
      "--dot", [&](std::int64_t) { format = "dot"; }, "DOT output");
  cmd_to_drw->add_option("--props", props_flag);

  auto* cmd_a1w_to_ltl = app.add_subcommand(
      "a1w-to-ltl", "translate an A1W (JSON, see README) back into LTL");
  cmd_a1w_to_ltl->add_option("input", input_path,
                             "path to the automaton JSON, '-' for stdin");

  XCheckOptions xopt;
  if (const char* env_seed = std::getenv("DELTA2_SEED"))
    xopt.corpus.seed = std::strtoull(env_seed, nullptr, 10);
  bool no_drw = false;
  auto* cmd_xcheck = app.add_subcommand(
      "xcheck", "differential-test a generated corpus against the oracle");
  cmd_xcheck->add_option("--seed", xopt.corpus.seed);
  cmd_xcheck->add_option("--count", xopt.corpus.count);
  cmd_xcheck->add_option("--max-props", xopt.corpus.max_props);
  cmd_xcheck->add_option("--max-size", xopt.corpus.max_size);
  cmd_xcheck->add_option("--prefix", xopt.max_prefix);
  cmd_xcheck->add_option("--cycle", xopt.max_cycle);
  cmd_xcheck->add_flag("--no-drw", no_drw, "skip the DRW membership check");

  std::vector<const char*> argv;
  argv.push_back("delta2");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*cmd_normalize || *cmd_stable) {
      Formula phi = parse_formula(formula_text);
      NormalizationReport rep =
          *cmd_stable ? normalize_stable(phi, !no_simplify)
                      : normalize(phi,
                                  dual ? NormalizeVariant::Dual
                                       : NormalizeVariant::Primary,
                                  !no_simplify);
      if (report_json)
        out << report_to_json(rep).dump(2) << "\n";
      else
        out << to_string(rep.result) << "\n";
      return 0;
    }
    if (*cmd_classify) {
      Formula phi = parse_formula(formula_text);
      bool first = true;
      for (const HierarchyClass& c : smallest_classes(phi)) {
        if (!first) out << " ";
        out << to_string(c);
        first = false;
      }
      out << "\n";
      return 0;
    }
    if (*cmd_check) {
      Formula phi = parse_formula(formula_text);
      Alphabet ab = alphabet_for(phi, props_flag);
      LassoWord w = parse_lasso(lasso_text, std::nullopt);
      // embed the lasso into the combined alphabet
      std::vector<std::string> props = ab.props();
      for (const auto& p : w.alphabet.props()) props.push_back(p);
      std::sort(props.begin(), props.end());
      props.erase(std::unique(props.begin(), props.end()), props.end());
      LassoWord embedded = parse_lasso(lasso_text, Alphabet(props));
      const bool sat = evaluate(phi, embedded);
      out << (sat ? "SAT" : "UNSAT") << "\n";
      return sat ? 0 : 1;
    }
    if (*cmd_to_a1w) {
      Formula phi = parse_formula(formula_text);
      std::optional<ClassKind> pol;
      if (polarize == "sigma") pol = ClassKind::Sigma;
      if (polarize == "pi") pol = ClassKind::Pi;
      AlternatingAutomaton a =
          ltl_to_a1w(phi, alphabet_for(phi, props_flag), pol);
      if (format == "json")
        out << a1w_to_json(a).dump(2) << "\n";
      else if (format == "dot")
        out << emit_dot(a);
      else
        out << emit_hoa_alternating(a);
      return 0;
    }
    if (*cmd_to_drw) {
      Formula phi = parse_formula(formula_text);
      DetAutomaton d = ltl_to_drw(phi, alphabet_for(phi, props_flag));
      if (format == "json")
        out << det_to_json(d).dump(2) << "\n";
      else if (format == "dot")
        out << emit_dot(d);
      else
        out << emit_hoa(d);
      return 0;
    }
    if (*cmd_a1w_to_ltl) {
      nlohmann::json j;
      if (input_path.empty() || input_path == "-") {
        j = nlohmann::json::parse(std::cin);
      } else {
        std::ifstream in(input_path);
        if (!in) {
          err << "error: cannot open '" << input_path << "'\n";
          return 2;
        }
        j = nlohmann::json::parse(in);
      }
      out << to_string(a1w_to_ltl(a1w_from_json(j))) << "\n";
      return 0;
    }
    if (*cmd_xcheck) {
      xopt.with_drw = !no_drw;
      XCheckReport rep = xcheck(xopt);
      out << rep.text;
      return rep.failures == 0 ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cli
}  // namespace delta2
