// meadow: command-line front end.
//
//   meadow eval      --model D [--assign x=v ...] TERM
//   meadow check     --model D [--exhaustive | --trials N] [--seed S] [--json] FORMULA
//   meadow axioms    SUITE [--list] [--check --model D [--mode M]] [--json]
//   meadow search    FORMULA [--family gf] [--pmax P] [--k K ...] [--products] [--reto N] [--invo] [--json]
//   meadow translate --to md|nimd [--n N] TERM
//
// Exit codes: 0 ok / holds, 1 formula fails, 2 usage or parse error,
// 3 unbound variable, 4 exhaustive check impossible, 5 signature or
// precondition error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "meadow/meadow.hpp"

namespace {

using namespace meadow;

enum Exit : int {
  kOk = 0,
  kFails = 1,
  kUsage = 2,
  kUnbound = 3,
  kNotExhaustive = 4,
  kSignature = 5,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Valuation read_assignments(const Model& m, const std::vector<std::string>& assigns) {
  Valuation v;
  for (const auto& a : assigns) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw UsageError("assignment '" + a + "' is not name=value");
    const std::string name(detail::trim(std::string_view(a).substr(0, eq)));
    auto e = m.read(std::string_view(a).substr(eq + 1));
    if (!e) throw UsageError("'" + a.substr(eq + 1) + "' is not an element of " + m.name);
    v[name] = *e;
  }
  return v;
}

void print_report(const CheckReport& r) {
  std::cout << to_string(r.verdict) << "\n";
  if (r.witness) std::cout << "witness: " << witness_text(*r.witness) << "\n";
  std::cout << "assignments: " << r.assignments_tested << "\n";
  if (r.seed) std::cout << "seed: " << *r.seed << "\n";
}

CheckMode parse_mode(const std::string& s) {
  if (s == "auto") return CheckMode::Auto;
  if (s == "exhaustive") return CheckMode::Exhaustive;
  if (s == "sampled") return CheckMode::Sampled;
  throw UsageError("mode must be auto, exhaustive or sampled");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Meadows and non-involutive meadows: evaluation, checking, search, translation"};
  app.require_subcommand(1);

  std::string model_desc;
  std::string text;
  bool json = false;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term in a model");
  std::vector<std::string> assigns;
  eval_cmd->add_option("--model", model_desc, "Model descriptor")->required();
  eval_cmd->add_option("--assign", assigns, "Variable assignment name=value")->take_all();
  eval_cmd->add_option("term", text, "Term")->required();

  auto* check_cmd = app.add_subcommand("check", "Check a formula in a model");
  bool exhaustive = false;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 0;
  check_cmd->add_option("--model", model_desc, "Model descriptor")->required();
  auto* exh_flag = check_cmd->add_flag("--exhaustive", exhaustive, "Enumerate all assignments");
  check_cmd->add_option("--trials", trials, "Random trials")->excludes(exh_flag)->check(CLI::PositiveNumber);
  check_cmd->add_option("--seed", seed, "Sampling seed");
  check_cmd->add_flag("--json", json, "JSON output");
  check_cmd->add_option("formula", text, "Formula")->required();

  auto* axioms_cmd = app.add_subcommand("axioms", "List or check an axiom suite");
  std::string suite_id;
  bool list = false;
  bool do_check = false;
  std::string mode = "auto";
  std::uint64_t suite_trials = 1000;
  axioms_cmd->add_option("suite", suite_id, "Suite id (cr, md, nimd1, nimd, nimd:<n>, ...)")->required();
  axioms_cmd->add_flag("--list", list, "Print the suite");
  auto* check_flag = axioms_cmd->add_flag("--check", do_check, "Check the suite in a model");
  axioms_cmd->add_option("--model", model_desc, "Model descriptor")->needs(check_flag);
  axioms_cmd->add_option("--mode", mode, "auto, exhaustive or sampled");
  axioms_cmd->add_option("--trials", suite_trials, "Random trials per formula")->check(CLI::PositiveNumber);
  axioms_cmd->add_option("--seed", seed, "Sampling seed");
  axioms_cmd->add_flag("--json", json, "JSON output");

  auto* search_cmd = app.add_subcommand("search", "Search a model family for a counterexample");
  std::string family = "gf";
  FamilySpec fam;
  std::vector<std::uint64_t> ks;
  std::optional<std::size_t> reto_n;
  search_cmd->add_option("formula", text, "Formula")->required();
  search_cmd->add_option("--family", family, "Model family (gf)");
  search_cmd->add_option("--pmax", fam.pmax, "Largest prime");
  search_cmd->add_option("--k", ks, "Allowed inverses of zero")->take_all();
  search_cmd->add_flag("--products", fam.products, "Include products of two models");
  search_cmd->add_option("--reto", reto_n, "Include reto(m,N) wrappers")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--invo", fam.invo, "Include invo(m) wrappers");
  search_cmd->add_flag("--json", json, "JSON output");

  auto* tr_cmd = app.add_subcommand("translate", "Translate between the two inverse signatures");
  std::string to;
  std::size_t n = 1;
  tr_cmd->add_option("--to", to, "Target signature")->required()->check(CLI::IsMember({"md", "nimd"}));
  tr_cmd->add_option("--n", n, "Value of the inverse of zero")->check(CLI::PositiveNumber);
  tr_cmd->add_option("term", text, "Term or formula")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval_cmd) {
      const Model m = parse_model(model_desc);
      const Term t = parse_term(text);
      std::cout << eval(m, t, read_assignments(m, assigns)).to_string() << "\n";
      return kOk;
    }

    if (*check_cmd) {
      const Model m = parse_model(model_desc);
      const Formula f = parse_formula(text);
      CheckOptions opt;
      opt.seed = seed;
      if (exhaustive) {
        opt.mode = CheckMode::Exhaustive;
      } else if (trials) {
        opt.mode = CheckMode::Sampled;
        opt.trials = *trials;
      }
      const CheckReport r = check(m, f, opt);
      if (json) {
        nlohmann::json j = to_json(r);
        j["formula"] = print(f);
        std::cout << j.dump(2) << "\n";
      } else {
        print_report(r);
      }
      return r.holds() ? kOk : kFails;
    }

    if (*axioms_cmd) {
      const AxiomSuite s = suite_by_id(suite_id);
      if (!do_check) {
        if (json) {
          nlohmann::json j = nlohmann::json::array();
          for (const auto& lf : s.formulas) j.push_back({{"label", lf.label}, {"formula", print(lf.formula)}});
          std::cout << j.dump(2) << "\n";
        } else {
          for (const auto& lf : s.formulas) std::cout << lf.label << ": " << print(lf.formula) << "\n";
        }
        return kOk;
      }
      if (model_desc.empty()) throw UsageError("--check needs --model");
      const Model m = parse_model(model_desc);
      CheckOptions opt;
      opt.mode = parse_mode(mode);
      opt.trials = suite_trials;
      opt.seed = seed;
      const SuiteReport rep = check_suite(m, s, opt);
      if (json) {
        nlohmann::json j;
        j["suite"] = rep.suite;
        j["model"] = rep.model;
        j["all_hold"] = rep.all_hold();
        j["results"] = nlohmann::json::array();
        for (std::size_t i = 0; i < rep.results.size(); ++i) {
          nlohmann::json e = to_json(rep.results[i].second);
          e["label"] = rep.results[i].first;
          e["formula"] = print(s.formulas[i].formula);
          j["results"].push_back(std::move(e));
        }
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& [label, r] : rep.results) {
          std::cout << label << ": " << to_string(r.verdict);
          if (r.witness) std::cout << " " << witness_text(*r.witness);
          std::cout << "\n";
        }
        std::cout << (rep.all_hold() ? "all hold" : "some fail") << "\n";
      }
      return rep.all_hold() ? kOk : kFails;
    }

    if (*search_cmd) {
      if (family != "gf") throw UsageError("only the gf family is enumerable");
      if (!ks.empty()) fam.ks = ks;
      fam.reto = reto_n;
      const Formula f = parse_formula(text);
      const SearchResult r = find_counterexample(f, fam);
      if (json) {
        std::cout << to_json(r).dump(2) << "\n";
      } else if (r.found) {
        std::cout << r.found->descriptor;
        if (!r.found->witness.empty()) std::cout << " " << witness_text(r.found->witness);
        std::cout << "\n";
      } else {
        std::cout << "none\n";
      }
      return kOk;
    }

    if (*tr_cmd) {
      const bool to_md_sig = to == "md";
      if (text.find('=') != std::string::npos) {
        const Formula f = parse_formula(text);
        std::cout << print(to_md_sig ? to_md(f, n) : to_nimd(f)) << "\n";
      } else {
        const Term t = parse_term(text);
        std::cout << print(to_md_sig ? to_md(t, n) : to_nimd(t)) << "\n";
      }
      return kOk;
    }
  } catch (const UnboundVariable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnbound;
  } catch (const InfiniteCarrier& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotExhaustive;
  } catch (const EvaluationCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotExhaustive;
  } catch (const SignatureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSignature;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSignature;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
