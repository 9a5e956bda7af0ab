// Command-line frontend: enumeration, interassociates, isomorphism and
// automorphism queries, model recognition, classification reports and the
// verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "doppel/algebra.hpp"
#include "doppel/catalog.hpp"
#include "doppel/classify.hpp"
#include "doppel/enumerate.hpp"
#include "doppel/iso.hpp"

namespace {

using namespace doppel;

using AnyTable = std::variant<CayleyTable, DoppelTable>;

AnyTable parse_any(const std::string& text) {
  if (!text.empty() && text[0] == 'D') {
    return DoppelTable::parse(text);
  }
  return CayleyTable::parse(text);
}

std::vector<std::string> gather_inputs(const std::string& inline_table, bool use_stdin) {
  std::vector<std::string> inputs;
  if (use_stdin) {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (!line.empty()) {
        inputs.push_back(line);
      }
    }
  } else {
    inputs.push_back(inline_table);
  }
  return inputs;
}

std::string aut_summary(const AutGroup& aut) {
  return aut.label + " (order " + std::to_string(aut.order) + ")";
}

int run_verify(int max_n, const SearchBudget& budget) {
  bool all_pass = true;
  for (const CheckResult& check : run_all_verifiers(max_n, budget)) {
    std::cout << (check.pass ? "PASS " : "FAIL ") << check.name << "\n";
    for (const std::string& diag : check.diagnostics) {
      std::cout << "  " << diag << "\n";
    }
    all_pass = all_pass && check.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley-table toolkit for finite semigroups and doppelsemigroups"};
  app.require_subcommand(1);

  std::string table_arg;
  std::string right_arg;
  std::vector<std::string> iso_tables;
  int n = 3;
  int max_n = 3;
  int workers = 1;
  bool strong_only = false;
  bool canonical = false;
  bool use_stdin = false;
  bool ascii = false;
  std::string format = "text";
  std::uint64_t budget_nodes = 0;

  auto* enum_cmd = app.add_subcommand("enum-semigroups", "all associative tables of order n");
  enum_cmd->add_option("--n", n, "table order")->required();
  enum_cmd->add_flag("--canonical", canonical, "one canonical representative per class");
  enum_cmd->add_option("--budget-nodes", budget_nodes, "search node limit");

  auto* inter_cmd = app.add_subcommand("interassociates", "all interassociates of a semigroup");
  inter_cmd->add_option("--table", table_arg, "semigroup encoding S:<n>:<entries>");
  inter_cmd->add_flag("--strong", strong_only, "restrict to strong interassociates");
  inter_cmd->add_flag("--stdin", use_stdin, "read one encoding per line from stdin");
  inter_cmd->add_option("--budget-nodes", budget_nodes, "search node limit");

  auto* aut_cmd = app.add_subcommand("aut", "automorphism group of a (doppel)semigroup");
  aut_cmd->add_option("--table", table_arg, "S: or D: encoding (or the left component)");
  aut_cmd->add_option("--right", right_arg, "right component for a doppelsemigroup input");
  aut_cmd->add_flag("--stdin", use_stdin, "read one encoding per line from stdin");

  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test for two encodings");
  iso_cmd->add_option("--table", iso_tables, "two S: or two D: encodings")->expected(2);

  auto* rec_cmd = app.add_subcommand("recognize", "name the isomorphism class of a semigroup");
  rec_cmd->add_option("--table", table_arg, "semigroup encoding");
  rec_cmd->add_flag("--stdin", use_stdin, "read one encoding per line from stdin");

  auto* classify_cmd = app.add_subcommand("classify", "classification report for order n");
  classify_cmd->add_option("--n", n, "order")->required();
  classify_cmd->add_option("--format", format, "json|csv|md|text")
      ->check(CLI::IsMember({"json", "csv", "md", "text"}));
  classify_cmd->add_option("--workers", workers, "worker threads for the class search");
  classify_cmd->add_flag("--ascii", ascii, "render '><' instead of the UTF-8 bowtie");
  classify_cmd->add_option("--budget-nodes", budget_nodes, "search node limit");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--max-n", max_n, "largest order to verify");
  verify_cmd->add_option("--budget-nodes", budget_nodes, "search node limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  SearchBudget budget;
  if (budget_nodes > 0) {
    budget.max_nodes = budget_nodes;
  }
  if (enum_cmd->parsed() || classify_cmd->parsed()) {
    budget.max_order = std::max(budget.max_order, n);
  }
  if (verify_cmd->parsed()) {
    budget.max_order = std::max(budget.max_order, max_n);
  }

  try {
    if (enum_cmd->parsed()) {
      if (canonical) {
        for (const auto& c : semigroup_classes(n, budget)) {
          std::cout << to_string(c) << "\n";
        }
      } else {
        for (const auto& t : enumerate_associative(n, budget)) {
          std::cout << t.encode() << "\n";
        }
      }
      return 0;
    }

    if (inter_cmd->parsed()) {
      for (const std::string& input : gather_inputs(table_arg, use_stdin)) {
        const CayleyTable t = CayleyTable::parse(input);
        const auto result =
            strong_only ? strong_interassociates_of(t, budget) : interassociates_of(t, budget);
        for (const auto& b : result) {
          std::cout << b.encode() << "\n";
        }
      }
      return 0;
    }

    if (aut_cmd->parsed()) {
      if (!right_arg.empty()) {
        const DoppelTable d = DoppelTable::checked(CayleyTable::parse(table_arg),
                                                   CayleyTable::parse(right_arg));
        std::cout << aut_summary(automorphisms(d)) << "\n";
        return 0;
      }
      for (const std::string& input : gather_inputs(table_arg, use_stdin)) {
        const AnyTable any = parse_any(input);
        const AutGroup aut = std::holds_alternative<DoppelTable>(any)
                                 ? automorphisms(std::get<DoppelTable>(any))
                                 : automorphisms(std::get<CayleyTable>(any));
        std::cout << aut_summary(aut) << "\n";
      }
      return 0;
    }

    if (iso_cmd->parsed()) {
      const AnyTable a = parse_any(iso_tables[0]);
      const AnyTable b = parse_any(iso_tables[1]);
      if (a.index() != b.index()) {
        std::cerr << "error: cannot compare a semigroup with a doppelsemigroup\n";
        return 2;
      }
      const bool iso = std::holds_alternative<CayleyTable>(a)
                           ? are_isomorphic(std::get<CayleyTable>(a), std::get<CayleyTable>(b))
                           : are_isomorphic(std::get<DoppelTable>(a), std::get<DoppelTable>(b));
      std::cout << (iso ? "true" : "false") << "\n";
      return 0;
    }

    if (rec_cmd->parsed()) {
      for (const std::string& input : gather_inputs(table_arg, use_stdin)) {
        const CayleyTable t = CayleyTable::parse(input);
        if (auto name = recognize(t)) {
          std::cout << name->str() << "\n";
        } else {
          std::cout << "unnamed\n";
        }
      }
      return 0;
    }

    if (classify_cmd->parsed()) {
      const ClassificationReport report = classify(n, budget, workers);
      if (format == "json") {
        std::cout << to_json(report, ascii);
      } else if (format == "csv") {
        std::cout << to_csv(report, ascii);
      } else if (format == "md") {
        std::cout << to_markdown(report, ascii);
      } else {
        std::cout << to_text(report, ascii);
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      return run_verify(max_n, budget);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " at position " << e.position() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
