#include <iostream>

#include "CLI11.hpp"

#include "galg/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay, Gorenstein and Hochschild checks for graded algebras"};
  app.set_version_flag("--version", std::string("galg ") + galg::galg_version);

  std::string command, target, corpus_command = "analyze";
  galg::RunOptions opts;
  bool json = false;
  std::string order, field;
  int max_hochschild = -1;

  std::vector<std::string> allowed = galg::commands();
  allowed.push_back("corpus");
  app.add_option("COMMAND", command, "analyze | cm | gorenstein | bigrade | decompose | probe-conjecture | corpus")
      ->required()
      ->check(CLI::IsMember(allowed));
  app.add_option("FILE", target, "input file (a directory for corpus)")->required();
  app.add_option("--order", order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--field", field, "QQ or GFp, overriding the input file");
  app.add_option("--max-hochschild", max_hochschild, "last Hochschild degree to compute (default: variable count)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--path", opts.path, "Hochschild Ext route")->check(CLI::IsMember({"A", "B", "both"}));
  app.add_flag("--assume-connected", opts.assume_connected, "treat Spec S as connected");
  app.add_flag("--assume-generically-gorenstein", opts.assume_generically_gorenstein,
               "treat S as Gorenstein at its minimal primes");
  app.add_flag("--json", json, "print the JSON report");
  app.add_option("--max-seconds", opts.max_seconds, "wall-clock budget, 0 for none")->check(CLI::NonNegativeNumber);
  app.add_option("--max-basis-size", opts.max_basis_size, "cap on Groebner basis size, 0 for none");
  app.add_option("--command", corpus_command, "command applied to each corpus file")
      ->check(CLI::IsMember(galg::commands()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : galg::exit_input;
  }
  if (!order.empty()) opts.order = order;
  if (!field.empty()) opts.field = field;
  if (max_hochschild >= 0) opts.max_hochschild = max_hochschild;

  const auto res =
      command == "corpus" ? galg::corpus_run(target, corpus_command, opts) : galg::run_file(command, target, opts);
  if (json)
    std::cout << res.report.dump(2) << "\n";
  else
    std::cout << galg::render_text(res.report);
  if (res.report.value("field", nlohmann::json()) == "QQ")
    std::cerr << "warning: QQ mode uses exact rational arithmetic and may be slow\n";
  if (!res.error.empty()) std::cerr << "galg: " << res.error << "\n";
  return res.exit_code;
}
