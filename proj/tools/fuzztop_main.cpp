#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fuzztop/commands.hpp"
#include "fuzztop/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "fuzztop: desk-scale checker for fuzzy functions between L-valued "
      "sets, lattice-valued topologies and their compactness theory"};
  app.require_subcommand(0);

  std::string command;
  std::vector<std::string> args;
  std::string doc_path;
  std::string format = "text";
  fuzztop::CommandOptions opt;

  app.add_option("command", command, "one of: validate degrees compose image "
                                     "preimage eq-preimage eq-image product "
                                     "coproduct topo-generate continuity "
                                     "initial quotient compact-spectrum "
                                     "perfect homeo-degree probe harness")
      ->required();
  app.add_option("args", args, "command arguments (names from the document)");
  app.add_option("--doc", doc_path, "problem document (JSON)")->required();
  app.add_option("--format", format, "text|machine")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--seed", opt.seed, "harness seed");
  app.add_option("--cap", opt.cap, "size cap (generated opens, products)");
  app.add_option("--budget", opt.budget, "probe instance budget");
  app.add_option("--count", opt.count, "harness instance count");
  app.add_option("--alpha", opt.alpha, "compactness parameter (carrier label)");
  app.add_option("--beta", opt.beta, "compactness parameter (carrier label)");

  CLI11_PARSE(app, argc, argv);

  try {
    std::ifstream in(doc_path);
    if (!in)
      throw fuzztop::Error(fuzztop::Errc::SyntaxError,
                           "cannot read document '" + doc_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    fuzztop::Document doc = fuzztop::parse_document(buf.str());
    fuzztop::Report rep = fuzztop::run_command(doc, command, args, opt);
    std::cout << (format == "machine" ? fuzztop::emit_report_machine(rep)
                                      : fuzztop::emit_report_text(rep));
    return rep.exit_code();
  } catch (const fuzztop::Error& e) {
    std::cerr << "error: " << fuzztop::errc_name(e.code()) << ": " << e.what();
    if (!e.witness().empty()) {
      std::cerr << " (witness:";
      for (const auto& w : e.witness()) std::cerr << " " << w;
      std::cerr << ")";
    }
    std::cerr << "\n";
    return fuzztop::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
