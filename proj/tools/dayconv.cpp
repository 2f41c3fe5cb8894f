// Command line front end. Exit codes: 0 all checks passed, 1 a check failed,
// 2 usage or parse error, 3 a resource ceiling or closure cap was hit.
// Machine-form reports are stored next to the working directory so a later
// `dayconv report` can re-emit them; the stored form is byte deterministic.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dayconv/runner.hpp"

namespace {

int run(int argc, char** argv) {
  using namespace dayconv;

  CLI::App app{
      "dayconv: validate finite monoidal bases, convolve graded functors,\n"
      "enumerate commutative monoid structures, and certify the library's\n"
      "theorems end to end"};
  app.get_formatter()->column_width(28);

  std::string command;
  std::vector<std::string> args;
  std::string spec_path;
  std::string format = "human";
  cli::RunOptions opt;

  app.add_option("command", command,
                 "validate | day-tensor F G | enumerate | verify-theorems | report")
      ->required();
  app.add_option("args", args, "command arguments (functor or presheaf names)");
  app.add_option("--spec", spec_path, "document to load; omit to use the bundled structures");
  app.add_option("--max-n", opt.max_n, "fibration truncation level for validate (default 2)");
  app.add_option("--carrier-bound", opt.carrier_bound,
                 "carrier size bound for enumerate (default 2)");
  app.add_option("--ceiling", opt.ceiling,
                 "element ceiling for constructed finite sets (default 10000)");
  app.add_option("--format", format, "human | machine (default human)")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--report-path", opt.report_path,
                 "where the machine report is stored (default dayconv-last.report)");
  app.add_option("--golden-dir", opt.golden_dir,
                 "directory with the frozen enumeration censuses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  // the environment ceiling wins over the flag, so wrappers can cap a run
  if (const char* env = std::getenv("DAYCONV_CEILING")) opt.ceiling = std::atoll(env);

  cli::SpecDocument doc;
  if (!spec_path.empty()) {
    std::ifstream in(spec_path);
    if (!in) {
      std::cerr << "cannot read " << spec_path << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto parsed = cli::parse_spec(buf.str());
    if (!parsed.ok()) {
      std::cerr << spec_path << ": " << parsed.error->to_string() << "\n";
      return 2;
    }
    doc = std::move(*parsed.doc);
  }

  try {
    cli::Report rep = cli::run_command(doc, command, args, opt);
    std::cout << cli::print_report(
        rep, format == "machine" ? cli::ReportFormat::machine : cli::ReportFormat::human);
    if (command != "report") {
      std::ofstream out(opt.report_path);
      out << cli::print_report(rep, cli::ReportFormat::machine);
    }
    return rep.passed() ? 0 : 1;
  } catch (const ResourceCeilingError& e) {
    std::cerr << "resource ceiling: " << e.what() << "\n";
    return 3;
  } catch (const ClosureError& e) {
    std::cerr << "closure failure: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
