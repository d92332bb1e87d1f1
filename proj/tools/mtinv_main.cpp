#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mtinv/cli/corpus.hpp"
#include "mtinv/cli/problem.hpp"
#include "mtinv/cli/runner.hpp"
#include "mtinv/errors.hpp"

namespace {

using namespace mtinv;
using namespace mtinv::cli;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-one invariants of groups of multiplicative type"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "text";
  long modulus = 0;
  unsigned jobs = 1;
  std::string entry;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--modulus", modulus, "Override every modulus")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* compute = app.add_subcommand("compute", "Run the tasks of a problem file");
  compute->add_option("file", file, "Problem file, or - for stdin")->required();
  add_common(compute);
  auto* verify = app.add_subcommand("verify", "Run the exactness checks on every module of a problem file");
  verify->add_option("file", file, "Problem file, or - for stdin")->required();
  add_common(verify);
  auto* oracle = app.add_subcommand("oracle", "Run the tasks with the full cocycle-table H^1");
  oracle->add_option("file", file, "Problem file, or - for stdin")->required();
  add_common(oracle);
  auto* corpus = app.add_subcommand("corpus", "Run the built-in corpus");
  add_common(corpus);
  auto* exporter = app.add_subcommand("export", "Print a corpus entry as a problem file");
  exporter->add_option("entry", entry, "Corpus entry name")->required();
  auto* list = app.add_subcommand("list", "List corpus entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  RunOptions options;
  options.format = format == "json" ? Format::Json : Format::Text;
  if (modulus > 0) options.modulus = Integer(modulus);
  options.jobs = jobs;

  try {
    if (list->parsed()) {
      for (const auto& e : multiplicative_corpus()) std::cout << e.name << "\t" << e.group_name << "\n";
      return 0;
    }
    if (exporter->parsed()) {
      for (const auto& e : multiplicative_corpus())
        if (e.name == entry) {
          ProblemFile p = to_problem(e);
          for (const auto& op : known_ops()) {
            if (op == "h1_oracle") continue;
            const bool needs_n = op == "inv1_mod_n" || op == "inv0_torus_mod_n" || op == "verify_cor52";
            const bool torus_only = op.rfind("inv0", 0) == 0 || op == "pic_torus";
            if (torus_only && !e.group.is_torus()) continue;
            p.tasks.push_back({op, e.name, needs_n ? std::optional<Integer>(6) : std::nullopt});
          }
          std::cout << serialize_problem(p);
          return 0;
        }
      std::cerr << "error: unknown corpus entry '" << entry << "'\n";
      return 2;
    }
    RunOutcome out;
    if (corpus->parsed()) {
      out = run_corpus(options);
    } else {
      const ProblemFile problem = parse_problem(read_file(file));
      options.mode = verify->parsed() ? Mode::Verify : oracle->parsed() ? Mode::Oracle : Mode::Compute;
      out = run(problem, options);
    }
    std::cout << out.report;
    return out.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
  } catch (const SchemaError& e) {
    std::cerr << "error: SchemaError: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    std::cerr << "error: ValidationError: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
