#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "xlog/repl.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Typed logic programming REPL"};
  std::string script;
  std::optional<std::uint64_t> max_steps;
  bool quiet = false;
  app.add_option("--script", script, "Replay queries from a file instead of reading the terminal");
  app.add_option("--max-steps", max_steps, "Bound on solver steps per query (script default: 1000000)");
  app.add_flag("--quiet", quiet, "Do not print the banner");
  CLI11_PARSE(app, argc, argv);

  const xlog::repl::PredicateRegistry registry = xlog::repl::prelude_registry();
  xlog::repl::SessionOptions options{max_steps, quiet};

  if (!script.empty()) {
    if (!options.max_steps) options.max_steps = 1000000;
    const int code = xlog::repl::run_script_file(script, registry, std::cout, options);
    if (code == xlog::repl::exit_code::kIo) std::cerr << "error: cannot read " << script << '\n';
    return code;
  }
  xlog::repl::Session session(registry, std::cout, options);
  return session.run_interactive(std::cin);
}
