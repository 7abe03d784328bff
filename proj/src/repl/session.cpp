#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "xlog/repl.hpp"
#include "xlog/solver.hpp"
#include "xlog/unify.hpp"

namespace xlog::repl {

namespace {

constexpr const char* kBanner = "xlog: typed logic programming REPL. Type :h for help, :q to quit.";

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

void collect_generated(const Term& t, std::vector<VarId>& seen) {
  if (t.is_var()) {
    if (t.var().is_generated() && std::find(seen.begin(), seen.end(), t.var()) == seen.end()) {
      seen.push_back(t.var());
    }
    return;
  }
  for (const auto& c : t.payload().children) collect_generated(c, seen);
}

// Lowercase names cannot be query variables, so they never clash.
std::string display_name(std::size_t i) {
  std::string name(1, static_cast<char>('a' + i % 26));
  if (i >= 26) name += std::to_string(i / 26);
  return name;
}

std::string answer_text(const Query& query, const Solution& solution) {
  std::vector<std::pair<VarId, Term>> shown;
  std::vector<VarId> generated;
  for (const VarId& v : query.variables()) {
    auto value = solution.value(v);
    if (!value) continue;
    collect_generated(*value, generated);
    shown.emplace_back(v, *value);
  }
  std::string out;
  for (auto& [v, value] : shown) {
    for (std::size_t i = 0; i < generated.size(); ++i) {
      value = substitute(generated[i], Term::variable(VarId::user(display_name(i), generated[i].type())), value);
    }
    if (!out.empty()) out += ", ";
    out += v.name() + " = " + pretty(value);
  }
  return out.empty() ? "true" : out;
}

// The query currently waiting for ";" or ".".
struct Pending {
  Query query;
  SolutionStream stream;
  Solution next;
};

}  // namespace

Session::Session(const PredicateRegistry& registry, std::ostream& out, SessionOptions options)
    : registry_(registry), out_(out), options_(options) {}

int Session::run_interactive(std::istream& in) { return run(in, true); }

int Session::run_script(std::istream& in) { return run(in, false); }

int Session::run(std::istream& in, bool interactive) {
  int status = exit_code::kOk;
  auto record = [&](int code) {
    if (status == exit_code::kOk) status = code;
  };
  std::optional<Pending> pending;

  auto budget_error = [&] {
    out_ << "error: step budget exhausted.\n";
    record(exit_code::kBudget);
    pending.reset();
  };

  // Prints an answer and decides, by searching one solution ahead, whether
  // it ends the stream ("." right away) or waits for the user.
  auto show = [&](const Query& query, SolutionStream stream, const Solution& solution) {
    out_ << answer_text(query, solution);
    std::optional<Solution> ahead;
    try {
      ahead = stream.next();
    } catch (const BudgetExhausted&) {
      out_ << '\n';
      budget_error();
      return;
    }
    if (!ahead) {
      out_ << ".\n";
      return;
    }
    out_ << ' ';
    out_.flush();
    pending.emplace(Pending{query, std::move(stream), std::move(*ahead)});
  };

  if (interactive && !options_.quiet) out_ << kBanner << '\n';

  std::string line;
  while (true) {
    if (interactive && !pending) out_ << "?- " << std::flush;
    if (!std::getline(in, line)) break;
    const std::string cmd = trim(line);

    if (pending) {
      const bool more = cmd == ";" || (!interactive && cmd == "NEXT");
      if (more) {
        Pending p = std::move(*pending);
        pending.reset();
        out_ << ";\n";
        show(p.query, std::move(p.stream), p.next);
        continue;
      }
      if (interactive && cmd != ".") {
        out_ << "(';' for more, '.' to stop) " << std::flush;
        continue;
      }
      pending.reset();
      out_ << ".\n";
      if (cmd == ".") continue;
    }

    if (cmd.empty()) continue;
    if (cmd == ":q") break;
    if (cmd == ":h") {
      out_ << "Enter a query such as plus(1, X, 5). followed by Enter.\n"
           << "After an answer type ; for the next one or . to stop.\n"
           << "Predicates:";
      for (const auto* e : registry_.entries()) {
        out_ << ' ' << e->name << '/' << e->signature.size();
      }
      out_ << "\n";
      continue;
    }
    if (cmd == "NEXT" || cmd == ";") {
      out_ << "false.\n";
      continue;
    }

    std::optional<Query> query;
    try {
      query = parse_query(cmd, registry_);
    } catch (const QueryError& e) {
      out_ << "error: " << e.what() << '\n';
      record(exit_code::kQueryError);
      continue;
    }

    SolutionStream stream = solve(query->to_goal(), SolveOptions{options_.max_steps});
    std::optional<Solution> first;
    try {
      first = stream.next();
    } catch (const BudgetExhausted&) {
      budget_error();
      continue;
    }
    if (!first) {
      out_ << "false.\n";
    } else if (answer_text(*query, *first) == "true") {
      out_ << "true.\n";
    } else {
      show(*query, std::move(stream), *first);
    }
  }

  if (pending) {
    out_ << ".\n";
    pending.reset();
  }
  out_.flush();
  if (in.bad()) record(exit_code::kIo);
  return status;
}

int run_script_file(const std::string& path, const PredicateRegistry& registry, std::ostream& out,
                    SessionOptions options) {
  std::ifstream in(path);
  if (!in) return exit_code::kIo;
  Session session(registry, out, options);
  return session.run_script(in);
}

}  // namespace xlog::repl
