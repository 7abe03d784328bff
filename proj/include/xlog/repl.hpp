#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xlog/goal.hpp"
#include "xlog/term.hpp"
#include "xlog/typed.hpp"

namespace xlog::repl {

// Predicates callable from the query language, keyed by name and arity.
class PredicateRegistry {
 public:
  using Impl = std::function<Goal(std::span<const Term>)>;

  struct Entry {
    std::string name;
    std::vector<TypeTag> signature;
    Impl impl;
  };

  // Throws std::invalid_argument on a duplicate (name, arity) or an
  // undefined argument type.
  void add(std::string name, std::vector<TypeTag> signature, Impl impl);

  template <LogicalType... Ts, typename F>
  void add_typed(std::string name, F f) {
    add(std::move(name), {Ts::logic_type()...}, [f = std::move(f)](std::span<const Term> args) {
      return invoke_typed<Ts...>(f, args, std::index_sequence_for<Ts...>{});
    });
  }

  [[nodiscard]] const Entry* find(std::string_view name, std::size_t arity) const;
  [[nodiscard]] bool has_name(std::string_view name) const;
  [[nodiscard]] std::vector<const Entry*> entries() const;

 private:
  template <LogicalType... Ts, typename F, std::size_t... I>
  static Goal invoke_typed(const F& f, std::span<const Term> args, std::index_sequence<I...>) {
    return f(TermOf<Ts>(args[I])...);
  }

  std::map<std::pair<std::string, std::size_t>, Entry, std::less<>> entries_;
};

// The prelude predicate library under first-order names: plus, isSuc,
// leq, lt, isHead, isTail, member, notMember, sorted, sortedLeq,
// listPlusOne, remainder, append, isGround, plus succeed/true/fail.
PredicateRegistry prelude_registry();

class QueryError : public std::runtime_error {
 public:
  QueryError(const std::string& what, std::size_t column) : std::runtime_error(what), column_(column) {}
  // 1-based column in the input line, 0 when not tied to a position.
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class ParseError : public QueryError {
 public:
  using QueryError::QueryError;
};

class TypeError : public QueryError {
 public:
  using QueryError::QueryError;
};

struct QueryNode;
using QueryExpr = std::shared_ptr<const QueryNode>;

struct QueryNode {
  enum class Kind { Call, Conj, Disj, Not };
  Kind kind;
  const PredicateRegistry::Entry* predicate = nullptr;  // Call
  std::vector<Term> args;                               // Call
  QueryExpr left;                                       // Conj, Disj, Not
  QueryExpr right;                                      // Conj, Disj
};

// A parsed, type-checked query.
class Query {
 public:
  Query(QueryExpr root, std::vector<VarId> variables, std::vector<VarId> wildcards)
      : root_(std::move(root)), variables_(std::move(variables)), wildcards_(std::move(wildcards)) {}

  [[nodiscard]] const QueryExpr& root() const { return root_; }
  // User variables in order of first occurrence.
  [[nodiscard]] const std::vector<VarId>& variables() const { return variables_; }
  [[nodiscard]] const std::vector<VarId>& wildcards() const { return wildcards_; }

  // Every "_" becomes its own exists-introduced variable.
  [[nodiscard]] Goal to_goal() const;

 private:
  QueryExpr root_;
  std::vector<VarId> variables_;
  std::vector<VarId> wildcards_;
};

// query := disj "." ; disj := conj {";" conj} ; conj := atom {"," atom} ;
// atom := NAME ["(" term {"," term} ")"] | "\+" atom | "(" disj ")" ;
// term := VARIABLE | INTEGER | "[" [term {"," term} ["|" term]] "]"
[[nodiscard]] Query parse_query(std::string_view input, const PredicateRegistry& registry);

// Parses a single term of the given type. Variables get that type
// wherever the position demands it.
[[nodiscard]] Term parse_term(std::string_view input, TypeTag type);

struct SessionOptions {
  std::optional<std::uint64_t> max_steps;
  bool quiet = false;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kQueryError = 1;
inline constexpr int kBudget = 2;
inline constexpr int kIo = 3;
}  // namespace exit_code

// Line-driven REPL. Interactive mode prints a "?- " prompt and reads ";" or
// "." after each answer; script mode prints no prompt and treats a "NEXT"
// line as ";" and anything else as the end of the current query.
class Session {
 public:
  Session(const PredicateRegistry& registry, std::ostream& out, SessionOptions options);

  // Returns the exit status: 0, or the code of the first error met.
  int run_interactive(std::istream& in);
  int run_script(std::istream& in);

 private:
  int run(std::istream& in, bool interactive);

  const PredicateRegistry& registry_;
  std::ostream& out_;
  SessionOptions options_;
};

// Opens and replays a script file; exit_code::kIo when it cannot be read.
int run_script_file(const std::string& path, const PredicateRegistry& registry, std::ostream& out,
                    SessionOptions options);

}  // namespace xlog::repl
