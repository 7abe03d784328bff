#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "xlog/binding_store.hpp"
#include "xlog/goal.hpp"
#include "xlog/term.hpp"

namespace xlog {

struct SolverState {
  BindingStore store;
  std::uint64_t counter = 0;  // next fresh variable index
};

struct SolveOptions {
  // Upper bound on goal-node expansions for the whole stream.
  std::optional<std::uint64_t> max_steps;
};

class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t steps)
      : std::runtime_error("step budget exhausted after " + std::to_string(steps) + " steps"), steps_(steps) {}
  [[nodiscard]] std::uint64_t steps() const { return steps_; }

 private:
  std::uint64_t steps_;
};

// An answer substitution: bindings of user-named variables only, each fully
// resolved.
class Solution {
 public:
  Solution(BindingStore bindings, std::uint64_t counter)
      : bindings_(std::move(bindings)), counter_(counter) {}

  [[nodiscard]] const BindingStore& bindings() const { return bindings_; }
  [[nodiscard]] std::uint64_t counter_at_yield() const { return counter_; }
  [[nodiscard]] bool empty() const { return bindings_.empty(); }

  // Resolved value of a variable, nullopt when the solution leaves it free.
  [[nodiscard]] std::optional<Term> value(const VarId& v) const {
    if (const Term* t = bindings_.lookup(v)) return *t;
    return std::nullopt;
  }

 private:
  BindingStore bindings_;
  std::uint64_t counter_;
};

// Lazily evaluated, depth-first, left-to-right solution sequence. Each call
// to next() runs only the search needed to reach the next solution.
class SolutionStream {
 public:
  SolutionStream(Goal goal, SolverState initial, SolveOptions options);
  ~SolutionStream();
  SolutionStream(SolutionStream&&) noexcept;
  SolutionStream& operator=(SolutionStream&&) noexcept;

  // nullopt once the search space is exhausted. Throws BudgetExhausted when
  // a step budget was given and is used up.
  std::optional<Solution> next();

  // Same as next() but also returns the raw store, fresh variables included.
  std::optional<SolverState> next_state();

  [[nodiscard]] std::uint64_t steps() const;

 private:
  struct Machine;
  std::unique_ptr<Machine> machine_;
};

[[nodiscard]] SolutionStream solve(Goal goal, SolveOptions options = {});
[[nodiscard]] SolutionStream solve(Goal goal, SolverState initial, SolveOptions options = {});

// Restricts a raw store to user-named variables, fully resolved.
[[nodiscard]] Solution project(const BindingStore& store, std::uint64_t counter);

// Resolved value of v under every solution, in order. Does not terminate
// when the goal has infinitely many solutions; use find_all_n for those.
[[nodiscard]] std::vector<Term> find_all(const Term& v, const Goal& goal, SolveOptions options = {});
[[nodiscard]] std::vector<Term> find_all_n(const Term& v, const Goal& goal, std::size_t n,
                                           SolveOptions options = {});

// True iff the goal has at least one solution; searches for the first only.
[[nodiscard]] bool holds(const Goal& goal, SolveOptions options = {});

}  // namespace xlog
