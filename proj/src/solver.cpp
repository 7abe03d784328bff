#include "xlog/solver.hpp"

#include <stdexcept>
#include <type_traits>

#include "xlog/unify.hpp"

namespace xlog {

namespace {

// Continuation: a persistent stack of pending work shared between choice
// points. A frame either runs a goal or fires a cut.
struct Frame;
using Cont = std::shared_ptr<const Frame>;

struct Frame {
  enum class Kind { Run, Cut };
  Kind kind;
  std::optional<Goal> goal;
  // Choice-point height of the nearest enclosing scope. Run frames pass it
  // to cuts inside their goal; Cut frames prune down to it.
  std::size_t barrier;
  Cont next;
};

Cont push_run(Goal g, std::size_t barrier, Cont next) {
  return std::make_shared<const Frame>(Frame{Frame::Kind::Run, std::move(g), barrier, std::move(next)});
}

Cont push_cut(std::size_t barrier, Cont next) {
  return std::make_shared<const Frame>(Frame{Frame::Kind::Cut, std::nullopt, barrier, std::move(next)});
}

struct ChoicePoint {
  Goal alternative;
  std::size_t barrier;
  Cont cont;
  BindingStore store;
};

}  // namespace

struct SolutionStream::Machine {
  SolveOptions options;
  Cont cont;
  BindingStore store;
  std::uint64_t counter = 0;
  std::vector<ChoicePoint> choices;
  std::uint64_t steps = 0;
  bool resume_by_backtracking = false;
  bool done = false;

  // Restores the most recent choice point. False when none is left.
  bool backtrack() {
    if (choices.empty()) {
      done = true;
      return false;
    }
    ChoicePoint cp = std::move(choices.back());
    choices.pop_back();
    store = std::move(cp.store);
    cont = push_run(std::move(cp.alternative), cp.barrier, std::move(cp.cont));
    return true;
  }

  void tick() {
    ++steps;
    if (options.max_steps && steps > *options.max_steps) throw BudgetExhausted(*options.max_steps);
  }

  std::optional<SolverState> run() {
    if (done) return std::nullopt;
    if (resume_by_backtracking && !backtrack()) return std::nullopt;
    resume_by_backtracking = true;

    while (true) {
      if (!cont) return SolverState{store, counter};

      Cont frame = cont;
      cont = frame->next;
      if (frame->kind == Frame::Kind::Cut) {
        if (choices.size() > frame->barrier) {
          choices.erase(choices.begin() + static_cast<std::ptrdiff_t>(frame->barrier), choices.end());
        }
        continue;
      }

      tick();
      const std::size_t barrier = frame->barrier;
      bool ok = std::visit(
          [&](const auto& node) -> bool {
            using N = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<N, goal_node::Succeed>) {
              return true;
            } else if constexpr (std::is_same_v<N, goal_node::Fail>) {
              return false;
            } else if constexpr (std::is_same_v<N, goal_node::Unify>) {
              auto next = unify(node.left, node.right, store);
              if (!next) return false;
              store = std::move(*next);
              return true;
            } else if constexpr (std::is_same_v<N, goal_node::Conj>) {
              cont = push_run(node.first, barrier, push_run(node.second, barrier, std::move(cont)));
              return true;
            } else if constexpr (std::is_same_v<N, goal_node::Disj>) {
              choices.push_back(ChoicePoint{node.second, barrier, cont, store});
              cont = push_run(node.first, barrier, std::move(cont));
              return true;
            } else if constexpr (std::is_same_v<N, goal_node::Exists>) {
              Term fresh = Term::variable(VarId::fresh(counter++, node.type));
              cont = push_run(node.body(fresh), barrier, std::move(cont));
              return true;
            } else if constexpr (std::is_same_v<N, goal_node::Scope>) {
              cont = push_run(node.body, choices.size(), std::move(cont));
              return true;
            } else if constexpr (std::is_same_v<N, goal_node::CutThen>) {
              cont = push_run(node.cond, barrier, push_cut(barrier, push_run(node.then, barrier, std::move(cont))));
              return true;
            } else if constexpr (std::is_same_v<N, goal_node::GroundCheck>) {
              return is_ground_term(node.term, store);
            }
          },
          frame->goal->node());

      if (!ok && !backtrack()) return std::nullopt;
    }
  }
};

SolutionStream::SolutionStream(Goal goal, SolverState initial, SolveOptions options)
    : machine_(std::make_unique<Machine>()) {
  machine_->options = options;
  machine_->store = std::move(initial.store);
  machine_->counter = initial.counter;
  // Top-level cuts prune to the query root.
  machine_->cont = push_run(std::move(goal), 0, nullptr);
}

SolutionStream::~SolutionStream() = default;
SolutionStream::SolutionStream(SolutionStream&&) noexcept = default;
SolutionStream& SolutionStream::operator=(SolutionStream&&) noexcept = default;

std::optional<SolverState> SolutionStream::next_state() { return machine_->run(); }

std::optional<Solution> SolutionStream::next() {
  auto state = machine_->run();
  if (!state) return std::nullopt;
  return project(state->store, state->counter);
}

std::uint64_t SolutionStream::steps() const { return machine_->steps; }

SolutionStream solve(Goal goal, SolveOptions options) { return solve(std::move(goal), SolverState{}, options); }

SolutionStream solve(Goal goal, SolverState initial, SolveOptions options) {
  return SolutionStream(std::move(goal), std::move(initial), options);
}

Solution project(const BindingStore& store, std::uint64_t counter) {
  BindingStore visible;
  store.for_each([&](const VarId& v, const Term&) {
    if (v.is_generated()) return;
    visible = visible.bind(v, resolve(Term::variable(v), store));
  });
  return Solution(std::move(visible), counter);
}

namespace {

std::vector<Term> collect(const Term& v, const Goal& goal, std::optional<std::size_t> limit, SolveOptions options) {
  if (!v.is_var()) throw std::invalid_argument("find_all expects a variable term");
  std::vector<Term> out;
  SolutionStream stream = solve(goal, options);
  while (!limit || out.size() < *limit) {
    auto state = stream.next_state();
    if (!state) break;
    out.push_back(resolve(v, state->store));
  }
  return out;
}

}  // namespace

std::vector<Term> find_all(const Term& v, const Goal& goal, SolveOptions options) {
  return collect(v, goal, std::nullopt, options);
}

std::vector<Term> find_all_n(const Term& v, const Goal& goal, std::size_t n, SolveOptions options) {
  return collect(v, goal, n, options);
}

bool holds(const Goal& goal, SolveOptions options) { return solve(goal, options).next_state().has_value(); }

}  // namespace xlog
