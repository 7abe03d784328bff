#include "xlog/goal.hpp"

#include <stdexcept>

#include "xlog/logic_type.hpp"

namespace xlog {

Goal succeed() { return Goal::make(goal_node::Succeed{}); }

Goal fail_goal() { return Goal::make(goal_node::Fail{}); }

Goal eq(const Term& a, const Term& b) {
  if (a.type() != b.type()) {
    throw std::invalid_argument("=== between " + a.type()->name() + " and " + b.type()->name());
  }
  return Goal::make(goal_node::Unify{a, b});
}

Goal conj(Goal first, Goal second) { return Goal::make(goal_node::Conj{std::move(first), std::move(second)}); }

Goal disj(Goal first, Goal second) { return Goal::make(goal_node::Disj{std::move(first), std::move(second)}); }

Goal exists(TypeTag type, std::function<Goal(const Term&)> body) {
  if (type == nullptr) throw std::invalid_argument("exists needs a type");
  if (!body) throw std::invalid_argument("exists needs a body");
  return Goal::make(goal_node::Exists{type, std::move(body)});
}

Goal scope(Goal body) { return Goal::make(goal_node::Scope{std::move(body)}); }

Goal cut_then(Goal cond, Goal then) {
  return Goal::make(goal_node::CutThen{std::move(cond), std::move(then)});
}

Goal neg(Goal g) { return scope(disj(cut_then(std::move(g), fail_goal()), succeed())); }

Goal neq(const Term& a, const Term& b) { return neg(eq(a, b)); }

Goal is_ground_goal(const Term& t) { return Goal::make(goal_node::GroundCheck{t}); }

}  // namespace xlog
