#pragma once

#include <functional>
#include <memory>
#include <variant>

#include "xlog/term.hpp"

namespace xlog {

class Goal;

namespace goal_node {

struct Succeed {};
struct Fail {};
struct Unify {
  Term left;
  Term right;
};
struct Conj;
struct Disj;
struct Exists;
struct Scope;
struct CutThen;
struct GroundCheck {
  Term term;
};

}  // namespace goal_node

// Immutable goal tree. Building a goal performs no search and allocates no
// logic variables; all of that happens when a solver walks the tree.
class Goal {
 public:
  using Node = std::variant<goal_node::Succeed, goal_node::Fail, goal_node::Unify, goal_node::Conj,
                            goal_node::Disj, goal_node::Exists, goal_node::Scope, goal_node::CutThen,
                            goal_node::GroundCheck>;

  [[nodiscard]] const Node& node() const;

  template <typename Alt>
  static Goal make(Alt alt);

 private:
  struct Holder;

  explicit Goal(std::shared_ptr<const Holder> holder) : holder_(std::move(holder)) {}

  std::shared_ptr<const Holder> holder_;
};

namespace goal_node {

struct Conj {
  Goal first;
  Goal second;
};
struct Disj {
  Goal first;
  Goal second;
};
// The body receives a fresh variable of the given type at evaluation time.
// It must be pure: the same input term yields the same goal.
struct Exists {
  TypeTag type;
  std::function<Goal(const Term&)> body;
};
// Delimits how far a cut inside body prunes.
struct Scope {
  Goal body;
};
// On the first solution of cond, prunes every untried alternative up to the
// nearest enclosing Scope, then continues with then.
struct CutThen {
  Goal cond;
  Goal then;
};

}  // namespace goal_node

struct Goal::Holder {
  Node node;
};

inline const Goal::Node& Goal::node() const { return holder_->node; }

template <typename Alt>
Goal Goal::make(Alt alt) {
  return Goal(std::make_shared<const Holder>(Holder{Node(std::move(alt))}));
}

[[nodiscard]] Goal succeed();
[[nodiscard]] Goal fail_goal();

// Throws std::invalid_argument when the two terms differ in type.
[[nodiscard]] Goal eq(const Term& a, const Term& b);

[[nodiscard]] Goal conj(Goal first, Goal second);
[[nodiscard]] Goal disj(Goal first, Goal second);
[[nodiscard]] Goal exists(TypeTag type, std::function<Goal(const Term&)> body);
[[nodiscard]] Goal scope(Goal body);
[[nodiscard]] Goal cut_then(Goal cond, Goal then);

// Negation as failure: scope((g ^ fail) | succeed).
[[nodiscard]] Goal neg(Goal g);
[[nodiscard]] Goal neq(const Term& a, const Term& b);

// Succeeds once iff t is ground under the current store.
[[nodiscard]] Goal is_ground_goal(const Term& t);

// Goal operators. Precedence follows C++: & (and) binds tighter than
// ^ (cut), which binds tighter than | (or).
inline Goal operator&(Goal a, Goal b) { return conj(std::move(a), std::move(b)); }
inline Goal operator|(Goal a, Goal b) { return disj(std::move(a), std::move(b)); }
inline Goal operator^(Goal a, Goal b) { return cut_then(std::move(a), std::move(b)); }

}  // namespace xlog
