// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/answers.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"
#include "support/reference_unify.hpp"
#include "xlog/prelude.hpp"
#include "xlog/repl.hpp"
#include "xlog/solver.hpp"
#include "xlog/unify.hpp"

namespace {

using namespace xlog;
using namespace xlog::notation;
using xlog::testing::canonical_answer;
using xlog::testing::EagerOracle;

// Collects failures for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t count = 0;
  std::size_t failed = 0;

  void expect(bool ok, const std::string& what) {
    ++count;
    if (ok) return;
    ++failed;
    if (failures.size() < 5) failures.push_back(what);
  }
  void expect_eq(const std::string& got, const std::string& want, const std::string& what) {
    expect(got == want, what + ": got \"" + got + "\", want \"" + want + "\"");
  }
};

const repl::PredicateRegistry& registry() {
  static const repl::PredicateRegistry reg = repl::prelude_registry();
  return reg;
}

std::string run_script(const std::string& text, std::uint64_t max_steps = 1000000) {
  std::istringstream in(text);
  std::ostringstream out;
  repl::Session session(registry(), out, repl::SessionOptions{max_steps, true});
  session.run_script(in);
  return out.str();
}

VarId nv(const std::string& n) { return VarId::user(n, Nat::logic_type()); }

void transcripts(Check& c) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"fail.\n", "false.\n"},
      {"succeed, fail.\n", "false.\n"},
      {"succeed, (fail ; succeed).\n", "true.\n"},
      {"isSuc(1, 2).\n", "true.\n"},
      {"isSuc(1, 1).\n", "false.\n"},
      {"isSuc(1, X).\n", "X = 2.\n"},
      {"isSuc(X, 1).\n", "X = 0.\n"},
      {"plus(2, B, 3).\n", "B = 1.\n"},
      {"plus(0, 0, 1).\n", "false.\n"},
      {"plus(A, 1, C).\nNEXT\n", "A = 0, C = 1 ;\nA = 1, C = 2 .\n"},
      {"plus(1, X, 5).\n", "X = 4.\n"},
      {"isTail([1,2,3], [2,3]).\n", "true.\n"},
  };
  for (const auto& [in, want] : cases) c.expect_eq(run_script(in), want, in.substr(0, in.find('\n')));
}

void cut_and_negation(Check& c) {
  NatTerm r = "R";
  for (std::uint64_t n = 0; n <= 5; ++n) {
    try {
      SolutionStream stream = solve(remainder(n, 0, r), SolveOptions{100000});
      c.expect(!stream.next(), "remainder(" + std::to_string(n) + ", 0, R) has an answer");
    } catch (const BudgetExhausted&) {
      c.expect(false, "remainder(" + std::to_string(n) + ", 0, R) exceeded 1e5 steps");
    }
  }
  for (std::uint64_t n = 0; n <= 8; ++n) {
    for (std::uint64_t q = 1; q <= 4; ++q) {
      auto got = testing::solver_answers(remainder(n, q, r), {nv("R")});
      c.expect(got == std::vector<std::string>{"R=" + std::to_string(n % q) + ";"},
               "remainder(" + std::to_string(n) + ", " + std::to_string(q) + ")");
    }
  }
  c.expect(testing::count_solutions(neg(fail_goal())) == 1, "neg(fail) succeeds once");
  c.expect(testing::count_solutions(NatTerm("X") != NatTerm("Y")) == 0, "X =/= Y with both free fails");
  auto contained = testing::solver_answers((remainder(5, 0, r) | (r == 7)), {nv("R")});
  c.expect(contained == std::vector<std::string>{"R=7;"}, "later disjunct after remainder(5,0,R)");
  auto contained2 = testing::solver_answers(((remainder(5, 2, r) & (r == 0)) | (r == 3)), {nv("R")});
  c.expect(contained2 == std::vector<std::string>{"R=3;"}, "later disjunct after remainder(5,2,R), R=0");
  auto outer = testing::solver_answers((((r == 4) | (r == 5)) & remainder(9, 4, 1)), {nv("R")});
  c.expect(outer == std::vector<std::string>{"R=4;", "R=5;"}, "cut inside remainder leaves outer choices");
}

void unification_properties(Check& c) {
  std::mt19937 rng(20240611);
  const std::vector<Term> nvars{testing::nat_var("x"), testing::nat_var("y"), testing::nat_var("w")};
  const std::vector<Term> lvars{testing::list_var("xs"), testing::list_var("ys")};
  std::size_t pairs = 0;
  for (int i = 0; i < 1200; ++i) {
    const bool lists = i % 2 == 1;
    Term a = lists ? testing::random_list(rng, 5, nvars, lvars) : testing::random_nat(rng, 5, nvars);
    Term b = lists ? testing::random_list(rng, 5, nvars, lvars) : testing::random_nat(rng, 5, nvars);
    Term base_l = lists ? testing::random_list(rng, 3, nvars, lvars) : testing::random_nat(rng, 3, nvars);
    Term base_r = lists ? testing::random_list(rng, 3, nvars, lvars) : testing::random_nat(rng, 3, nvars);
    BindingStore base = unify(base_l, base_r, {}).value_or(BindingStore{});
    const BindingStore snapshot = base;
    ++pairs;
    const std::string tag = pretty(a) + " ~ " + pretty(b);

    auto ab = unify(a, b, base);
    auto ba = unify(b, a, base);
    c.expect(ab.has_value() == ba.has_value(), "symmetry: " + tag);
    if (ab) c.expect(resolve(a, *ab) == resolve(b, *ab), "equalised (a,b): " + tag);
    if (ba) c.expect(resolve(a, *ba) == resolve(b, *ba), "equalised (b,a): " + tag);
    if (!ab) c.expect(base == snapshot && base.size() == snapshot.size(), "failed unify kept store: " + tag);

    for (const Term& t : {a, b}) {
      if (!is_ground(t)) continue;
      auto self = unify(t, t, base);
      c.expect(self && self->size() == base.size(), "ground self-unify: " + pretty(t));
    }

    // Strict superterms of a variable.
    if (!lists) {
      const Term& v = nvars[i % nvars.size()];
      Term sup = testing::s(v);
      for (int k = rng() % 4; k > 0; --k) sup = testing::s(sup);
      c.expect(!unify(v, sup, {}), "occurs: " + pretty(v) + " ~ " + pretty(sup));
    } else {
      const Term& v = lvars[i % lvars.size()];
      Term sup = cons_term(testing::random_nat(rng, 2, nvars), v);
      for (int k = rng() % 3; k > 0; --k) sup = cons_term(testing::random_nat(rng, 2, nvars), sup);
      c.expect(!unify(v, sup, {}), "occurs: " + pretty(v) + " ~ " + pretty(sup));
      c.expect(!unify(sup, v, {}), "occurs (flipped): " + pretty(sup) + " ~ " + pretty(v));
    }
  }
  c.expect(pairs >= 1000, "at least 1000 pairs");
}

// Argument domains for one predicate position.
std::vector<std::optional<Term>> domain(TypeTag t) {
  std::vector<std::optional<Term>> out{std::nullopt};  // nullopt: a query variable
  if (t == Nat::logic_type()) {
    for (std::uint64_t n = 0; n <= 6; ++n) out.emplace_back(Nat::numeral(n));
  } else {
    for (const auto& xs : testing::small_lists({0, 1, 2}, 4)) out.emplace_back(testing::ground_list(xs));
  }
  return out;
}

void oracle_equivalence(Check& c, std::size_t& compared, std::size_t& infinite) {
  constexpr std::size_t kMaxTuples = 20000;
  std::mt19937 rng(99);
  for (const auto* entry : registry().entries()) {
    std::vector<std::vector<std::optional<Term>>> doms;
    std::size_t total = 1;
    for (TypeTag t : entry->signature) {
      doms.push_back(domain(t));
      total *= doms.back().size();
    }
    const bool sample = total > kMaxTuples;
    const std::size_t n = sample ? kMaxTuples : total;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t code = sample ? rng() % total : k;
      std::vector<Term> args;
      std::vector<VarId> vars;
      std::string label = entry->name + "(";
      for (std::size_t i = 0; i < doms.size(); ++i) {
        const auto& pick = doms[i][code % doms[i].size()];
        code /= doms[i].size();
        if (pick) {
          args.push_back(*pick);
        } else {
          VarId v = VarId::user("V" + std::to_string(i), entry->signature[i]);
          vars.push_back(v);
          args.push_back(Term::variable(v));
        }
        label += (i ? ", " : "") + pretty(args.back());
      }
      label += ")";
      const Goal goal = entry->impl(args);
      std::vector<std::string> expected;
      try {
        expected = testing::oracle_answers(goal, vars, 5000);
      } catch (const EagerOracle::TooDeep&) {
        ++infinite;  // Search tree not finite on this domain.
        continue;
      }
      std::vector<std::string> got;
      try {
        got = testing::solver_answers(goal, vars, std::nullopt, SolveOptions{10000000});
      } catch (const BudgetExhausted&) {
        c.expect(false, label + ": solver ran out of budget");
        continue;
      }
      ++compared;
      c.expect(got == expected, label + ": " + std::to_string(got.size()) + " vs " + std::to_string(expected.size()));
    }
  }
}

void laziness(Check& c) {
  SolutionStream stream = solve(plus("A", 1, "C"));
  auto first = stream.next();
  c.expect(first.has_value() && stream.steps() <= 100, "first answer of plus(A,1,C) within 100 steps");
  NatTerm x = "X";
  auto members = find_all(x, member<Nat>(x, {1, 2, 3}));
  std::vector<std::uint64_t> values;
  for (const auto& t : members) values.push_back(nat_value(t));
  c.expect(values == std::vector<std::uint64_t>{1, 2, 3}, "find_all member order");
  NatTerm a = "A";
  c.expect(find_all(a, plus(a, "B", 3)).size() == 4, "plus(A,B,3) has 4 answers");
}

void derivation(Check& c) {
  testing::ReferenceUnifier ref;
  const VarId x = VarId::user("x", Nat::logic_type());
  const VarId xs = VarId::user("xs", List<Nat>::logic_type());
  const auto& nat_cap = Nat::logic_type()->capability();
  const auto& list_cap = List<Nat>::logic_type()->capability();

  const auto nats = testing::all_nats(4, {testing::nat_var("x"), testing::nat_var("y")});
  const BindingStore pre = BindingStore{}.bind(VarId::user("y", Nat::logic_type()), testing::s(testing::nat_var("x")));
  for (const auto& a : nats) {
    c.expect(occurs(x, a) == ref.occurs(x, a), "nat occurs " + pretty(a));
    c.expect(is_ground(a) == ref.is_ground(a), "nat ground " + pretty(a));
    c.expect(substitute(x, Nat::numeral(1), a) == ref.substitute(x, Nat::numeral(1), a), "nat subst " + pretty(a));
    for (const auto& b : nats) {
      for (const auto& st : {BindingStore{}, pre}) {
        c.expect(unify(a, b, st) == ref.unify(a, b, st), "nat unify " + pretty(a) + " ~ " + pretty(b));
        if (!a.is_var() && !b.is_var()) {
          c.expect(nat_cap.unify_step(a.payload(), b.payload(), st) == ref.step(a.payload(), b.payload(), a.type(), st),
                   "nat step " + pretty(a) + " ~ " + pretty(b));
        }
      }
    }
  }

  const auto lists = testing::all_lists(4, {testing::nat_var("x")}, {testing::list_var("xs")});
  for (const auto& a : lists) {
    c.expect(occurs(xs, a) == ref.occurs(xs, a), "list occurs " + pretty(a));
    c.expect(occurs(x, a) == ref.occurs(x, a), "list occurs elem " + pretty(a));
    c.expect(is_ground(a) == ref.is_ground(a), "list ground " + pretty(a));
    c.expect(substitute(xs, testing::nil_nat(), a) == ref.substitute(xs, testing::nil_nat(), a),
             "list subst " + pretty(a));
    for (const auto& b : lists) {
      c.expect(unify(a, b, {}) == ref.unify(a, b, {}), "list unify " + pretty(a) + " ~ " + pretty(b));
      if (!a.is_var() && !b.is_var()) {
        c.expect(list_cap.unify_step(a.payload(), b.payload(), {}) == ref.step(a.payload(), b.payload(), a.type(), {}),
                 "list step " + pretty(a) + " ~ " + pretty(b));
      }
    }
  }
}

void round_trip(Check& c) {
  for (std::uint64_t n = 0; n <= 20; ++n) {
    Term t = Nat::numeral(n);
    c.expect(repl::parse_term(pretty(t), Nat::logic_type()) == t, "nat " + std::to_string(n));
  }
  for (const auto& xs : testing::small_lists({0, 1, 2, 20}, 4)) {
    Term t = testing::ground_list(xs);
    c.expect(repl::parse_term(pretty(t), List<Nat>::logic_type()) == t, "list " + pretty(t));
  }
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const std::string& name, const std::function<void(Check&)>& body,
                    const std::function<std::string()>& extra = {}) {
    Check c;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    if (!ok) ++failed;
    std::printf("[%s] %d. %s (%zu checks%s)\n", ok ? "PASS" : "FAIL", id, name.c_str(), c.count,
                extra ? extra().c_str() : "");
    for (const auto& f : c.failures) std::printf("       %s\n", f.c_str());
    if (c.failed > c.failures.size()) std::printf("       ... %zu failures in total\n", c.failed);
  };

  std::size_t compared = 0;
  std::size_t infinite = 0;
  report(1, "Transcript replay", transcripts);
  report(2, "Cut and negation", cut_and_negation);
  report(3, "Unification properties", unification_properties);
  report(
      4, "Oracle equivalence", [&](Check& c) { oracle_equivalence(c, compared, infinite); },
      [&] { return ", " + std::to_string(compared) + " queries compared, " + std::to_string(infinite) + " infinite skipped"; });
  report(5, "Laziness and relational checks", laziness);
  report(6, "Derivation equivalence", derivation);
  report(7, "Pretty/parse round trip", round_trip);
  return failed == 0 ? 0 : 1;
}
