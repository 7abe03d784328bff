#include <gtest/gtest.h>

#include "support/gen.hpp"
#include "support/reference_unify.hpp"
#include "xlog/logic_type.hpp"
#include "xlog/prelude.hpp"
#include "xlog/unify.hpp"

namespace xlog {
namespace {

using testing::all_lists;
using testing::all_nats;
using testing::list_var;
using testing::nat_var;
using testing::s;
using testing::z;

DatatypeDescriptor nat_descriptor(const std::string& name) {
  return {name, {{"Zero", {}}, {"Suc", {name}}}};
}

TEST(DeriveTest, RejectsMalformedDescriptors) {
  TypeRegistry reg;
  EXPECT_THROW(reg.define({"", {{"A", {}}}}), DerivationError);
  EXPECT_THROW(reg.define({"Empty", {}}), DerivationError);
  EXPECT_THROW(reg.define({"Dup", {{"A", {}}, {"A", {}}}}), DerivationError);
  EXPECT_THROW(reg.define({"Dangling", {{"A", {"Nowhere"}}}}), DerivationError);
  EXPECT_THROW(reg.define({"Unnamed", {{"", {}}}}), DerivationError);
  reg.define(nat_descriptor("N"));
  EXPECT_THROW(reg.define(nat_descriptor("N")), DerivationError);
  EXPECT_NE(reg.find_or_define(nat_descriptor("N")), nullptr);
}

TEST(DeriveTest, DeclaredButUndefinedTypeHasNoCapability) {
  TypeRegistry reg;
  TypeTag t = reg.declare("Later");
  EXPECT_FALSE(t->defined());
  EXPECT_THROW((void)t->capability(), std::logic_error);
  EXPECT_THROW(Term::compound(t, 0, {}), std::invalid_argument);
}

TEST(DeriveTest, StepExamples) {
  const auto& cap = Nat::logic_type()->capability();
  Term a = nat_var("a");
  Term b = nat_var("b");
  auto r = cap.unify_step(s(a).payload(), s(b).payload(), {});
  ASSERT_TRUE(r);
  EXPECT_EQ(r, unify(a, b, {}));
  EXPECT_FALSE(cap.unify_step(z().payload(), s(nat_var("x")).payload(), {}));

  const auto& lcap = List<Nat>::logic_type()->capability();
  const VarId v = VarId::user("v", Nat::logic_type());
  for (const auto& h : {nat_var("v"), z(), s(nat_var("v"))}) {
    for (const auto& t : {list_var("t"), cons_term(nat_var("v"), testing::nil_nat()), testing::nil_nat()}) {
      Term cell = cons_term(h, t);
      EXPECT_EQ(lcap.occurs(v, cell.payload()), occurs_in(v, h, {}) || occurs_in(v, t, {}));
    }
  }
}

TEST(DeriveTest, DefaultPrinterIsPrefixSyntax) {
  TypeRegistry reg;
  TypeTag n = reg.define(nat_descriptor("N"));
  Term two = Term::compound(n, "Suc", {Term::compound(n, "Suc", {Term::compound(n, "Zero", {})})});
  EXPECT_EQ(pretty(two), "Suc(Suc(Zero))");
  reg.override_pretty(n, [](const Compound&) { return std::string("n"); });
  EXPECT_EQ(pretty(two), "n");
}

TEST(DeriveTest, MutualRecursion) {
  TypeRegistry reg;
  reg.declare("Forest");
  TypeTag tree = reg.define({"Tree", {{"Leaf", {}}, {"Node", {"Forest"}}}});
  TypeTag forest = reg.define({"Forest", {{"None", {}}, {"Some", {"Tree", "Forest"}}}});
  Term leaf = Term::compound(tree, "Leaf", {});
  Term none = Term::compound(forest, "None", {});
  Term fv = Term::variable(VarId::user("f", forest));
  Term t1 = Term::compound(tree, "Node", {Term::compound(forest, "Some", {leaf, fv})});
  Term t2 = Term::compound(tree, "Node", {Term::compound(forest, "Some", {leaf, none})});
  auto r = unify(t1, t2, {});
  ASSERT_TRUE(r);
  EXPECT_EQ(resolve(t1, *r), t2);
  EXPECT_EQ(pretty(t2), "Node(Some(Leaf, None))");
  Term cyc = Term::compound(tree, "Node", {Term::compound(forest, "Some", {leaf, fv})});
  EXPECT_FALSE(unify(fv, Term::compound(forest, "Some", {cyc, none}), {}));
}

TEST(DeriveTest, ComposesListOverNat) {
  Term l = list_term({Nat::numeral(1), nat_var("x")}, Nat::logic_type(), list_var("xs"));
  Term g = list_term({Nat::numeral(1), Nat::numeral(2), Nat::numeral(3)}, Nat::logic_type());
  auto r = unify(l, g, {});
  ASSERT_TRUE(r);
  EXPECT_EQ(resolve(l, *r), g);
}

TEST(DeriveProperty, Deterministic) {
  TypeRegistry r1;
  TypeRegistry r2;
  TypeTag a = r1.define(nat_descriptor("N"));
  TypeTag b = r2.define(nat_descriptor("N"));
  auto num = [](TypeTag t, int n, const std::optional<std::string>& var) {
    Term out = var ? Term::variable(VarId::user(*var, t)) : Term::compound(t, "Zero", {});
    for (int i = 0; i < n; ++i) out = Term::compound(t, "Suc", {out});
    return out;
  };
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= 3; ++j) {
      for (const auto& va : std::vector<std::optional<std::string>>{std::nullopt, "x"}) {
        for (const auto& vb : std::vector<std::optional<std::string>>{std::nullopt, "y"}) {
          auto ra = unify(num(a, i, va), num(a, j, vb), {});
          auto rb = unify(num(b, i, va), num(b, j, vb), {});
          ASSERT_EQ(ra.has_value(), rb.has_value());
          if (ra) {
            EXPECT_EQ(ra->size(), rb->size());
          }
        }
      }
    }
  }
}

TEST(DeriveProperty, MatchesHandWrittenNat) {
  testing::ReferenceUnifier ref;
  const auto nats = all_nats(4, {nat_var("x"), nat_var("y")});
  const BindingStore pre = BindingStore{}.bind(VarId::user("y", Nat::logic_type()), s(nat_var("x")));
  const auto& cap = Nat::logic_type()->capability();
  const VarId x = VarId::user("x", Nat::logic_type());
  for (const auto& a : nats) {
    EXPECT_EQ(occurs(x, a), ref.occurs(x, a));
    EXPECT_EQ(is_ground(a), ref.is_ground(a));
    EXPECT_EQ(substitute(x, Nat::numeral(2), a), ref.substitute(x, Nat::numeral(2), a));
    for (const auto& b : nats) {
      for (const auto& st : {BindingStore{}, pre}) {
        ASSERT_EQ(unify(a, b, st), ref.unify(a, b, st)) << pretty(a) << " ~ " << pretty(b);
        if (!a.is_var() && !b.is_var()) {
          EXPECT_EQ(cap.unify_step(a.payload(), b.payload(), st), ref.step(a.payload(), b.payload(), a.type(), st));
        }
      }
    }
  }
}

TEST(DeriveProperty, MatchesHandWrittenListSample) {
  testing::ReferenceUnifier ref;
  const auto lists = all_lists(3, {nat_var("x")}, {list_var("xs")});
  const VarId xs = VarId::user("xs", List<Nat>::logic_type());
  for (const auto& a : lists) {
    EXPECT_EQ(occurs(xs, a), ref.occurs(xs, a));
    EXPECT_EQ(is_ground(a), ref.is_ground(a));
    EXPECT_EQ(substitute(xs, testing::nil_nat(), a), ref.substitute(xs, testing::nil_nat(), a));
    for (const auto& b : lists) {
      ASSERT_EQ(unify(a, b, {}), ref.unify(a, b, {})) << pretty(a) << " ~ " << pretty(b);
    }
  }
}

}  // namespace
}  // namespace xlog
