#include "xlog/prelude.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "xlog/unify.hpp"

namespace xlog {

using namespace notation;

namespace {

constexpr std::uint32_t kZero = 0;
constexpr std::uint32_t kSuc = 1;
constexpr std::uint32_t kNil = 0;
constexpr std::uint32_t kCons = 1;

std::string pretty_nat(const Compound& p) {
  std::uint64_t layers = 0;
  const Compound* cur = &p;
  while (cur->ctor == kSuc) {
    ++layers;
    const Term& child = cur->children[0];
    if (child.is_var()) return std::to_string(layers) + " + " + child.var().name();
    cur = &child.payload();
  }
  return std::to_string(layers);
}

std::string pretty_list(const Compound& p) {
  std::vector<std::string> elems;
  const Compound* cur = &p;
  while (cur->ctor == kCons) {
    elems.push_back(pretty(cur->children[0]));
    const Term& tail = cur->children[1];
    if (tail.is_var()) {
      std::string out;
      for (const std::string& e : elems) out += e + " : ";
      return out + tail.var().name();
    }
    cur = &tail.payload();
  }
  std::string out = "[";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i > 0) out += ", ";
    out += elems[i];
  }
  return out + "]";
}

}  // namespace

TypeTag Nat::logic_type() {
  static const TypeTag type = [] {
    TypeRegistry& reg = TypeRegistry::global();
    TypeTag t = reg.find_or_define({"Nat", {{"Zero", {}}, {"Suc", {"Nat"}}}});
    reg.override_pretty(t, pretty_nat);
    return t;
  }();
  return type;
}

Term Nat::numeral(std::uint64_t n) {
  static const Term zero_term = Term::compound(logic_type(), kZero, {});
  Term t = zero_term;
  for (std::uint64_t i = 0; i < n; ++i) t = Term::compound(logic_type(), kSuc, {t});
  return t;
}

TypeTag list_type(TypeTag element) {
  if (element == nullptr) throw std::invalid_argument("list element type is null");
  static std::mutex mu;
  std::lock_guard lock(mu);
  const std::string name = "List(" + element->name() + ")";
  TypeRegistry& reg = TypeRegistry::global();
  if (TypeTag existing = reg.find(name); existing != nullptr && existing->defined()) return existing;
  TypeTag t = reg.define({name, {{"Nil", {}}, {"Cons", {element->name(), name}}}});
  reg.override_pretty(t, pretty_list);
  return t;
}

std::optional<TypeTag> list_element_type(TypeTag t) {
  if (t == nullptr || !t->defined()) return std::nullopt;
  auto ctors = t->constructors();
  if (ctors.size() != 2 || ctors[kCons].children.size() != 2) return std::nullopt;
  TypeTag element = ctors[kCons].children[0];
  if (t->name() != "List(" + element->name() + ")" || list_type(element) != t) return std::nullopt;
  return element;
}

Term nil_term(TypeTag element) { return Term::compound(list_type(element), kNil, {}); }

Term cons_term(const Term& head, const Term& tail) {
  return Term::compound(list_type(head.type()), kCons, {head, tail});
}

Term list_term(const std::vector<Term>& elems, TypeTag element, const std::optional<Term>& tail) {
  Term out = tail ? *tail : nil_term(element);
  if (out.type() != list_type(element)) throw std::invalid_argument("list tail has type " + out.type()->name());
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) out = cons_term(*it, out);
  return out;
}

NatTerm zero() { return NatTerm(Nat::numeral(0)); }

NatTerm suc(const NatTerm& n) { return NatTerm(Term::compound(Nat::logic_type(), kSuc, {n.term()})); }

NatTerm nat(std::uint64_t n) { return NatTerm(Nat::numeral(n)); }

std::uint64_t nat_value(const Term& t) {
  if (t.type() != Nat::logic_type()) throw std::invalid_argument("nat_value on a term of type " + t.type()->name());
  std::uint64_t n = 0;
  const Term* cur = &t;
  while (true) {
    if (cur->is_var()) throw std::invalid_argument("nat_value on a non-ground term");
    const Compound& p = cur->payload();
    if (p.ctor == kZero) return n;
    ++n;
    cur = &p.children[0];
  }
}

Goal plus(const NatTerm& a, const NatTerm& b, const NatTerm& c) {
  return ((a == zero()) & (b == c)) |
         exists([=](NatTerm a1, NatTerm c1) { return (a == suc(a1)) & (c == suc(c1)) & plus(a1, b, c1); });
}

Goal is_suc(const NatTerm& x, const NatTerm& y) { return suc(x) == y; }

Goal leq(const NatTerm& x, const NatTerm& y) {
  return exists([=](NatTerm x1, NatTerm y1) {
    return (x == zero()) | ((x == suc(x1)) & (y == suc(y1)) & leq(x1, y1));
  });
}

Goal lt(const NatTerm& x, const NatTerm& y) { return leq(suc(x), y); }

Goal remainder(const NatTerm& n, const NatTerm& q, const NatTerm& r) {
  return scope(((q == zero()) ^ fail_goal()) |
               (lt(n, q) & (n == r)) |
               exists([=](NatTerm diff) { return plus(q, diff, n) & remainder(diff, q, r); }));
}

Goal sorted(const NatListTerm& v) {
  return (v == nil<Nat>()) |
         exists([=](NatTerm e1) { return v == cons(e1, nil<Nat>()); }) |
         exists([=](NatTerm e1, NatTerm e2, NatListTerm ts) {
           return (v == cons(e1, cons(e2, ts))) & leq(e1, e2) & sorted(cons(e2, ts));
         });
}

Goal list_plus_one(const NatListTerm& l1, const NatListTerm& l2) {
  return map_p<Nat, Nat>(is_suc, l1, l2);
}

}  // namespace xlog
