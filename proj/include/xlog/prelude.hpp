#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "xlog/goal.hpp"
#include "xlog/typed.hpp"

namespace xlog {

// Peano naturals: Zero | Suc(Nat). Ground terms print as decimals and
// partially known ones as "k + x".
struct Nat {
  static TypeTag logic_type();
  static Term numeral(std::uint64_t n);
};

// Type "List(<elem>)" with constructors Nil | Cons(elem, List(elem)),
// created on first use. Nil-terminated lists print as "[a, b]" and lists
// with a variable tail as "a : b : xs".
TypeTag list_type(TypeTag element);

// Element type when t was created by list_type, nullopt otherwise.
std::optional<TypeTag> list_element_type(TypeTag t);

Term nil_term(TypeTag element);
Term cons_term(const Term& head, const Term& tail);
Term list_term(const std::vector<Term>& elems, TypeTag element, const std::optional<Term>& tail = std::nullopt);

template <LogicalType A>
struct List {
  using element = A;
  static TypeTag logic_type() {
    static const TypeTag type = list_type(A::logic_type());
    return type;
  }
  static Term from_elements(std::vector<Term> elems) { return list_term(elems, A::logic_type()); }
};

using NatTerm = TermOf<Nat>;
template <LogicalType A>
using ListTerm = TermOf<List<A>>;
using NatListTerm = ListTerm<Nat>;

template <LogicalType A>
using Relation = std::function<Goal(TermOf<A>, TermOf<A>)>;

NatTerm zero();
NatTerm suc(const NatTerm& n);
NatTerm nat(std::uint64_t n);

// Inverse of nat(); throws std::invalid_argument for non-ground or
// non-Nat terms.
std::uint64_t nat_value(const Term& t);

template <LogicalType A>
ListTerm<A> nil() {
  return ListTerm<A>(nil_term(A::logic_type()));
}

template <LogicalType A>
ListTerm<A> cons(const TermOf<A>& head, const ListTerm<A>& tail) {
  return ListTerm<A>(cons_term(head.term(), tail.term()));
}

template <LogicalType A>
ListTerm<A> list(const std::vector<TermOf<A>>& elems, const std::optional<ListTerm<A>>& tail = std::nullopt) {
  std::vector<Term> raw;
  raw.reserve(elems.size());
  for (const auto& e : elems) raw.push_back(e.term());
  std::optional<Term> t;
  if (tail) t = tail->term();
  return ListTerm<A>(list_term(raw, A::logic_type(), t));
}

// plus(a, b, c) holds iff a + b = c.
Goal plus(const NatTerm& a, const NatTerm& b, const NatTerm& c);
Goal is_suc(const NatTerm& x, const NatTerm& y);
Goal leq(const NatTerm& x, const NatTerm& y);
Goal lt(const NatTerm& x, const NatTerm& y);
Goal remainder(const NatTerm& n, const NatTerm& q, const NatTerm& r);
Goal sorted(const NatListTerm& v);

template <LogicalType A>
Goal is_head(const ListTerm<A>& xs, const TermOf<A>& y) {
  return exists([=](ListTerm<A> tl) { return eq(xs, cons(y, tl)); });
}

template <LogicalType A>
Goal is_tail(const ListTerm<A>& xs, const ListTerm<A>& ys) {
  return exists([=](TermOf<A> h) { return eq(xs, cons(h, ys)); });
}

template <LogicalType A>
Goal member(const TermOf<A>& x, const ListTerm<A>& xs) {
  return disj(exists([=](ListTerm<A> tl) { return eq(xs, cons(x, tl)); }),
              exists([=](TermOf<A> hd, ListTerm<A> tl) { return eq(xs, cons(hd, tl)) & member(x, tl); }));
}

template <LogicalType A>
Goal not_member(const TermOf<A>& x, const ListTerm<A>& xs) {
  return neg(member(x, xs));
}

template <LogicalType A>
Goal sorted_with(Relation<A> compare, const ListTerm<A>& v) {
  return eq(v, nil<A>()) |
         exists([=](TermOf<A> x) { return eq(v, cons(x, nil<A>())); }) |
         exists([=](TermOf<A> x1, TermOf<A> x2, ListTerm<A> xs) {
           return eq(v, cons(x1, cons(x2, xs))) & compare(x1, x2) & sorted_with(compare, cons(x2, xs));
         });
}

template <LogicalType A, LogicalType B>
Goal map_p(std::function<Goal(TermOf<A>, TermOf<B>)> f, const ListTerm<A>& l1, const ListTerm<B>& l2) {
  return (eq(l1, nil<A>()) & eq(l2, nil<B>())) |
         exists([=](TermOf<A> l10, ListTerm<A> l1s, TermOf<B> l20, ListTerm<B> l2s) {
           return eq(l1, cons(l10, l1s)) & eq(l2, cons(l20, l2s)) & f(l10, l20) & map_p(f, l1s, l2s);
         });
}

template <LogicalType A>
Goal append(const ListTerm<A>& xs, const ListTerm<A>& ys, const ListTerm<A>& zs) {
  return (eq(xs, nil<A>()) & eq(ys, zs)) |
         exists([=](TermOf<A> h, ListTerm<A> t, ListTerm<A> r) {
           return eq(xs, cons(h, t)) & eq(zs, cons(h, r)) & append(t, ys, r);
         });
}

Goal list_plus_one(const NatListTerm& l1, const NatListTerm& l2);

}  // namespace xlog
