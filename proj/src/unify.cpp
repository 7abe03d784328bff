#include "xlog/unify.hpp"

#include <stdexcept>

namespace xlog {

BindingStore BindingStore::bind(const VarId& v, const Term& t) const {
  if (t.type() != v.type()) {
    throw std::logic_error("binding " + v.name() + " of type " + v.type()->name() + " to a term of type " +
                           t.type()->name());
  }
  if (is_bound(v)) throw std::logic_error("variable " + v.name() + " is already bound");
  if (occurs_in(v, t, *this)) throw std::logic_error("binding " + v.name() + " would create a cycle");
  return extend(v, t);
}

Term walk(const Term& t, const BindingStore& store) {
  Term cur = t;
  while (cur.is_var()) {
    const Term* next = store.lookup(cur.var());
    if (next == nullptr) break;
    cur = *next;
  }
  return cur;
}

Term resolve(const Term& t, const BindingStore& store) {
  Term w = walk(t, store);
  if (w.is_var()) return w;
  const Compound& p = w.payload();
  std::vector<Term> children;
  children.reserve(p.children.size());
  bool changed = false;
  for (const Term& child : p.children) {
    children.push_back(resolve(child, store));
    changed = changed || !children.back().same_node(child);
  }
  if (!changed) return w;
  return Term::compound(w.type(), p.ctor, std::move(children));
}

std::optional<BindingStore> unify(const Term& a, const Term& b, const BindingStore& store) {
  if (a.type() != b.type()) {
    throw std::invalid_argument("cannot unify " + a.type()->name() + " with " + b.type()->name());
  }
  const Term x = walk(a, store);
  const Term y = walk(b, store);
  if (x.same_node(y)) return store;
  if (x.is_var()) {
    if (y.is_var() && x.var() == y.var()) return store;
    if (occurs_in(x.var(), y, store)) return std::nullopt;
    return store.extend(x.var(), y);
  }
  if (y.is_var()) {
    if (occurs_in(y.var(), x, store)) return std::nullopt;
    return store.extend(y.var(), x);
  }
  return x.type()->capability().unify_step(x.payload(), y.payload(), store);
}

bool occurs_in(const VarId& v, const Term& t, const BindingStore& store) {
  return occurs(v, resolve(t, store));
}

bool is_ground_term(const Term& t, const BindingStore& store) {
  return is_ground(resolve(t, store));
}

bool occurs(const VarId& v, const Term& t) {
  if (t.is_var()) return t.var() == v;
  return t.type()->capability().occurs(v, t.payload());
}

bool is_ground(const Term& t) {
  if (t.is_var()) return false;
  return t.type()->capability().is_ground(t.payload());
}

Term substitute(const VarId& v, const Term& replacement, const Term& t) {
  if (replacement.type() != v.type()) {
    throw std::invalid_argument("substituting " + v.name() + " of type " + v.type()->name() +
                                " by a term of type " + replacement.type()->name());
  }
  if (t.is_var()) return t.var() == v ? replacement : t;
  if (!occurs(v, t)) return t;
  Compound p = t.type()->capability().substitute(v, replacement, t.payload());
  return Term::compound(t.type(), p.ctor, std::move(p.children));
}

std::string pretty(const Term& t) {
  if (t.is_var()) return t.var().name();
  return t.type()->capability().pretty(t.payload());
}

}  // namespace xlog
