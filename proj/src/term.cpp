#include "xlog/term.hpp"

#include <stdexcept>

#include "xlog/logic_type.hpp"
#include "xlog/unify.hpp"

namespace xlog {

VarId VarId::user(std::string name, TypeTag type) {
  if (type == nullptr) throw std::invalid_argument("variable needs a type");
  if (name.empty()) throw std::invalid_argument("variable name must not be empty");
  if (name.front() == '_') {
    throw std::invalid_argument("variable name '" + name + "' uses the reserved '_' prefix");
  }
  return VarId(std::move(name), type);
}

VarId VarId::fresh(std::uint64_t index, TypeTag type) {
  if (type == nullptr) throw std::invalid_argument("variable needs a type");
  return VarId("_" + std::to_string(index), type);
}

VarId VarId::wildcard(std::uint64_t index, TypeTag type) {
  if (type == nullptr) throw std::invalid_argument("variable needs a type");
  return VarId("_w" + std::to_string(index), type);
}

bool VarIdLess::operator()(const VarId& a, const VarId& b) const {
  if (a.type() != b.type()) return a.type()->index() < b.type()->index();
  return a.name() < b.name();
}

Term Term::variable(VarId id) {
  const TypeTag type = id.type();
  return Term(std::make_shared<const Node>(Node{type, std::move(id)}));
}

Term Term::compound(TypeTag type, std::uint32_t ctor, std::vector<Term> children) {
  if (type == nullptr) throw std::invalid_argument("compound needs a type");
  if (!type->defined()) {
    throw std::invalid_argument("type '" + type->name() + "' is declared but not defined");
  }
  if (ctor >= type->constructors().size()) {
    throw std::invalid_argument("type '" + type->name() + "' has no constructor #" + std::to_string(ctor));
  }
  const ConstructorInfo& info = type->constructor(ctor);
  if (children.size() != info.children.size()) {
    throw std::invalid_argument(info.name + " expects " + std::to_string(info.children.size()) +
                                " children, got " + std::to_string(children.size()));
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (children[i].type() != info.children[i]) {
      throw std::invalid_argument(info.name + " child " + std::to_string(i) + " expects " +
                                  info.children[i]->name() + ", got " + children[i].type()->name());
    }
  }
  return Term(std::make_shared<const Node>(Node{type, Compound{ctor, std::move(children)}}));
}

Term Term::compound(TypeTag type, std::string_view ctor_name, std::vector<Term> children) {
  if (type == nullptr) throw std::invalid_argument("compound needs a type");
  const auto ctor = type->find_constructor(ctor_name);
  if (!ctor) {
    throw std::invalid_argument("type '" + type->name() + "' has no constructor '" + std::string(ctor_name) + "'");
  }
  return compound(type, *ctor, std::move(children));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.type() != b.type() || a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.var() == b.var();
  const Compound& p = a.payload();
  const Compound& q = b.payload();
  return p.ctor == q.ctor && p.children == q.children;
}

}  // namespace xlog
