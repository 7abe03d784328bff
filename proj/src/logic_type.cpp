#include "xlog/logic_type.hpp"

#include <set>

#include "xlog/unify.hpp"

namespace xlog {

std::optional<std::uint32_t> LogicType::find_constructor(std::string_view name) const {
  for (std::uint32_t i = 0; i < ctors_.size(); ++i) {
    if (ctors_[i].name == name) return i;
  }
  return std::nullopt;
}

const LogicCapability& LogicType::capability() const {
  if (!defined()) throw std::logic_error("type '" + name_ + "' is declared but not defined");
  return cap_;
}

namespace {

LogicCapability derive_from_names(std::vector<std::string> names) {
  auto ctor_names = std::make_shared<const std::vector<std::string>>(std::move(names));
  LogicCapability cap;

  cap.unify_step = [](const Compound& p, const Compound& q,
                      const BindingStore& store) -> std::optional<BindingStore> {
    if (p.ctor != q.ctor || p.children.size() != q.children.size()) return std::nullopt;
    BindingStore acc = store;
    for (std::size_t i = 0; i < p.children.size(); ++i) {
      auto next = unify(p.children[i], q.children[i], acc);
      if (!next) return std::nullopt;
      acc = std::move(*next);
    }
    return acc;
  };

  cap.occurs = [](const VarId& v, const Compound& p) {
    for (const Term& child : p.children) {
      if (occurs(v, child)) return true;
    }
    return false;
  };

  cap.substitute = [](const VarId& v, const Term& replacement, const Compound& p) {
    Compound out{p.ctor, {}};
    out.children.reserve(p.children.size());
    for (const Term& child : p.children) out.children.push_back(substitute(v, replacement, child));
    return out;
  };

  cap.is_ground = [](const Compound& p) {
    for (const Term& child : p.children) {
      if (!is_ground(child)) return false;
    }
    return true;
  };

  cap.pretty = [ctor_names](const Compound& p) {
    std::string out = ctor_names->at(p.ctor);
    if (p.children.empty()) return out;
    out += '(';
    for (std::size_t i = 0; i < p.children.size(); ++i) {
      if (i > 0) out += ", ";
      out += pretty(p.children[i]);
    }
    out += ')';
    return out;
  };

  return cap;
}

void validate_shape(const DatatypeDescriptor& d) {
  if (d.type_name.empty()) throw DerivationError("datatype name must not be empty");
  if (d.constructors.empty()) throw DerivationError("datatype '" + d.type_name + "' has no constructors");
  std::set<std::string_view> seen;
  for (const ConstructorSpec& c : d.constructors) {
    if (c.name.empty()) throw DerivationError("datatype '" + d.type_name + "' has an unnamed constructor");
    if (!seen.insert(c.name).second) {
      throw DerivationError("datatype '" + d.type_name + "' repeats constructor '" + c.name + "'");
    }
  }
}

}  // namespace

LogicCapability derive_capability(const LogicType& type) {
  std::vector<std::string> names;
  for (const ConstructorInfo& c : type.constructors()) names.push_back(c.name);
  return derive_from_names(std::move(names));
}

LogicCapability derive_capability(const DatatypeDescriptor& d, const TypeRegistry& registry) {
  validate_shape(d);
  std::vector<std::string> names;
  for (const ConstructorSpec& c : d.constructors) {
    for (const std::string& child : c.children) {
      if (child != d.type_name && registry.find(child) == nullptr) {
        throw DerivationError("constructor '" + c.name + "' of '" + d.type_name +
                              "' refers to unknown type '" + child + "'");
      }
    }
    names.push_back(c.name);
  }
  return derive_from_names(std::move(names));
}

TypeRegistry& TypeRegistry::global() {
  static TypeRegistry registry;
  return registry;
}

LogicType* TypeRegistry::declare_locked(std::string_view name) {
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  const auto index = static_cast<std::uint32_t>(types_.size());
  types_.push_back(std::unique_ptr<LogicType>(new LogicType(std::string(name), index)));
  LogicType* t = types_.back().get();
  by_name_.emplace(t->name(), t);
  return t;
}

TypeTag TypeRegistry::declare(std::string_view name) {
  if (name.empty()) throw DerivationError("type name must not be empty");
  std::lock_guard lock(mu_);
  return declare_locked(name);
}

TypeTag TypeRegistry::find(std::string_view name) const {
  std::lock_guard lock(mu_);
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : it->second;
}

LogicType* TypeRegistry::mutable_type(TypeTag type) {
  for (auto& t : types_) {
    if (t.get() == type) return t.get();
  }
  throw std::invalid_argument("type is not owned by this registry");
}

TypeTag TypeRegistry::define_locked(const DatatypeDescriptor& d) {
  validate_shape(d);
  if (auto it = by_name_.find(d.type_name); it != by_name_.end() && it->second->defined()) {
    throw DerivationError("datatype '" + d.type_name + "' is already defined");
  }

  // Resolve children before touching the registry so a bad descriptor
  // leaves no trace beyond what was already declared.
  std::vector<ConstructorInfo> ctors;
  for (const ConstructorSpec& c : d.constructors) {
    ConstructorInfo info{c.name, {}};
    for (const std::string& child : c.children) {
      if (child == d.type_name) {
        info.children.push_back(nullptr);
        continue;
      }
      auto it = by_name_.find(child);
      if (it == by_name_.end()) {
        throw DerivationError("constructor '" + c.name + "' of '" + d.type_name +
                              "' refers to unknown type '" + child + "'");
      }
      info.children.push_back(it->second);
    }
    ctors.push_back(std::move(info));
  }

  LogicType* self = declare_locked(d.type_name);
  for (ConstructorInfo& c : ctors) {
    for (TypeTag& child : c.children) {
      if (child == nullptr) child = self;
    }
  }
  self->ctors_ = std::move(ctors);
  self->cap_ = derive_capability(*self);
  self->defined_.store(true, std::memory_order_release);
  return self;
}

TypeTag TypeRegistry::define(const DatatypeDescriptor& d) {
  std::lock_guard lock(mu_);
  return define_locked(d);
}

TypeTag TypeRegistry::find_or_define(const DatatypeDescriptor& d) {
  std::lock_guard lock(mu_);
  if (auto it = by_name_.find(d.type_name); it != by_name_.end() && it->second->defined()) {
    return it->second;
  }
  return define_locked(d);
}

void TypeRegistry::install(TypeTag type, LogicCapability cap) {
  std::lock_guard lock(mu_);
  LogicType* t = mutable_type(type);
  if (!t->defined()) throw std::logic_error("cannot install a capability on undefined type '" + t->name() + "'");
  t->cap_ = std::move(cap);
}

void TypeRegistry::override_pretty(TypeTag type, PrettyFn pretty) {
  std::lock_guard lock(mu_);
  LogicType* t = mutable_type(type);
  if (!t->defined()) throw std::logic_error("cannot override printer of undefined type '" + t->name() + "'");
  t->cap_.pretty = std::move(pretty);
}

}  // namespace xlog
