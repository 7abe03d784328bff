#include <stdexcept>

#include "xlog/logic_type.hpp"
#include "xlog/prelude.hpp"
#include "xlog/repl.hpp"

namespace xlog::repl {

void PredicateRegistry::add(std::string name, std::vector<TypeTag> signature, Impl impl) {
  for (TypeTag t : signature) {
    if (t == nullptr || !t->defined()) {
      throw std::invalid_argument("predicate " + name + " has an undefined argument type");
    }
  }
  auto key = std::make_pair(name, signature.size());
  if (entries_.contains(key)) {
    throw std::invalid_argument("predicate " + name + "/" + std::to_string(signature.size()) + " already registered");
  }
  entries_.emplace(std::move(key), Entry{std::move(name), std::move(signature), std::move(impl)});
}

const PredicateRegistry::Entry* PredicateRegistry::find(std::string_view name, std::size_t arity) const {
  auto it = entries_.find(std::make_pair(std::string(name), arity));
  return it == entries_.end() ? nullptr : &it->second;
}

bool PredicateRegistry::has_name(std::string_view name) const {
  for (const auto& [key, entry] : entries_) {
    if (key.first == name) return true;
  }
  return false;
}

std::vector<const PredicateRegistry::Entry*> PredicateRegistry::entries() const {
  std::vector<const Entry*> out;
  for (const auto& [key, entry] : entries_) out.push_back(&entry);
  return out;
}

PredicateRegistry prelude_registry() {
  using NatList = List<Nat>;
  PredicateRegistry reg;
  reg.add("succeed", {}, [](std::span<const Term>) { return succeed(); });
  reg.add("true", {}, [](std::span<const Term>) { return succeed(); });
  reg.add("fail", {}, [](std::span<const Term>) { return fail_goal(); });
  reg.add_typed<Nat, Nat, Nat>("plus", plus);
  reg.add_typed<Nat, Nat>("isSuc", is_suc);
  reg.add_typed<Nat, Nat>("leq", leq);
  reg.add_typed<Nat, Nat>("lt", lt);
  reg.add_typed<Nat>("isGround", [](NatTerm t) { return is_ground_goal(t); });
  reg.add_typed<NatList, Nat>("isHead", is_head<Nat>);
  reg.add_typed<NatList, NatList>("isTail", is_tail<Nat>);
  reg.add_typed<Nat, NatList>("member", member<Nat>);
  reg.add_typed<Nat, NatList>("notMember", not_member<Nat>);
  reg.add_typed<NatList>("sorted", sorted);
  reg.add_typed<NatList>("sortedLeq", [](NatListTerm v) { return sorted_with<Nat>(leq, v); });
  reg.add_typed<NatList, NatList>("listPlusOne", list_plus_one);
  reg.add_typed<Nat, Nat, Nat>("remainder", remainder);
  reg.add_typed<NatList, NatList, NatList>("append", append<Nat>);
  return reg;
}

}  // namespace xlog::repl
