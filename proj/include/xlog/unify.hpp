#pragma once

#include <optional>
#include <string>

#include "xlog/binding_store.hpp"
#include "xlog/logic_type.hpp"
#include "xlog/term.hpp"

namespace xlog {

// Follows variable bindings at the root only. Never returns a bound variable.
[[nodiscard]] Term walk(const Term& t, const BindingStore& store);

// Applies the store everywhere inside t. Shares unchanged subterms.
[[nodiscard]] Term resolve(const Term& t, const BindingStore& store);

// Most general extension of store equating a and b, or nullopt on a
// constructor clash or occurs-check failure. A failed unification leaves
// the caller's store as it was. After walking both sides a left variable is
// bound to the right side, otherwise a right variable to the left side.
// Throws std::invalid_argument if a and b have different types.
[[nodiscard]] std::optional<BindingStore> unify(const Term& a, const Term& b, const BindingStore& store);

// True iff v occurs in resolve(t, store).
[[nodiscard]] bool occurs_in(const VarId& v, const Term& t, const BindingStore& store);

// True iff resolve(t, store) has no variables.
[[nodiscard]] bool is_ground_term(const Term& t, const BindingStore& store);

// Syntactic versions dispatching through each type's capability.
[[nodiscard]] bool occurs(const VarId& v, const Term& t);
[[nodiscard]] bool is_ground(const Term& t);

// Replaces every occurrence of v in t by replacement.
[[nodiscard]] Term substitute(const VarId& v, const Term& replacement, const Term& t);

// Variables print as their names, compounds through their type's printer.
[[nodiscard]] std::string pretty(const Term& t);

}  // namespace xlog
