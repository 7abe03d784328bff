#pragma once

#include <cstddef>
#include <optional>

#include "xlog/persistent_map.hpp"
#include "xlog/term.hpp"

namespace xlog {

class BindingStore;
std::optional<BindingStore> unify(const Term& a, const Term& b, const BindingStore& store);

// The accumulated substitution. Persistent: extending a store leaves the
// original untouched, so backtracking just keeps an older handle.
class BindingStore {
 public:
  BindingStore() = default;

  [[nodiscard]] const Term* lookup(const VarId& v) const { return map_.find(v); }
  [[nodiscard]] bool is_bound(const VarId& v) const { return map_.contains(v); }
  [[nodiscard]] std::size_t size() const { return map_.size(); }
  [[nodiscard]] bool empty() const { return map_.empty(); }

  // Checked insertion: the variable must be unbound, the term must have the
  // variable's type, and the binding must not create a cycle.
  // Throws std::logic_error otherwise.
  [[nodiscard]] BindingStore bind(const VarId& v, const Term& t) const;

  template <typename F>
  void for_each(F&& f) const {
    map_.for_each(f);
  }

  friend bool operator==(const BindingStore& a, const BindingStore& b) {
    return a.map_.identity() == b.map_.identity() || a.map_.same_entries(b.map_);
  }

 private:
  friend std::optional<BindingStore> unify(const Term&, const Term&, const BindingStore&);

  [[nodiscard]] BindingStore extend(const VarId& v, const Term& t) const {
    BindingStore out;
    out.map_ = map_.insert(v, t);
    return out;
  }

  PersistentMap<VarId, Term, VarIdLess> map_;
};

}  // namespace xlog
