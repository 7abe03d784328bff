#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xlog/binding_store.hpp"
#include "xlog/term.hpp"

namespace xlog {

// The per-type operations unification needs. All functions act on a
// constructor payload; the type itself is implied by the capability's owner.
struct LogicCapability {
  // Unifies two payloads of this type. nullopt on clash.
  std::function<std::optional<BindingStore>(const Compound&, const Compound&, const BindingStore&)>
      unify_step;
  // Syntactic: true when the variable appears anywhere inside the payload.
  std::function<bool(const VarId&, const Compound&)> occurs;
  // Replaces every occurrence of the variable inside the payload.
  std::function<Compound(const VarId&, const Term&, const Compound&)> substitute;
  // Syntactic: true when no variable appears inside the payload.
  std::function<bool(const Compound&)> is_ground;
  std::function<std::string(const Compound&)> pretty;
};

using PrettyFn = std::function<std::string(const Compound&)>;

struct ConstructorInfo {
  std::string name;
  std::vector<TypeTag> children;
};

class LogicType {
 public:
  [[nodiscard]] const std::string& name() const { return name_; }
  // Registration order within the owning registry.
  [[nodiscard]] std::uint32_t index() const { return index_; }
  [[nodiscard]] bool defined() const { return defined_.load(std::memory_order_acquire); }

  [[nodiscard]] std::span<const ConstructorInfo> constructors() const { return ctors_; }
  [[nodiscard]] const ConstructorInfo& constructor(std::uint32_t i) const { return ctors_.at(i); }
  [[nodiscard]] std::optional<std::uint32_t> find_constructor(std::string_view name) const;

  // Throws std::logic_error if the type was declared but never defined.
  [[nodiscard]] const LogicCapability& capability() const;

 private:
  friend class TypeRegistry;

  LogicType(std::string name, std::uint32_t index) : name_(std::move(name)), index_(index) {}

  std::string name_;
  std::uint32_t index_;
  std::vector<ConstructorInfo> ctors_;
  LogicCapability cap_;
  std::atomic<bool> defined_{false};
};

// Constructor as written by the user: child positions name their types.
struct ConstructorSpec {
  std::string name;
  std::vector<std::string> children;
};

struct DatatypeDescriptor {
  std::string type_name;
  std::vector<ConstructorSpec> constructors;
};

class DerivationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TypeRegistry {
 public:
  TypeRegistry() = default;
  TypeRegistry(const TypeRegistry&) = delete;
  TypeRegistry& operator=(const TypeRegistry&) = delete;

  // Process-wide registry used by the prelude and the typed API.
  static TypeRegistry& global();

  // Reserves a name so that other types can refer to it before it is
  // defined (mutual recursion). Idempotent.
  TypeTag declare(std::string_view name);

  [[nodiscard]] TypeTag find(std::string_view name) const;

  // Declares the type if needed, resolves child type names, derives the
  // capability and installs it. Throws DerivationError on a malformed
  // descriptor or when the type is already defined.
  TypeTag define(const DatatypeDescriptor& descriptor);

  // Defines the type unless a defined type of that name already exists.
  TypeTag find_or_define(const DatatypeDescriptor& descriptor);

  // Replaces the capability of a defined type wholesale (hand-written
  // instances) or just its printer.
  void install(TypeTag type, LogicCapability cap);
  void override_pretty(TypeTag type, PrettyFn pretty);

 private:
  LogicType* declare_locked(std::string_view name);
  LogicType* mutable_type(TypeTag type);
  TypeTag define_locked(const DatatypeDescriptor& descriptor);

  mutable std::mutex mu_;
  std::deque<std::unique_ptr<LogicType>> types_;
  std::map<std::string, LogicType*, std::less<>> by_name_;
};

// Structural derivation from a constructor table. Children are unified,
// searched and substituted left to right; the default printer is prefix
// constructor syntax, "Name" or "Name(a, b)".
LogicCapability derive_capability(const LogicType& type);

// Resolves and validates a descriptor against a registry, then derives.
// The descriptor's own name may be referenced by its children.
LogicCapability derive_capability(const DatatypeDescriptor& descriptor, const TypeRegistry& registry);

}  // namespace xlog
