#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace xlog {

class LogicType;

// Identity of a logical type. Types are owned by a TypeRegistry and never
// move or die while the registry lives, so a pointer is a stable tag.
using TypeTag = const LogicType*;

// A logic variable: same name at a different type is a different variable.
class VarId {
 public:
  // User-facing variables. Rejects empty names and names starting with '_',
  // which are reserved for engine-generated variables.
  static VarId user(std::string name, TypeTag type);

  // Engine-generated variable "_<index>".
  static VarId fresh(std::uint64_t index, TypeTag type);

  // Placeholder "_w<index>" used by front ends for anonymous variables
  // before they are replaced by fresh ones. Never clashes with fresh names.
  static VarId wildcard(std::uint64_t index, TypeTag type);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] TypeTag type() const { return type_; }
  [[nodiscard]] bool is_generated() const { return !name_.empty() && name_.front() == '_'; }

  friend bool operator==(const VarId& a, const VarId& b) {
    return a.type_ == b.type_ && a.name_ == b.name_;
  }

 private:
  VarId(std::string name, TypeTag type) : name_(std::move(name)), type_(type) {}

  std::string name_;
  TypeTag type_;
};

// Orders by type registration index, then by name. Deterministic across runs.
struct VarIdLess {
  bool operator()(const VarId& a, const VarId& b) const;
};

class Term;

// Constructor application: index into the owning type's constructor table
// plus one child term per declared child position.
struct Compound {
  std::uint32_t ctor = 0;
  std::vector<Term> children;
};

// A term of a fixed logical type: either a variable or a constructor
// application whose children are terms. Immutable; copies share structure.
class Term {
 public:
  static Term variable(VarId id);

  // Validates the constructor index, arity and child types against the type's
  // constructor table. Throws std::invalid_argument on mismatch.
  static Term compound(TypeTag type, std::uint32_t ctor, std::vector<Term> children);
  static Term compound(TypeTag type, std::string_view ctor_name, std::vector<Term> children);

  [[nodiscard]] TypeTag type() const { return node_->type; }
  [[nodiscard]] bool is_var() const { return std::holds_alternative<VarId>(node_->data); }
  [[nodiscard]] const VarId& var() const { return std::get<VarId>(node_->data); }
  [[nodiscard]] const Compound& payload() const { return std::get<Compound>(node_->data); }

  // True when both handles point at the same node (cheap equality witness).
  [[nodiscard]] bool same_node(const Term& other) const { return node_ == other.node_; }

  // Structural equality.
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    TypeTag type;
    std::variant<VarId, Compound> data;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace xlog
