#include <cctype>
#include <map>
#include <memory>

#include "xlog/prelude.hpp"
#include "xlog/repl.hpp"
#include "xlog/unify.hpp"

namespace xlog::repl {

namespace {

// Peano numerals are unary; anything larger is almost certainly a typo.
constexpr std::uint64_t kMaxInteger = 100000;

enum class Tok { Name, Variable, Integer, LParen, RParen, LBracket, RBracket, Comma, Semicolon, Bar, Dot, Not, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

std::vector<Token> tokenize(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < in.size()) {
    const char c = in[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < in.size() && is_ident(in[j])) ++j;
      std::string word(in.substr(i, j - i));
      Tok kind;
      if (word == "_") {
        kind = Tok::Variable;
      } else if (c == '_') {
        throw ParseError("parse error at column " + std::to_string(col) + ": variable names may not start with '_'",
                         col);
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        kind = Tok::Variable;
      } else {
        kind = Tok::Name;
      }
      out.push_back({kind, std::move(word), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) ++j;
      out.push_back({Tok::Integer, std::string(in.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (c == '\\' && i + 1 < in.size() && in[i + 1] == '+') {
      out.push_back({Tok::Not, "\\+", col});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semicolon; break;
      case '|': kind = Tok::Bar; break;
      case '.': kind = Tok::Dot; break;
      default:
        throw ParseError("parse error at column " + std::to_string(col) + ": unexpected character '" +
                             std::string(1, c) + "'",
                         col);
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", in.size() + 1});
  return out;
}

struct RawTerm {
  enum class Kind { Var, Wildcard, Integer, List };
  Kind kind;
  std::string name;
  std::uint64_t value = 0;
  std::vector<RawTerm> elems;
  std::vector<RawTerm> tail;  // zero or one
  std::size_t column;
};

struct RawGoal {
  enum class Kind { Call, Conj, Disj, Not };
  Kind kind;
  std::string name;
  std::vector<RawTerm> args;
  std::size_t column = 0;
  std::unique_ptr<RawGoal> left;
  std::unique_ptr<RawGoal> right;
};

class Parser {
 public:
  explicit Parser(std::string_view in) : toks_(tokenize(in)) {}

  std::unique_ptr<RawGoal> query() {
    auto g = disj();
    expect(Tok::Dot, "'.' at the end of the query");
    expect(Tok::End, "end of input after '.'");
    return g;
  }

  RawTerm single_term() {
    RawTerm t = term();
    if (peek().kind == Tok::Dot) ++pos_;
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& wanted) const {
    const Token& t = peek();
    throw ParseError(
        "parse error at column " + std::to_string(t.column) + ": expected " + wanted + ", found " + describe(t),
        t.column);
  }

  const Token& expect(Tok kind, const std::string& wanted) {
    if (peek().kind != kind) fail(wanted);
    return toks_[pos_++];
  }

  std::unique_ptr<RawGoal> disj() {
    auto left = conj();
    if (peek().kind != Tok::Semicolon) return left;
    ++pos_;
    auto node = std::make_unique<RawGoal>();
    node->kind = RawGoal::Kind::Disj;
    node->left = std::move(left);
    node->right = disj();
    return node;
  }

  std::unique_ptr<RawGoal> conj() {
    auto left = atom();
    if (peek().kind != Tok::Comma) return left;
    ++pos_;
    auto node = std::make_unique<RawGoal>();
    node->kind = RawGoal::Kind::Conj;
    node->left = std::move(left);
    node->right = conj();
    return node;
  }

  std::unique_ptr<RawGoal> atom() {
    const Token& t = peek();
    if (t.kind == Tok::Not) {
      ++pos_;
      auto node = std::make_unique<RawGoal>();
      node->kind = RawGoal::Kind::Not;
      node->column = t.column;
      node->left = atom();
      return node;
    }
    if (t.kind == Tok::LParen) {
      ++pos_;
      auto inner = disj();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Name) fail("a predicate name");
    auto node = std::make_unique<RawGoal>();
    node->kind = RawGoal::Kind::Call;
    node->name = t.text;
    node->column = t.column;
    ++pos_;
    if (peek().kind == Tok::LParen) {
      ++pos_;
      node->args.push_back(term());
      while (peek().kind == Tok::Comma) {
        ++pos_;
        node->args.push_back(term());
      }
      expect(Tok::RParen, "',' or ')'");
    }
    return node;
  }

  RawTerm term() {
    const Token& t = peek();
    RawTerm out{};
    out.column = t.column;
    switch (t.kind) {
      case Tok::Variable:
        out.kind = t.text == "_" ? RawTerm::Kind::Wildcard : RawTerm::Kind::Var;
        out.name = t.text;
        ++pos_;
        return out;
      case Tok::Integer: {
        if (t.text.size() > 6 || std::stoull(t.text) > kMaxInteger) {
          throw ParseError("parse error at column " + std::to_string(t.column) + ": integer " + t.text +
                               " exceeds " + std::to_string(kMaxInteger),
                           t.column);
        }
        out.kind = RawTerm::Kind::Integer;
        out.value = std::stoull(t.text);
        ++pos_;
        return out;
      }
      case Tok::LBracket: {
        ++pos_;
        out.kind = RawTerm::Kind::List;
        if (peek().kind == Tok::RBracket) {
          ++pos_;
          return out;
        }
        out.elems.push_back(term());
        while (peek().kind == Tok::Comma) {
          ++pos_;
          out.elems.push_back(term());
        }
        if (peek().kind == Tok::Bar) {
          ++pos_;
          out.tail.push_back(term());
        }
        expect(Tok::RBracket, "',', '|' or ']'");
        return out;
      }
      default:
        fail("a term");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

class Checker {
 public:
  Term check(const RawTerm& raw, TypeTag expected, const std::string& where) {
    switch (raw.kind) {
      case RawTerm::Kind::Wildcard: {
        VarId v = VarId::wildcard(wildcards_.size(), expected);
        wildcards_.push_back(v);
        return Term::variable(std::move(v));
      }
      case RawTerm::Kind::Var: {
        auto it = var_types_.find(raw.name);
        if (it == var_types_.end()) {
          var_types_.emplace(raw.name, expected);
          variables_.push_back(VarId::user(raw.name, expected));
        } else if (it->second != expected) {
          mismatch(where, expected, "variable " + raw.name + " of type " + it->second->name(), raw.column);
        }
        return Term::variable(VarId::user(raw.name, expected));
      }
      case RawTerm::Kind::Integer:
        if (expected != Nat::logic_type()) mismatch(where, expected, Nat::logic_type()->name(), raw.column);
        return Nat::numeral(raw.value);
      case RawTerm::Kind::List: {
        auto element = list_element_type(expected);
        if (!element) mismatch(where, expected, "a list", raw.column);
        std::vector<Term> elems;
        for (const RawTerm& e : raw.elems) elems.push_back(check(e, *element, where));
        std::optional<Term> tail;
        if (!raw.tail.empty()) tail = check(raw.tail.front(), expected, where);
        return list_term(elems, *element, tail);
      }
    }
    throw std::logic_error("unreachable term kind");
  }

  QueryExpr check(const RawGoal& raw, const PredicateRegistry& registry) {
    auto node = std::make_shared<QueryNode>();
    switch (raw.kind) {
      case RawGoal::Kind::Conj:
      case RawGoal::Kind::Disj:
        node->kind = raw.kind == RawGoal::Kind::Conj ? QueryNode::Kind::Conj : QueryNode::Kind::Disj;
        node->left = check(*raw.left, registry);
        node->right = check(*raw.right, registry);
        return node;
      case RawGoal::Kind::Not:
        node->kind = QueryNode::Kind::Not;
        node->left = check(*raw.left, registry);
        return node;
      case RawGoal::Kind::Call: {
        const std::string sig = raw.name + "/" + std::to_string(raw.args.size());
        const auto* entry = registry.find(raw.name, raw.args.size());
        if (entry == nullptr) {
          throw TypeError("type error at column " + std::to_string(raw.column) + ": unknown predicate " + sig,
                          raw.column);
        }
        node->kind = QueryNode::Kind::Call;
        node->predicate = entry;
        for (std::size_t i = 0; i < raw.args.size(); ++i) {
          node->args.push_back(check(raw.args[i], entry->signature[i], sig + " argument " + std::to_string(i + 1)));
        }
        return node;
      }
    }
    throw std::logic_error("unreachable goal kind");
  }

  std::vector<VarId> take_variables() { return std::move(variables_); }
  std::vector<VarId> take_wildcards() { return std::move(wildcards_); }

 private:
  [[noreturn]] static void mismatch(const std::string& where, TypeTag expected, const std::string& actual,
                                    std::size_t column) {
    throw TypeError("type error at column " + std::to_string(column) + ": " + where + " expects " + expected->name() +
                        ", got " + actual,
                    column);
  }

  std::map<std::string, TypeTag> var_types_;
  std::vector<VarId> variables_;
  std::vector<VarId> wildcards_;
};

Goal build(const QueryExpr& e, const std::vector<std::pair<VarId, Term>>& fill) {
  switch (e->kind) {
    case QueryNode::Kind::Call: {
      std::vector<Term> args = e->args;
      for (Term& a : args) {
        for (const auto& [placeholder, fresh] : fill) a = substitute(placeholder, fresh, a);
      }
      return e->predicate->impl(args);
    }
    case QueryNode::Kind::Conj:
      return conj(build(e->left, fill), build(e->right, fill));
    case QueryNode::Kind::Disj:
      return disj(build(e->left, fill), build(e->right, fill));
    case QueryNode::Kind::Not:
      return neg(build(e->left, fill));
  }
  throw std::logic_error("unreachable query kind");
}

Goal wrap_wildcards(QueryExpr root, std::vector<VarId> wildcards, std::vector<std::pair<VarId, Term>> fill) {
  if (fill.size() == wildcards.size()) return build(root, fill);
  const VarId& next = wildcards[fill.size()];
  return exists(next.type(), [root, wildcards, fill](const Term& fresh) {
    auto extended = fill;
    extended.emplace_back(wildcards[fill.size()], fresh);
    return wrap_wildcards(root, wildcards, std::move(extended));
  });
}

}  // namespace

Goal Query::to_goal() const { return wrap_wildcards(root_, wildcards_, {}); }

Query parse_query(std::string_view input, const PredicateRegistry& registry) {
  Parser parser(input);
  auto raw = parser.query();
  Checker checker;
  QueryExpr root = checker.check(*raw, registry);
  return Query(std::move(root), checker.take_variables(), checker.take_wildcards());
}

Term parse_term(std::string_view input, TypeTag type) {
  Parser parser(input);
  RawTerm raw = parser.single_term();
  Checker checker;
  return checker.check(raw, type, "term");
}

}  // namespace xlog::repl
