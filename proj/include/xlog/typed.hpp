#pragma once

#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "xlog/goal.hpp"
#include "xlog/logic_type.hpp"
#include "xlog/term.hpp"

namespace xlog {

// A tag type naming a registered logical type.
template <typename T>
concept LogicalType = requires {
  { T::logic_type() } -> std::same_as<TypeTag>;
};

// Tag types that accept integer literals (e.g. Peano naturals).
template <typename T>
concept NumeralType = LogicalType<T> && requires(std::uint64_t n) {
  { T::numeral(n) } -> std::same_as<Term>;
};

// Tag types that accept braced element lists.
template <typename T>
concept SequenceType = LogicalType<T> && requires(std::vector<Term> elems) {
  typename T::element;
  { T::from_elements(std::move(elems)) } -> std::same_as<Term>;
};

namespace detail {

struct no_elements {};

template <typename T>
struct element_list {
  using type = no_elements;
};

}  // namespace detail

// A Term statically known to have logical type T. Terms of different
// logical types cannot be mixed in eq, exists or predicate arguments.
template <LogicalType T>
class TermOf {
 public:
  explicit TermOf(Term t) : term_(std::move(t)) {
    if (term_.type() != T::logic_type()) {
      throw std::invalid_argument("expected a term of type " + T::logic_type()->name() + ", got " +
                                  term_.type()->name());
    }
  }

  // A string literal where a term is expected names a variable.
  TermOf(const char* name) : term_(Term::variable(VarId::user(name, T::logic_type()))) {}
  TermOf(std::string name) : term_(Term::variable(VarId::user(std::move(name), T::logic_type()))) {}

  template <std::integral I>
    requires NumeralType<T>
  TermOf(I n) : term_(T::numeral(checked(n))) {}

  TermOf(typename detail::element_list<T>::type elems)
    requires SequenceType<T>
      : term_(T::from_elements(unwrap(elems))) {}

  [[nodiscard]] const Term& term() const { return term_; }
  operator const Term&() const { return term_; }

 private:
  template <std::integral I>
  static std::uint64_t checked(I n) {
    if constexpr (std::is_signed_v<I>) {
      if (n < 0) throw std::invalid_argument("negative numeral");
    }
    return static_cast<std::uint64_t>(n);
  }

  template <typename E>
  static std::vector<Term> unwrap(std::initializer_list<TermOf<E>> elems) {
    std::vector<Term> out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back(e.term());
    return out;
  }

  Term term_;
};

namespace detail {

template <SequenceType T>
struct element_list<T> {
  using type = std::initializer_list<TermOf<typename T::element>>;
};

}  // namespace detail

template <LogicalType T>
[[nodiscard]] TermOf<T> var(std::string name) {
  return TermOf<T>(Term::variable(VarId::user(std::move(name), T::logic_type())));
}

template <LogicalType T>
[[nodiscard]] Goal eq(const TermOf<T>& a, const std::type_identity_t<TermOf<T>>& b) {
  return eq(a.term(), b.term());
}

template <LogicalType T>
[[nodiscard]] Goal neq(const TermOf<T>& a, const std::type_identity_t<TermOf<T>>& b) {
  return neq(a.term(), b.term());
}

template <LogicalType T>
[[nodiscard]] Goal is_ground_goal(const TermOf<T>& t) {
  return is_ground_goal(t.term());
}

// exists<A, B>([](TermOf<A> a, TermOf<B> b) { ... }) introduces one fresh
// variable per listed type, outermost first.
template <LogicalType T, LogicalType... Rest, typename F>
[[nodiscard]] Goal exists(F body) {
  return exists(T::logic_type(), [body = std::move(body)](const Term& fresh) -> Goal {
    TermOf<T> x(fresh);
    if constexpr (sizeof...(Rest) == 0) {
      return body(x);
    } else {
      return exists<Rest...>([body, x](TermOf<Rest>... rest) { return body(x, rest...); });
    }
  });
}

namespace detail {

template <typename>
struct call_signature;
template <typename C, typename R, typename... A>
struct call_signature<R (C::*)(A...) const> {
  using args = std::tuple<std::remove_cvref_t<A>...>;
};

template <typename>
struct is_term_of : std::false_type {};
template <typename T>
struct is_term_of<TermOf<T>> : std::true_type {
  using type = T;
};

template <typename Tuple>
struct all_terms;
template <typename... A>
struct all_terms<std::tuple<A...>> : std::bool_constant<(sizeof...(A) > 0) && (is_term_of<A>::value && ...)> {};

template <typename F>
concept TermLambda = requires { &F::operator(); } &&
                     all_terms<typename call_signature<decltype(&F::operator())>::args>::value;

template <typename F, typename... A>
Goal exists_deduced(F body, std::tuple<A...>*) {
  return ::xlog::exists<typename is_term_of<A>::type...>(std::move(body));
}

}  // namespace detail

// exists([](TermOf<Nat> x, TermOf<Nat> y) { ... }) with the types read off
// the lambda's parameter list.
template <typename F>
  requires detail::TermLambda<F>
[[nodiscard]] Goal exists(F body) {
  using Args = typename detail::call_signature<decltype(&F::operator())>::args;
  return detail::exists_deduced(std::move(body), static_cast<Args*>(nullptr));
}

namespace notation {

// x == y is x === y; x != y is x =/= y. Kept in their own namespace so the
// operators do not hijack term comparison elsewhere.
template <LogicalType T>
[[nodiscard]] Goal operator==(const TermOf<T>& a, const std::type_identity_t<TermOf<T>>& b) {
  return eq(a.term(), b.term());
}

template <LogicalType T>
[[nodiscard]] Goal operator!=(const TermOf<T>& a, const std::type_identity_t<TermOf<T>>& b) {
  return neq(a.term(), b.term());
}

}  // namespace notation

}  // namespace xlog
