#ifndef UA_TERM_HPP
#define UA_TERM_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ua/oplist.hpp"
#include "ua/signature.hpp"

namespace ua {

/// An OpList with status ok(1). The only ways to obtain one are the
/// validating constructor, build_term, destructure and enumerate_terms,
/// so every Term value is well formed over the signature it was built for.
class Term {
 public:
  /// Throws Error(status_mismatch) unless ops is a single term over sig.
  static Term from_oplist(const Signature& sig, OpList ops);

  std::span<const OpSymbol> ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  OpSymbol head() const noexcept { return ops_.front(); }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term& a, const Term& b) {
    if (a.ops_.size() != b.ops_.size()) return a.ops_.size() <=> b.ops_.size();
    return a.ops_ <=> b.ops_;
  }

 private:
  explicit Term(OpList ops) noexcept : ops_(std::move(ops)) {}

  friend Term build_term(const Signature&, OpSymbol, std::span<const Term>);
  friend std::pair<OpSymbol, std::vector<Term>> destructure(const Signature&, const Term&);
  friend std::vector<Term> enumerate_terms(const Signature&, std::size_t, std::size_t);

  OpList ops_;
};

/// The term nm(children...). Its list is nm followed by the children's
/// lists; no revalidation is needed since each child builds one term.
/// Throws Error(arity_mismatch) if children.size() != arity(nm).
Term build_term(const Signature& sig, OpSymbol nm, std::span<const Term> children);

/// Inverse of build_term: the head symbol and its immediate subterms.
std::pair<OpSymbol, std::vector<Term>> destructure(const Signature& sig, const Term& t);

/// A fold step maps a symbol and the results for its arity(nm) children,
/// in argument order, to a result.
template <class Step, class R>
concept FoldStep = requires(const Step& step, OpSymbol nm, std::span<const R> rs) {
  { step(nm, rs) } -> std::convertible_to<R>;
};

/// Structural recursion over a term: the unique function with
///   fold(step, nm(v0..vk)) == step(nm, [fold(step, v0) .. fold(step, vk)]).
/// Runs the stack machine right to left carrying results instead of a
/// count, so stack usage is independent of term depth.
template <class R, FoldStep<R> Step>
R fold(const Signature& sig, const Step& step, const Term& t) {
  static_assert(!std::same_as<R, bool>, "use a non-bool result type");
  std::vector<R> stack;
  const auto ops = t.ops();
  for (std::size_t i = ops.size(); i-- > 0;) {
    const OpSymbol nm = ops[i];
    const std::size_t a = sig.arity(nm);
    // The top `a` entries hold the children with child 0 on top; flip them
    // into argument order before handing them to the step.
    const std::size_t base = stack.size() - a;
    std::reverse(stack.begin() + static_cast<std::ptrdiff_t>(base), stack.end());
    R r = step(nm, std::span<const R>(stack.data() + base, a));
    stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(base), stack.end());
    stack.push_back(std::move(r));
  }
  return std::move(stack.back());
}

/// Height of the term tree: 1 + max over children, constants have depth 1.
std::size_t depth(const Signature& sig, const Term& t);

/// Number of symbol occurrences.
std::size_t count_nodes(const Signature& sig, const Term& t);

inline constexpr std::size_t default_enumeration_limit = 12;

/// All terms with list length <= max_len, ordered by length and then
/// lexicographically by symbol index. Throws Error(limit_exceeded) when
/// max_len > limit.
std::vector<Term> enumerate_terms(const Signature& sig, std::size_t max_len,
                                  std::size_t limit = default_enumeration_limit);

}  // namespace ua

#endif  // UA_TERM_HPP
