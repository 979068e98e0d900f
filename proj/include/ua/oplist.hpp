#ifndef UA_OPLIST_HPP
#define UA_OPLIST_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ua/signature.hpp"

namespace ua {

/// A flat sequence of symbols, read as prefix notation: the list
/// [s, s, z] is s(s(z)).
using OpList = std::vector<OpSymbol>;

/// Converts raw indices (e.g. from a JSON array) into an OpList, rejecting
/// any index outside the signature.
OpList make_oplist(const Signature& sig, std::span<const std::uint32_t> indices);

/// Outcome of running the stack machine over an OpList.
/// ok(k): the list builds exactly k complete terms.
/// underflow(i): the symbol at left-to-right position i found fewer
/// operands than its arity.
class Status {
 public:
  enum class Kind : std::uint8_t { ok, underflow };

  static constexpr Status ok(std::size_t count) noexcept { return Status(Kind::ok, count); }
  static constexpr Status underflow(std::size_t position) noexcept {
    return Status(Kind::underflow, position);
  }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_ok() const noexcept { return kind_ == Kind::ok; }
  constexpr bool is_ok(std::size_t count) const noexcept {
    return kind_ == Kind::ok && value_ == count;
  }

  /// Number of terms built; meaningful only when is_ok().
  constexpr std::size_t count() const noexcept { return value_; }
  /// Failing position; meaningful only when !is_ok().
  constexpr std::size_t position() const noexcept { return value_; }

  friend constexpr bool operator==(Status, Status) = default;

 private:
  constexpr Status(Kind kind, std::size_t value) noexcept : kind_(kind), value_(value) {}

  Kind kind_;
  std::size_t value_;
};

std::string to_string(Status st);

/// Runs the stack machine right to left with a single counter: each symbol
/// of arity a needs a entries on the stack, pops them and pushes one.
/// O(length) time, O(1) extra space.
Status oplist2status(const Signature& sig, std::span<const OpSymbol> ops);

/// True iff the list builds exactly one term.
bool is_term(const Signature& sig, std::span<const OpSymbol> ops);

/// Splits a list of status ok(n) into its n terms. Each piece is the
/// shortest prefix of the remaining input that forms a term.
/// Throws Error(status_mismatch) if the list's status is not ok(n).
std::vector<OpList> split_terms(const Signature& sig, std::span<const OpSymbol> ops,
                                std::size_t n);

/// Length of the shortest prefix of ops forming a single term, scanning
/// left to right. Returns 0 if no prefix is a term.
std::size_t first_term_length(const Signature& sig, std::span<const OpSymbol> ops);

}  // namespace ua

#endif  // UA_OPLIST_HPP
