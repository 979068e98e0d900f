#ifndef UA_SIGNATURE_HPP
#define UA_SIGNATURE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ua {

/// Number of operands taken by an operation symbol.
using Arity = std::size_t;

/// An operation symbol, identified by its position in the signature's
/// symbol table.
struct OpSymbol {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(OpSymbol, OpSymbol) = default;
};

struct SymbolEntry {
  std::string name;
  Arity arity = 0;

  friend bool operator==(const SymbolEntry&, const SymbolEntry&) = default;
};

/// A finite, ordered family of named operation symbols with arities.
/// Immutable once built; use make_signature to construct one.
class Signature {
 public:
  Signature() = default;

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  bool contains(OpSymbol nm) const noexcept { return nm.index < symbols_.size(); }

  /// Throws Error(invalid_symbol) when nm is not a symbol of this signature.
  Arity arity(OpSymbol nm) const;
  const std::string& name(OpSymbol nm) const;

  std::optional<OpSymbol> find(std::string_view name) const;

  const std::vector<SymbolEntry>& entries() const noexcept { return symbols_; }

  OpSymbol symbol(std::size_t i) const;

  /// Largest arity in the signature, 0 if empty.
  Arity max_arity() const noexcept { return max_arity_; }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  friend Signature make_signature(std::vector<SymbolEntry> entries);

  struct NameHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<SymbolEntry> symbols_;
  std::unordered_map<std::string, std::uint32_t, NameHash, std::equal_to<>> by_name_;
  Arity max_arity_ = 0;
};

/// Builds a signature whose i-th symbol is entries[i].
/// Names must be nonempty and pairwise distinct.
Signature make_signature(std::vector<SymbolEntry> entries);

Arity arity(const Signature& sig, OpSymbol nm);

/// Appends n arity-0 symbols named x0..x(n-1). A generated name that
/// collides with an existing one gets a "_k" suffix. Original indices are
/// unchanged, so variable i is symbol sig.size() + i.
Signature extend_with_variables(const Signature& sig, std::size_t n);

/// Same construction with caller-chosen variable names. Names must not
/// clash with the signature or with each other.
Signature extend_with_named_variables(const Signature& sig,
                                      const std::vector<std::string>& names);

/// The nat example: z (arity 0) and s (arity 1).
Signature nat_signature();

}  // namespace ua

template <>
struct std::hash<ua::OpSymbol> {
  std::size_t operator()(ua::OpSymbol s) const noexcept {
    return std::hash<std::uint32_t>{}(s.index);
  }
};

#endif  // UA_SIGNATURE_HPP
