#ifndef UA_ALGEBRA_HPP
#define UA_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ua/signature.hpp"
#include "ua/term.hpp"

namespace ua {

/// Carrier elements are dense indices 0..carrier_size-1.
using Element = std::uint32_t;

/// Row-major offset of a tuple in a table over `carrier` elements, leftmost
/// coordinate most significant.
std::size_t tuple_offset(std::size_t carrier, std::span<const Element> xs);

/// carrier^arity, or nullopt if it does not fit in size_t.
std::optional<std::size_t> checked_power(std::size_t base, std::size_t exp);

/// Steps a tuple to its lexicographic successor over {0..carrier-1}.
/// Returns false after the last tuple (and leaves it all zeros).
bool next_tuple(std::vector<Element>& xs, std::size_t carrier);

/// An algebra over a signature with a finite carrier: one total operation
/// table per symbol, each listing outputs for all argument tuples in
/// lexicographic order.
class FiniteAlgebra {
 public:
  /// Validates table count, table sizes (carrier^arity) and entry range.
  /// Throws Error(carrier_mismatch) or Error(bad_input).
  FiniteAlgebra(const Signature& sig, std::size_t carrier_size,
                std::vector<std::vector<Element>> tables);

  std::size_t carrier_size() const noexcept { return carrier_; }
  std::size_t symbol_count() const noexcept { return tables_.size(); }

  std::span<const Element> table(OpSymbol nm) const { return tables_.at(nm.index); }

  Element apply(OpSymbol nm, std::span<const Element> args) const {
    return tables_[nm.index][tuple_offset(carrier_, args)];
  }

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  std::size_t carrier_;
  std::vector<std::vector<Element>> tables_;
};

/// Value of a term: the unique homomorphism from the term algebra into A,
/// computed as a fold with each symbol interpreted by its table.
Element eval(const Signature& sig, const FiniteAlgebra& alg, const Term& t);

/// A candidate carrier map from a source algebra to a target algebra.
struct HomCandidate {
  std::vector<Element> mapping;
};

/// First place where f fails to commute with an operation:
///   f(op_A(args)) = image, op_B(f(args)) = expected.
struct HomViolation {
  OpSymbol symbol;
  std::vector<Element> args;
  Element image;
  Element expected;

  friend bool operator==(const HomViolation&, const HomViolation&) = default;
};

/// Checks every symbol (in index order) and every argument tuple (in
/// lexicographic order); returns the first violation, or nullopt if f is
/// a homomorphism. Throws Error(carrier_mismatch) if f is not a total map
/// from A's carrier into B's.
std::optional<HomViolation> check_homomorphism(const Signature& sig, const FiniteAlgebra& from,
                                               const FiniteAlgebra& to, const HomCandidate& f);

inline bool is_homomorphism(const Signature& sig, const FiniteAlgebra& from,
                            const FiniteAlgebra& to, const HomCandidate& f) {
  return !check_homomorphism(sig, from, to, f).has_value();
}

HomCandidate compose(const HomCandidate& g, const HomCandidate& f);

}  // namespace ua

#endif  // UA_ALGEBRA_HPP
