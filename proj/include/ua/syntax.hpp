#ifndef UA_SYNTAX_HPP
#define UA_SYNTAX_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ua/oplist.hpp"
#include "ua/signature.hpp"
#include "ua/term.hpp"

namespace ua {

// Surface syntax. Terms use functional notation, e.g. s(s(z)) or f(a,b);
// constants may be written with or without "()". Symbol names are any
// run of characters other than whitespace, '(', ')' and ','.
// Parsing and printing are iterative, so deeply nested terms are fine.

/// True if `name` can appear in the surface syntax.
bool is_printable_name(std::string_view name);

/// Throws Error with code syntax, unknown_symbol or arity_mismatch; the
/// error position is a byte offset into `text`.
Term parse_term(const Signature& sig, std::string_view text);

/// Minimal functional notation: no "()" on constants, no spaces.
std::string print_term(const Signature& sig, const Term& t);

/// Whitespace-separated symbol names, e.g. "s s s s z". No validity check
/// beyond symbol lookup.
OpList parse_oplist(const Signature& sig, std::string_view text);
std::string print_oplist(const Signature& sig, std::span<const OpSymbol> ops);

/// Every symbol-name token of `text`, in order of occurrence.
std::vector<std::string> scan_names(std::string_view text);

}  // namespace ua

#endif  // UA_SYNTAX_HPP
