#include "ua/signature.hpp"

#include <algorithm>

#include "ua/error.hpp"

namespace ua {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::empty_name: return "empty name";
    case ErrorCode::duplicate_name: return "duplicate name";
    case ErrorCode::invalid_symbol: return "invalid symbol";
    case ErrorCode::status_mismatch: return "status mismatch";
    case ErrorCode::arity_mismatch: return "arity mismatch";
    case ErrorCode::limit_exceeded: return "limit exceeded";
    case ErrorCode::carrier_mismatch: return "carrier mismatch";
    case ErrorCode::budget_exceeded: return "budget exceeded";
    case ErrorCode::unknown_symbol: return "unknown symbol";
    case ErrorCode::syntax: return "syntax error";
    case ErrorCode::bad_input: return "bad input";
  }
  return "error";
}

Arity Signature::arity(OpSymbol nm) const {
  if (!contains(nm)) {
    throw Error(ErrorCode::invalid_symbol,
                "symbol index " + std::to_string(nm.index) + " out of range for signature of size " +
                    std::to_string(symbols_.size()));
  }
  return symbols_[nm.index].arity;
}

const std::string& Signature::name(OpSymbol nm) const {
  if (!contains(nm)) {
    throw Error(ErrorCode::invalid_symbol,
                "symbol index " + std::to_string(nm.index) + " out of range for signature of size " +
                    std::to_string(symbols_.size()));
  }
  return symbols_[nm.index].name;
}

std::optional<OpSymbol> Signature::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return OpSymbol{it->second};
}

OpSymbol Signature::symbol(std::size_t i) const {
  OpSymbol nm{static_cast<std::uint32_t>(i)};
  if (i >= symbols_.size()) {
    throw Error(ErrorCode::invalid_symbol, "symbol index " + std::to_string(i) + " out of range");
  }
  return nm;
}

Signature make_signature(std::vector<SymbolEntry> entries) {
  Signature sig;
  sig.by_name_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.name.empty()) {
      throw Error(ErrorCode::empty_name, "symbol " + std::to_string(i) + " has an empty name");
    }
    if (!sig.by_name_.emplace(e.name, static_cast<std::uint32_t>(i)).second) {
      throw Error(ErrorCode::duplicate_name, "duplicate symbol name '" + e.name + "'");
    }
    sig.max_arity_ = std::max(sig.max_arity_, e.arity);
  }
  sig.symbols_ = std::move(entries);
  return sig;
}

Arity arity(const Signature& sig, OpSymbol nm) { return sig.arity(nm); }

Signature extend_with_variables(const Signature& sig, std::size_t n) {
  std::vector<SymbolEntry> entries = sig.entries();
  entries.reserve(entries.size() + n);
  auto taken = [&](const std::string& s) {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const SymbolEntry& e) { return e.name == s; });
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::string base = "x" + std::to_string(i);
    std::string name = base;
    for (std::size_t k = 1; taken(name); ++k) name = base + "_" + std::to_string(k);
    entries.push_back({std::move(name), 0});
  }
  return make_signature(std::move(entries));
}

Signature extend_with_named_variables(const Signature& sig,
                                      const std::vector<std::string>& names) {
  std::vector<SymbolEntry> entries = sig.entries();
  for (const auto& v : names) entries.push_back({v, 0});
  return make_signature(std::move(entries));
}

Signature nat_signature() { return make_signature({{"z", 0}, {"s", 1}}); }

}  // namespace ua
