#include "ua/oplist.hpp"

#include "ua/error.hpp"

namespace ua {

OpList make_oplist(const Signature& sig, std::span<const std::uint32_t> indices) {
  OpList ops;
  ops.reserve(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= sig.size()) {
      throw Error(ErrorCode::invalid_symbol,
                  "symbol index " + std::to_string(indices[i]) + " at position " +
                      std::to_string(i) + " out of range for signature of size " +
                      std::to_string(sig.size()),
                  i);
    }
    ops.push_back(OpSymbol{indices[i]});
  }
  return ops;
}

std::string to_string(Status st) {
  if (st.is_ok()) return "ok " + std::to_string(st.count());
  return "underflow at position " + std::to_string(st.position());
}

Status oplist2status(const Signature& sig, std::span<const OpSymbol> ops) {
  std::size_t k = 0;
  for (std::size_t i = ops.size(); i-- > 0;) {
    const Arity a = sig.arity(ops[i]);
    if (k < a) return Status::underflow(i);
    k = k - a + 1;
  }
  return Status::ok(k);
}

bool is_term(const Signature& sig, std::span<const OpSymbol> ops) {
  return oplist2status(sig, ops).is_ok(1);
}

std::size_t first_term_length(const Signature& sig, std::span<const OpSymbol> ops) {
  // Prefix reading: `pending` counts subterms still owed.
  std::size_t pending = 1;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    pending = pending - 1 + sig.arity(ops[i]);
    if (pending == 0) return i + 1;
  }
  return 0;
}

std::vector<OpList> split_terms(const Signature& sig, std::span<const OpSymbol> ops,
                                std::size_t n) {
  const Status st = oplist2status(sig, ops);
  if (!st.is_ok(n)) {
    throw Error(ErrorCode::status_mismatch,
                "cannot split into " + std::to_string(n) + " terms: status is " + to_string(st));
  }
  std::vector<OpList> out;
  out.reserve(n);
  std::size_t start = 0;
  while (start < ops.size()) {
    const std::size_t len = first_term_length(sig, ops.subspan(start));
    out.emplace_back(ops.begin() + start, ops.begin() + start + len);
    start += len;
  }
  return out;
}

}  // namespace ua
