#include "ua/term.hpp"

#include <map>

#include "ua/error.hpp"

namespace ua {

Term Term::from_oplist(const Signature& sig, OpList ops) {
  const Status st = oplist2status(sig, ops);
  if (!st.is_ok(1)) {
    throw Error(ErrorCode::status_mismatch, "not a term: status is " + to_string(st),
                st.is_ok() ? std::nullopt : std::optional<std::size_t>(st.position()));
  }
  return Term(std::move(ops));
}

Term build_term(const Signature& sig, OpSymbol nm, std::span<const Term> children) {
  const Arity a = sig.arity(nm);
  if (children.size() != a) {
    throw Error(ErrorCode::arity_mismatch, "symbol '" + sig.name(nm) + "' expects " +
                                               std::to_string(a) + " argument(s), got " +
                                               std::to_string(children.size()));
  }
  std::size_t total = 1;
  for (const auto& c : children) total += c.size();
  OpList ops;
  ops.reserve(total);
  ops.push_back(nm);
  for (const auto& c : children) ops.insert(ops.end(), c.ops_.begin(), c.ops_.end());
  return Term(std::move(ops));
}

std::pair<OpSymbol, std::vector<Term>> destructure(const Signature& sig, const Term& t) {
  const OpSymbol nm = t.head();
  const auto tail = t.ops().subspan(1);
  std::vector<Term> children;
  children.reserve(sig.arity(nm));
  std::size_t start = 0;
  while (start < tail.size()) {
    const std::size_t len = first_term_length(sig, tail.subspan(start));
    children.push_back(Term(OpList(tail.begin() + start, tail.begin() + start + len)));
    start += len;
  }
  return {nm, std::move(children)};
}

std::size_t depth(const Signature& sig, const Term& t) {
  return fold<std::size_t>(
      sig,
      [](OpSymbol, std::span<const std::size_t> levels) {
        std::size_t m = 0;
        for (auto d : levels) m = std::max(m, d);
        return 1 + m;
      },
      t);
}

std::size_t count_nodes(const Signature& sig, const Term& t) {
  return fold<std::size_t>(
      sig,
      [](OpSymbol, std::span<const std::size_t> rs) {
        std::size_t n = 1;
        for (auto r : rs) n += r;
        return n;
      },
      t);
}

namespace {

// All lists of exactly `len` symbols that, read in prefix order, complete
// exactly `pending` terms. Generated head-first in symbol index order, so
// each bucket comes out lexicographically sorted.
class PrefixEnumerator {
 public:
  explicit PrefixEnumerator(const Signature& sig) : sig_(sig) {}

  const std::vector<OpList>& lists(std::size_t len, std::size_t pending) {
    auto key = std::make_pair(len, pending);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<OpList> out;
    if (pending == 0) {
      if (len == 0) out.emplace_back();
    } else if (pending <= len) {
      for (std::size_t i = 0; i < sig_.size(); ++i) {
        const OpSymbol nm{static_cast<std::uint32_t>(i)};
        const std::size_t next = pending - 1 + sig_.arity(nm);
        if (next > len - 1) continue;
        for (const auto& rest : lists(len - 1, next)) {
          OpList l;
          l.reserve(len);
          l.push_back(nm);
          l.insert(l.end(), rest.begin(), rest.end());
          out.push_back(std::move(l));
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const Signature& sig_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<OpList>> memo_;
};

}  // namespace

std::vector<Term> enumerate_terms(const Signature& sig, std::size_t max_len, std::size_t limit) {
  if (max_len > limit) {
    throw Error(ErrorCode::limit_exceeded, "enumeration length " + std::to_string(max_len) +
                                               " exceeds limit " + std::to_string(limit));
  }
  PrefixEnumerator gen(sig);
  std::vector<Term> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const auto& l : gen.lists(len, 1)) out.push_back(Term(l));
  }
  return out;
}

}  // namespace ua
