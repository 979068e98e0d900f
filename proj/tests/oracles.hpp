// Independent reference implementations used only by the tests. None of
// these call the stack machine, split_terms, fold or eval.
#ifndef UA_TESTS_ORACLES_HPP
#define UA_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/oplist.hpp"
#include "ua/signature.hpp"
#include "ua/term.hpp"

namespace ua::oracle {

// Corpus signatures.
inline Signature nat() { return nat_signature(); }
inline Signature binary() { return make_signature({{"f", 2}, {"a", 0}, {"b", 0}}); }
inline Signature ternary() { return make_signature({{"g", 3}, {"h", 1}, {"c", 0}, {"d", 0}}); }
inline std::vector<Signature> corpus() { return {nat(), binary(), ternary()}; }

/// An explicit tree, built by recursive descent.
struct Tree {
  OpSymbol op;
  std::vector<Tree> kids;
};

// Reads one prefix-notation tree starting at pos; nullopt if the input runs
// out first.
inline std::optional<Tree> read_tree(const Signature& sig, std::span<const OpSymbol> l,
                                     std::size_t& pos) {
  if (pos >= l.size()) return std::nullopt;
  Tree t{l[pos], {}};
  const std::size_t a = sig.entries()[l[pos].index].arity;
  ++pos;
  for (std::size_t i = 0; i < a; ++i) {
    auto kid = read_tree(sig, l, pos);
    if (!kid) return std::nullopt;
    t.kids.push_back(std::move(*kid));
  }
  return t;
}

inline std::optional<Tree> parse_tree(const Signature& sig, std::span<const OpSymbol> l) {
  std::size_t pos = 0;
  auto t = read_tree(sig, l, pos);
  if (!t || pos != l.size()) return std::nullopt;
  return t;
}

inline bool parses_as_term(const Signature& sig, std::span<const OpSymbol> l) {
  return parse_tree(sig, l).has_value();
}

/// Stack machine with a materialized stack of pending subtrees, processed
/// right to left. Returns the status the library should report.
inline Status stack_status(const Signature& sig, std::span<const OpSymbol> l) {
  std::vector<int> stack;
  for (std::size_t i = l.size(); i-- > 0;) {
    const std::size_t a = sig.entries()[l[i].index].arity;
    if (stack.size() < a) return Status::underflow(i);
    for (std::size_t k = 0; k < a; ++k) stack.pop_back();
    stack.push_back(0);
  }
  return Status::ok(stack.size());
}

inline void flatten(const Tree& t, OpList& out) {
  out.push_back(t.op);
  for (const auto& k : t.kids) flatten(k, out);
}

template <class R>
R tree_fold(const Tree& t, const std::function<R(OpSymbol, std::span<const R>)>& step) {
  std::vector<R> rs;
  for (const auto& k : t.kids) rs.push_back(tree_fold(k, step));
  return step(t.op, rs);
}

inline std::size_t tree_depth(const Tree& t) {
  std::size_t m = 0;
  for (const auto& k : t.kids) m = std::max(m, tree_depth(k));
  return 1 + m;
}

inline std::size_t tree_size(const Tree& t) {
  std::size_t n = 1;
  for (const auto& k : t.kids) n += tree_size(k);
  return n;
}

inline Element tree_eval(const Tree& t, const FiniteAlgebra& alg) {
  std::vector<Element> xs;
  for (const auto& k : t.kids) xs.push_back(tree_eval(k, alg));
  std::size_t off = 0;
  for (Element x : xs) off = off * alg.carrier_size() + x;
  return alg.table(t.op)[off];
}

/// Naive recursive fold written on top of destructure.
template <class R, class Step>
R destructure_fold(const Signature& sig, const Step& step, const Term& t) {
  auto [nm, kids] = destructure(sig, t);
  std::vector<R> rs;
  for (const auto& k : kids) rs.push_back(destructure_fold<R>(sig, step, k));
  return step(nm, std::span<const R>(rs));
}

/// Every list over sig of exactly `len` symbols, lexicographic.
inline std::vector<OpList> all_lists(const Signature& sig, std::size_t len) {
  std::vector<OpList> out;
  if (sig.empty()) {
    if (len == 0) out.emplace_back();
    return out;
  }
  OpList cur(len, OpSymbol{0});
  for (;;) {
    out.push_back(cur);
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (cur[i].index + 1 < sig.size()) {
        ++cur[i].index;
        break;
      }
      cur[i].index = 0;
      if (i == 0) return out;
    }
    if (len == 0) return out;
  }
}

/// Brute-force term enumeration: filter every list through the tree parser.
inline std::vector<OpList> filtered_terms(const Signature& sig, std::size_t max_len) {
  std::vector<OpList> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (auto& l : all_lists(sig, len)) {
      if (parses_as_term(sig, l)) out.push_back(std::move(l));
    }
  }
  return out;
}

/// All ways to cut l into contiguous pieces that are each a single term.
inline std::vector<std::vector<OpList>> term_factorizations(const Signature& sig,
                                                            std::span<const OpSymbol> l) {
  std::vector<std::vector<OpList>> out;
  if (l.empty()) {
    out.emplace_back();
    return out;
  }
  for (std::size_t cut = 1; cut <= l.size(); ++cut) {
    if (!parses_as_term(sig, l.first(cut))) continue;
    for (auto& rest : term_factorizations(sig, l.subspan(cut))) {
      std::vector<OpList> f{OpList(l.begin(), l.begin() + cut)};
      f.insert(f.end(), rest.begin(), rest.end());
      out.push_back(std::move(f));
    }
  }
  return out;
}

/// Uniformly random list of the given length.
inline OpList random_list(const Signature& sig, std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(sig.size() - 1));
  OpList l(len);
  for (auto& s : l) s = OpSymbol{pick(rng)};
  return l;
}

/// Random well-formed tree with at most `budget` nodes (approximately).
inline Tree random_tree(const Signature& sig, std::mt19937_64& rng, std::size_t budget) {
  std::vector<OpSymbol> leaves, inner;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    (sig.entries()[i].arity == 0 ? leaves : inner).push_back(OpSymbol{static_cast<std::uint32_t>(i)});
  }
  std::function<Tree(std::size_t)> go = [&](std::size_t b) -> Tree {
    std::uniform_int_distribution<std::size_t> coin(0, 2);
    if (b <= 1 || inner.empty() || coin(rng) == 0) {
      std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
      return Tree{leaves[pick(rng)], {}};
    }
    std::uniform_int_distribution<std::size_t> pick(0, inner.size() - 1);
    Tree t{inner[pick(rng)], {}};
    const std::size_t a = sig.entries()[t.op.index].arity;
    for (std::size_t i = 0; i < a; ++i) t.kids.push_back(go((b - 1) / a));
    return t;
  };
  return go(budget);
}

inline OpList random_term_list(const Signature& sig, std::mt19937_64& rng, std::size_t budget) {
  OpList l;
  flatten(random_tree(sig, rng, budget), l);
  return l;
}

}  // namespace ua::oracle

#endif  // UA_TESTS_ORACLES_HPP
