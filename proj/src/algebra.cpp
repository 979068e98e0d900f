#include "ua/algebra.hpp"

#include <limits>

#include "ua/error.hpp"

namespace ua {

std::size_t tuple_offset(std::size_t carrier, std::span<const Element> xs) {
  std::size_t off = 0;
  for (Element x : xs) off = off * carrier + x;
  return off;
}

std::optional<std::size_t> checked_power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::size_t>::max() / base) return std::nullopt;
    r *= base;
  }
  return r;
}

bool next_tuple(std::vector<Element>& xs, std::size_t carrier) {
  for (std::size_t i = xs.size(); i-- > 0;) {
    if (xs[i] + 1 < carrier) {
      ++xs[i];
      return true;
    }
    xs[i] = 0;
  }
  return false;
}

FiniteAlgebra::FiniteAlgebra(const Signature& sig, std::size_t carrier_size,
                             std::vector<std::vector<Element>> tables)
    : carrier_(carrier_size), tables_(std::move(tables)) {
  if (carrier_ == 0) throw Error(ErrorCode::bad_input, "carrier must have at least one element");
  if (carrier_ > std::numeric_limits<Element>::max()) {
    throw Error(ErrorCode::bad_input, "carrier size " + std::to_string(carrier_) + " too large");
  }
  if (tables_.size() != sig.size()) {
    throw Error(ErrorCode::bad_input, "expected " + std::to_string(sig.size()) +
                                          " operation tables, got " +
                                          std::to_string(tables_.size()));
  }
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    const auto& name = sig.entries()[i].name;
    const auto want = checked_power(carrier_, sig.entries()[i].arity);
    if (!want || tables_[i].size() != *want) {
      throw Error(ErrorCode::bad_input,
                  "table for '" + name + "' has " + std::to_string(tables_[i].size()) +
                      " entries, expected " + (want ? std::to_string(*want) : "an overflowing count"));
    }
    for (std::size_t j = 0; j < tables_[i].size(); ++j) {
      if (tables_[i][j] >= carrier_) {
        throw Error(ErrorCode::carrier_mismatch,
                    "table for '" + name + "' entry " + std::to_string(j) + " = " +
                        std::to_string(tables_[i][j]) + " outside carrier of size " +
                        std::to_string(carrier_));
      }
    }
  }
}

Element eval(const Signature& sig, const FiniteAlgebra& alg, const Term& t) {
  return fold<Element>(
      sig, [&](OpSymbol nm, std::span<const Element> xs) { return alg.apply(nm, xs); }, t);
}

std::optional<HomViolation> check_homomorphism(const Signature& sig, const FiniteAlgebra& from,
                                               const FiniteAlgebra& to, const HomCandidate& f) {
  if (from.symbol_count() != sig.size() || to.symbol_count() != sig.size()) {
    throw Error(ErrorCode::bad_input, "algebras are not over the same signature");
  }
  if (f.mapping.size() != from.carrier_size()) {
    throw Error(ErrorCode::carrier_mismatch,
                "map has " + std::to_string(f.mapping.size()) + " entries, source carrier has " +
                    std::to_string(from.carrier_size()));
  }
  for (std::size_t x = 0; x < f.mapping.size(); ++x) {
    if (f.mapping[x] >= to.carrier_size()) {
      throw Error(ErrorCode::carrier_mismatch,
                  "map sends " + std::to_string(x) + " to " + std::to_string(f.mapping[x]) +
                      ", outside target carrier of size " + std::to_string(to.carrier_size()));
    }
  }
  std::vector<Element> image_args;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const OpSymbol nm{static_cast<std::uint32_t>(i)};
    std::vector<Element> xs(sig.arity(nm), 0);
    do {
      image_args.resize(xs.size());
      for (std::size_t k = 0; k < xs.size(); ++k) image_args[k] = f.mapping[xs[k]];
      const Element lhs = f.mapping[from.apply(nm, xs)];
      const Element rhs = to.apply(nm, image_args);
      if (lhs != rhs) return HomViolation{nm, xs, lhs, rhs};
    } while (next_tuple(xs, from.carrier_size()));
  }
  return std::nullopt;
}

HomCandidate compose(const HomCandidate& g, const HomCandidate& f) {
  HomCandidate out;
  out.mapping.reserve(f.mapping.size());
  for (Element x : f.mapping) out.mapping.push_back(g.mapping.at(x));
  return out;
}

}  // namespace ua
