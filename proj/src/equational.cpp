#include "ua/equational.hpp"

#include <unordered_set>

#include "ua/error.hpp"

namespace ua {

namespace {

void check_symbols(const Term& t, std::size_t limit, const char* side) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.ops()[i].index >= limit) {
      throw Error(ErrorCode::invalid_symbol,
                  std::string(side) + " uses symbol index " + std::to_string(t.ops()[i].index) +
                      " outside the extended signature of size " + std::to_string(limit),
                  i);
    }
  }
}

}  // namespace

Equation::Equation(const Signature& sig, std::size_t context_size, Term lhs, Term rhs)
    : base_size_(sig.size()),
      context_size_(context_size),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {
  check_symbols(lhs_, base_size_ + context_size_, "lhs");
  check_symbols(rhs_, base_size_ + context_size_, "rhs");
}

Theory::Theory(std::string name, std::vector<LabeledEquation> equations)
    : name_(std::move(name)), equations_(std::move(equations)) {
  std::unordered_set<std::string> seen;
  for (const auto& e : equations_) {
    if (!seen.insert(e.label).second) {
      throw Error(ErrorCode::duplicate_name, "duplicate equation label '" + e.label + "'");
    }
  }
}

Element eval_with(const Signature& sig, const FiniteAlgebra& alg, std::size_t context_size,
                  const Term& t, const Assignment& asg) {
  if (asg.size() != context_size) {
    throw Error(ErrorCode::bad_input, "assignment has " + std::to_string(asg.size()) +
                                          " values for a context of " +
                                          std::to_string(context_size));
  }
  const std::size_t base = sig.size();
  const Signature ext = extend_with_variables(sig, context_size);
  return fold<Element>(
      ext,
      [&](OpSymbol nm, std::span<const Element> xs) {
        return nm.index < base ? alg.apply(nm, xs) : asg[nm.index - base];
      },
      t);
}

std::optional<Assignment> find_counterexample(const Signature& sig, const FiniteAlgebra& alg,
                                              const Equation& eq, std::size_t budget) {
  if (eq.base_size() != sig.size()) {
    throw Error(ErrorCode::bad_input, "equation was built over a signature of size " +
                                          std::to_string(eq.base_size()) + ", not " +
                                          std::to_string(sig.size()));
  }
  const std::size_t n = eq.context_size();
  const auto count = checked_power(alg.carrier_size(), n);
  if (!count || *count > budget) {
    throw Error(ErrorCode::budget_exceeded,
                "checking " + std::to_string(alg.carrier_size()) + "^" + std::to_string(n) +
                    " assignments exceeds the evaluation budget of " + std::to_string(budget));
  }
  const std::size_t base = sig.size();
  const Signature ext = extend_with_variables(sig, n);
  Assignment asg(n, 0);
  auto step = [&](OpSymbol nm, std::span<const Element> xs) {
    return nm.index < base ? alg.apply(nm, xs) : asg[nm.index - base];
  };
  do {
    if (fold<Element>(ext, step, eq.lhs()) != fold<Element>(ext, step, eq.rhs())) return asg;
  } while (next_tuple(asg, alg.carrier_size()));
  return std::nullopt;
}

std::optional<ModelFailure> check_model(const Signature& sig, const FiniteAlgebra& alg,
                                        const Theory& theory, std::size_t budget) {
  for (const auto& [label, eq] : theory.equations()) {
    if (auto cex = find_counterexample(sig, alg, eq, budget)) {
      return ModelFailure{label, std::move(*cex)};
    }
  }
  return std::nullopt;
}

}  // namespace ua
