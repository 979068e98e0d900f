#ifndef UA_EQUATIONAL_HPP
#define UA_EQUATIONAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/signature.hpp"
#include "ua/term.hpp"

namespace ua {

/// lhs = rhs, both sides terms over the signature extended with
/// context_size variables (variable i is symbol base_size + i).
class Equation {
 public:
  /// Throws Error(invalid_symbol) if a side uses a symbol outside the
  /// extended signature.
  Equation(const Signature& sig, std::size_t context_size, Term lhs, Term rhs);

  std::size_t context_size() const noexcept { return context_size_; }
  std::size_t base_size() const noexcept { return base_size_; }
  const Term& lhs() const noexcept { return lhs_; }
  const Term& rhs() const noexcept { return rhs_; }

 private:
  std::size_t base_size_;
  std::size_t context_size_;
  Term lhs_;
  Term rhs_;
};

struct LabeledEquation {
  std::string label;
  Equation equation;
};

/// A named presentation of a variety. Labels are pairwise distinct.
class Theory {
 public:
  Theory() = default;
  /// Throws Error(duplicate_name) on a repeated label.
  Theory(std::string name, std::vector<LabeledEquation> equations);

  const std::string& name() const noexcept { return name_; }
  const std::vector<LabeledEquation>& equations() const noexcept { return equations_; }

 private:
  std::string name_;
  std::vector<LabeledEquation> equations_;
};

/// Values for x0..x(n-1).
using Assignment = std::vector<Element>;

inline constexpr std::size_t default_evaluation_budget = 10'000'000;

/// Evaluates a term over the extended signature: base symbols use the
/// algebra's tables, variable i yields asg[i].
Element eval_with(const Signature& sig, const FiniteAlgebra& alg, std::size_t context_size,
                  const Term& t, const Assignment& asg);

/// Checks lhs = rhs under every assignment, enumerated lexicographically
/// with x0 most significant. Returns the first violating assignment, or
/// nullopt if the algebra satisfies the equation. Throws
/// Error(budget_exceeded) if carrier^context_size exceeds the budget.
std::optional<Assignment> find_counterexample(const Signature& sig, const FiniteAlgebra& alg,
                                              const Equation& eq,
                                              std::size_t budget = default_evaluation_budget);

inline bool satisfies(const Signature& sig, const FiniteAlgebra& alg, const Equation& eq,
                      std::size_t budget = default_evaluation_budget) {
  return !find_counterexample(sig, alg, eq, budget).has_value();
}

struct ModelFailure {
  std::string label;
  Assignment assignment;

  friend bool operator==(const ModelFailure&, const ModelFailure&) = default;
};

/// First equation (in theory order) the algebra violates, with its least
/// counterexample; nullopt if the algebra is a model of the theory.
std::optional<ModelFailure> check_model(const Signature& sig, const FiniteAlgebra& alg,
                                        const Theory& theory,
                                        std::size_t budget = default_evaluation_budget);

inline bool is_model(const Signature& sig, const FiniteAlgebra& alg, const Theory& theory,
                     std::size_t budget = default_evaluation_budget) {
  return !check_model(sig, alg, theory, budget).has_value();
}

}  // namespace ua

#endif  // UA_EQUATIONAL_HPP
