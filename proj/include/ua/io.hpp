#ifndef UA_IO_HPP
#define UA_IO_HPP

#include <cstddef>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "ua/algebra.hpp"
#include "ua/equational.hpp"
#include "ua/signature.hpp"

namespace ua {

/// Sanity limits applied when reading signature files.
struct Limits {
  std::size_t max_arity = std::size_t{1} << 16;
  std::size_t max_symbols = std::size_t{1} << 16;
};

/// Reads and parses a JSON file; throws Error(bad_input) on I/O or syntax
/// failure.
nlohmann::json read_json_file(const std::filesystem::path& path);

// {"symbols": [{"name": "z", "arity": 0}, {"name": "s", "arity": 1}]}
Signature signature_from_json(const nlohmann::json& j, const Limits& limits = {});
nlohmann::ordered_json signature_to_json(const Signature& sig);

// {"carrier": 4, "tables": {"z": [0], "s": [1, 2, 3, 0]}}
FiniteAlgebra algebra_from_json(const Signature& sig, const nlohmann::json& j);
nlohmann::ordered_json algebra_to_json(const Signature& sig, const FiniteAlgebra& alg);

// {"name": "comm", "equations": [{"label": "comm", "vars": ["x", "y"],
//   "lhs": "f(x,y)", "rhs": "f(y,x)"}]}
// Without "vars", names not in the signature become variables in order of
// first occurrence, scanning lhs then rhs.
Theory theory_from_json(const Signature& sig, const nlohmann::json& j);

}  // namespace ua

#endif  // UA_IO_HPP
