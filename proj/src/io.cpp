#include "ua/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

#include "ua/error.hpp"
#include "ua/syntax.hpp"

namespace ua {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::bad_input, what); }

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(where + ": missing key \"" + key + "\"");
  return *it;
}

std::size_t natural(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) bad(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
}

Signature signature_from_json(const json& j, const Limits& limits) {
  const json& syms = member(j, "symbols", "signature");
  if (!syms.is_array()) bad("signature: \"symbols\" must be an array");
  if (syms.size() > limits.max_symbols) {
    throw Error(ErrorCode::limit_exceeded, "signature has " + std::to_string(syms.size()) +
                                               " symbols, limit is " +
                                               std::to_string(limits.max_symbols));
  }
  std::vector<SymbolEntry> entries;
  entries.reserve(syms.size());
  for (std::size_t i = 0; i < syms.size(); ++i) {
    const std::string where = "signature symbol " + std::to_string(i);
    const json& name = member(syms[i], "name", where);
    if (!name.is_string()) bad(where + ": \"name\" must be a string");
    const auto n = name.get<std::string>();
    if (!n.empty() && !is_printable_name(n)) {
      bad(where + ": name '" + n + "' contains whitespace, parentheses or commas");
    }
    const std::size_t a = natural(member(syms[i], "arity", where), where + " arity");
    if (a > limits.max_arity) {
      throw Error(ErrorCode::limit_exceeded, where + ": arity " + std::to_string(a) +
                                                 " exceeds limit " +
                                                 std::to_string(limits.max_arity));
    }
    entries.push_back({n, a});
  }
  return make_signature(std::move(entries));
}

nlohmann::ordered_json signature_to_json(const Signature& sig) {
  nlohmann::ordered_json syms = nlohmann::ordered_json::array();
  for (const auto& e : sig.entries()) syms.push_back({{"name", e.name}, {"arity", e.arity}});
  return {{"symbols", syms}};
}

FiniteAlgebra algebra_from_json(const Signature& sig, const json& j) {
  const std::size_t carrier = natural(member(j, "carrier", "algebra"), "algebra carrier");
  if (carrier == 0) bad("algebra: carrier must have at least one element");
  if (carrier > std::numeric_limits<Element>::max()) bad("algebra: carrier too large");
  const json& tables = member(j, "tables", "algebra");
  if (!tables.is_object()) bad("algebra: \"tables\" must be an object");
  for (const auto& [key, _] : tables.items()) {
    if (!sig.find(key)) bad("algebra: table for unknown symbol '" + key + "'");
  }
  std::vector<std::vector<Element>> out;
  out.reserve(sig.size());
  for (const auto& e : sig.entries()) {
    auto it = tables.find(e.name);
    if (it == tables.end()) bad("algebra: missing table for '" + e.name + "'");
    if (!it->is_array()) bad("algebra: table for '" + e.name + "' must be an array");
    const auto want = checked_power(carrier, e.arity);
    if (!want || it->size() != *want) {
      bad("algebra: table for '" + e.name + "' has " + std::to_string(it->size()) +
          " entries, expected " + (want ? std::to_string(*want) : "too many to store"));
    }
    std::vector<Element> row;
    row.reserve(it->size());
    for (const auto& v : *it) {
      const std::size_t x = natural(v, "algebra table '" + e.name + "'");
      if (x >= carrier) {
        throw Error(ErrorCode::carrier_mismatch, "algebra: table for '" + e.name + "' has entry " +
                                                     std::to_string(x) +
                                                     " outside carrier of size " +
                                                     std::to_string(carrier));
      }
      row.push_back(static_cast<Element>(x));
    }
    out.push_back(std::move(row));
  }
  return FiniteAlgebra(sig, carrier, std::move(out));
}

nlohmann::ordered_json algebra_to_json(const Signature& sig, const FiniteAlgebra& alg) {
  nlohmann::ordered_json tables = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const OpSymbol nm{static_cast<std::uint32_t>(i)};
    const auto t = alg.table(nm);
    tables[sig.name(nm)] = std::vector<Element>(t.begin(), t.end());
  }
  return {{"carrier", alg.carrier_size()}, {"tables", tables}};
}

Theory theory_from_json(const Signature& sig, const json& j) {
  const json& name = member(j, "name", "theory");
  if (!name.is_string()) bad("theory: \"name\" must be a string");
  const json& eqs = member(j, "equations", "theory");
  if (!eqs.is_array()) bad("theory: \"equations\" must be an array");

  std::vector<LabeledEquation> out;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    const std::string where = "theory equation " + std::to_string(i);
    const json& label = member(eqs[i], "label", where);
    const json& lhs = member(eqs[i], "lhs", where);
    const json& rhs = member(eqs[i], "rhs", where);
    if (!label.is_string() || !lhs.is_string() || !rhs.is_string()) {
      bad(where + ": \"label\", \"lhs\" and \"rhs\" must be strings");
    }
    const auto lhs_text = lhs.get<std::string>();
    const auto rhs_text = rhs.get<std::string>();

    std::vector<std::string> vars;
    if (auto it = eqs[i].find("vars"); it != eqs[i].end()) {
      if (!it->is_array()) bad(where + ": \"vars\" must be an array of strings");
      for (const auto& v : *it) {
        if (!v.is_string() || !is_printable_name(v.get<std::string>())) {
          bad(where + ": invalid variable name");
        }
        vars.push_back(v.get<std::string>());
      }
    } else {
      for (const auto* text : {&lhs_text, &rhs_text}) {
        for (auto& n : scan_names(*text)) {
          if (!sig.find(n) && std::find(vars.begin(), vars.end(), n) == vars.end()) {
            vars.push_back(std::move(n));
          }
        }
      }
    }
    Signature ext;
    try {
      ext = extend_with_named_variables(sig, vars);
    } catch (const Error& e) {
      bad(where + ": variable names clash with the signature or each other (" + e.what() + ")");
    }
    auto parse_side = [&](const std::string& text, const char* side) {
      try {
        return parse_term(ext, text);
      } catch (const Error& e) {
        throw Error(e.code(), where + " " + side + ": " + e.what(), e.position());
      }
    };
    Term l = parse_side(lhs_text, "lhs");
    Term r = parse_side(rhs_text, "rhs");
    out.push_back({label.get<std::string>(), Equation(sig, vars.size(), std::move(l), std::move(r))});
  }
  return Theory(name.get<std::string>(), std::move(out));
}

}  // namespace ua
