#include "ua/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "ua/algebra.hpp"
#include "ua/equational.hpp"
#include "ua/error.hpp"
#include "ua/io.hpp"
#include "ua/oplist.hpp"
#include "ua/syntax.hpp"
#include "ua/term.hpp"

namespace ua::cli {

using ojson = nlohmann::ordered_json;

namespace {

struct Options {
  bool json = false;
  Limits limits;
  std::size_t budget = default_evaluation_budget;
  std::size_t enum_limit = default_enumeration_limit;

  std::string sig_path;
  std::string alg_path;
  std::string from_path;
  std::string to_path;
  std::string theory_path;
  std::string map_text;
  std::size_t max_len = 0;
  std::string term_text;
  std::vector<std::string> terms;
};

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::bad_input, what); }

Signature load_signature(const Options& opt) {
  return signature_from_json(read_json_file(opt.sig_path), opt.limits);
}

FiniteAlgebra load_algebra(const Signature& sig, const std::string& path) {
  try {
    return algebra_from_json(sig, read_json_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what(), e.position());
  }
}

bool looks_functional(std::string_view text) {
  return text.find_first_of("(),") != std::string_view::npos;
}

// Raw list input in one of three forms: a JSON index array "[1,1,0]",
// functional notation "s(s(z))", or whitespace-separated names "s s z".
// Functional notation is validated while parsing.
OpList read_oplist(const Signature& sig, const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      bad("invalid index array '" + text + "': " + e.what());
    }
    if (!j.is_array()) bad("invalid index array '" + text + "'");
    std::vector<std::uint32_t> idx;
    for (const auto& v : j) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() > UINT32_MAX) {
        bad("invalid symbol index in '" + text + "'");
      }
      idx.push_back(v.get<std::uint32_t>());
    }
    return make_oplist(sig, idx);
  }
  if (looks_functional(text)) {
    const Term t = parse_term(sig, text);
    return OpList(t.ops().begin(), t.ops().end());
  }
  return parse_oplist(sig, text);
}

Term read_term(const Signature& sig, const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) bad("empty term");
  OpList ops = read_oplist(sig, text);
  const Status st = oplist2status(sig, ops);
  if (!st.is_ok(1)) bad("'" + text + "' is not a term: " + to_string(st));
  return Term::from_oplist(sig, std::move(ops));
}

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << '\n'; }

std::string tuple_text(std::span<const Element> xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s + ")";
}

HomCandidate parse_map(const std::string& text, std::size_t source_carrier) {
  std::vector<std::optional<Element>> slots(source_carrier);
  auto read_number = [&](std::string_view s) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
      bad("--map: '" + std::string(s) + "' is not a natural number");
    }
    return v;
  };
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) bad("--map: expected 'source:target', got '" + std::string(item) + "'");
    const std::size_t src = read_number(item.substr(0, colon));
    const std::size_t dst = read_number(item.substr(colon + 1));
    if (src >= source_carrier) {
      throw Error(ErrorCode::carrier_mismatch, "--map: source element " + std::to_string(src) +
                                                   " outside carrier of size " +
                                                   std::to_string(source_carrier));
    }
    if (slots[src]) bad("--map: element " + std::to_string(src) + " mapped twice");
    if (dst > UINT32_MAX) bad("--map: target element " + std::to_string(dst) + " too large");
    slots[src] = static_cast<Element>(dst);
  }
  HomCandidate f;
  for (std::size_t x = 0; x < slots.size(); ++x) {
    if (!slots[x]) {
      throw Error(ErrorCode::carrier_mismatch,
                  "--map: no image given for source element " + std::to_string(x));
    }
    f.mapping.push_back(*slots[x]);
  }
  return f;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const Signature sig = load_signature(opt);
  std::vector<std::pair<std::string, Status>> results;
  for (const auto& text : opt.terms) {
    results.emplace_back(text, oplist2status(sig, read_oplist(sig, text)));
  }
  const bool all = std::all_of(results.begin(), results.end(),
                               [](const auto& r) { return r.second.is_ok(1); });
  if (opt.json) {
    ojson arr = ojson::array();
    for (const auto& [text, st] : results) {
      ojson r;
      r["input"] = text;
      r["valid"] = st.is_ok(1);
      if (st.is_ok()) {
        r["status"] = "ok";
        r["count"] = st.count();
      } else {
        r["status"] = "underflow";
        r["position"] = st.position();
      }
      arr.push_back(std::move(r));
    }
    emit(out, ojson{{"results", arr}, {"all_valid", all}});
  } else {
    for (const auto& [text, st] : results) {
      if (st.is_ok(1)) {
        out << "ok\n";
      } else if (st.is_ok()) {
        out << "error: status ok " << st.count() << ", expected ok 1\n";
      } else {
        out << "error: underflow at position " << st.position() << '\n';
      }
    }
  }
  return all ? exit_ok : exit_negative;
}

int cmd_depth(const Options& opt, std::ostream& out) {
  const Signature sig = load_signature(opt);
  const Term t = read_term(sig, opt.term_text);
  const std::size_t d = depth(sig, t);
  if (opt.json) {
    emit(out, ojson{{"term", print_term(sig, t)}, {"depth", d}});
  } else {
    out << d << '\n';
  }
  return exit_ok;
}

int cmd_eval(const Options& opt, std::ostream& out) {
  const Signature sig = load_signature(opt);
  const FiniteAlgebra alg = load_algebra(sig, opt.alg_path);
  const Term t = read_term(sig, opt.term_text);
  const Element v = eval(sig, alg, t);
  if (opt.json) {
    emit(out, ojson{{"term", print_term(sig, t)}, {"value", v}});
  } else {
    out << v << '\n';
  }
  return exit_ok;
}

int cmd_hom(const Options& opt, std::ostream& out) {
  const Signature sig = load_signature(opt);
  const FiniteAlgebra from = load_algebra(sig, opt.from_path);
  const FiniteAlgebra to = load_algebra(sig, opt.to_path);
  const HomCandidate f = parse_map(opt.map_text, from.carrier_size());
  const auto violation = check_homomorphism(sig, from, to, f);
  if (opt.json) {
    ojson j{{"homomorphism", !violation}};
    if (violation) {
      j["counterexample"] = ojson{{"symbol", sig.name(violation->symbol)},
                                  {"args", violation->args},
                                  {"image", violation->image},
                                  {"expected", violation->expected}};
    }
    emit(out, j);
  } else if (!violation) {
    out << "ok\n";
  } else {
    const std::string op = sig.name(violation->symbol);
    std::string mapped = "(";
    for (std::size_t i = 0; i < violation->args.size(); ++i) {
      if (i) mapped += ',';
      mapped += "f(" + std::to_string(violation->args[i]) + ")";
    }
    mapped += ')';
    out << "counterexample at " << op << tuple_text(violation->args) << ": f(" << op
        << tuple_text(violation->args) << ") = " << violation->image << ", " << op << mapped
        << " = " << violation->expected << '\n';
  }
  return violation ? exit_negative : exit_ok;
}

int cmd_sat(const Options& opt, std::ostream& out) {
  const Signature sig = load_signature(opt);
  const FiniteAlgebra alg = load_algebra(sig, opt.alg_path);
  Theory theory;
  try {
    theory = theory_from_json(sig, read_json_file(opt.theory_path));
  } catch (const Error& e) {
    throw Error(e.code(), opt.theory_path + ": " + e.what(), e.position());
  }
  const auto failure = check_model(sig, alg, theory, opt.budget);
  if (opt.json) {
    ojson j{{"theory", theory.name()}, {"model", !failure}};
    if (failure) {
      j["label"] = failure->label;
      j["assignment"] = failure->assignment;
    }
    emit(out, j);
  } else if (!failure) {
    out << "model\n";
  } else {
    out << "fails " << failure->label << " at " << tuple_text(failure->assignment) << '\n';
  }
  return failure ? exit_negative : exit_ok;
}

int cmd_enum(const Options& opt, std::ostream& out) {
  const Signature sig = load_signature(opt);
  const auto terms = enumerate_terms(sig, opt.max_len, opt.enum_limit);
  if (opt.json) {
    ojson arr = ojson::array();
    for (const auto& t : terms) arr.push_back(print_term(sig, t));
    emit(out, ojson{{"terms", arr}});
  } else {
    for (const auto& t : terms) out << print_term(sig, t) << '\n';
  }
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Universal algebra over finite signatures", "ua"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Emit reports as JSON");
  app.add_option("--max-arity", opt.limits.max_arity, "Largest arity accepted in signature files")
      ->capture_default_str();
  app.add_option("--max-symbols", opt.limits.max_symbols,
                 "Largest symbol count accepted in signature files")
      ->capture_default_str();
  app.add_option("--budget", opt.budget, "Most assignments checked per equation")
      ->capture_default_str();

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->add_option("--sig", opt.sig_path, "Signature JSON file")->required();
    return s;
  };

  CLI::App* check = sub("check", "Run the stack machine on each input and report its status");
  // Inputs are taken verbatim from the leftovers: a vector positional would
  // have CLI11 split "[1,0]" into two values.
  app.allow_extras();
  check->footer("Inputs: functional notation s(s(z)), names 's s z', or an index array [1,1,0]");

  CLI::App* depth_cmd = sub("depth", "Print the depth of a term");
  depth_cmd->add_option("term", opt.term_text, "Term")->required();

  CLI::App* eval_cmd = sub("eval", "Evaluate a term in a finite algebra");
  eval_cmd->add_option("--alg", opt.alg_path, "Algebra JSON file")->required();
  eval_cmd->add_option("term", opt.term_text, "Term")->required();

  CLI::App* hom = sub("hom", "Check whether a carrier map is a homomorphism");
  hom->add_option("--from", opt.from_path, "Source algebra JSON file")->required();
  hom->add_option("--to", opt.to_path, "Target algebra JSON file")->required();
  hom->add_option("--map", opt.map_text, "Carrier map, e.g. 0:0,1:1,2:0,3:1")->required();

  CLI::App* sat = sub("sat", "Check whether an algebra is a model of a theory");
  sat->add_option("--alg", opt.alg_path, "Algebra JSON file")->required();
  sat->add_option("--theory", opt.theory_path, "Theory JSON file")->required();

  CLI::App* enum_cmd = sub("enum", "List all terms up to a length");
  enum_cmd->add_option("--max-len", opt.max_len, "Longest term, in symbols")->required();
  enum_cmd->add_option("--limit", opt.enum_limit, "Largest --max-len accepted")
      ->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return exit_ok;
    }
    err << "ua: " << e.what() << '\n';
    return exit_malformed;
  }

  if (!check->parsed() && !app.remaining().empty()) {
    err << "ua: unexpected argument '" << app.remaining().front() << "'\n";
    return exit_malformed;
  }

  try {
    if (check->parsed()) {
      opt.terms = app.remaining();
      if (opt.terms.empty()) {
        err << "ua: check: at least one term is required\n";
        return exit_malformed;
      }
      return cmd_check(opt, out);
    }
    if (depth_cmd->parsed()) return cmd_depth(opt, out);
    if (eval_cmd->parsed()) return cmd_eval(opt, out);
    if (hom->parsed()) return cmd_hom(opt, out);
    if (sat->parsed()) return cmd_sat(opt, out);
    if (enum_cmd->parsed()) return cmd_enum(opt, out);
  } catch (const Error& e) {
    err << "ua: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_malformed;
  } catch (const std::exception& e) {
    err << "ua: " << e.what() << '\n';
    return exit_malformed;
  }
  return exit_malformed;
}

}  // namespace ua::cli
