#include "ua/syntax.hpp"

#include <cctype>

#include "ua/error.hpp"

namespace ua {

namespace {

bool is_delim(char c) {
  return c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c));
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  std::string_view name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delim(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string describe(const Cursor& cur) {
  if (cur.at_end()) return "end of input";
  return std::string("'") + cur.peek() + "'";
}

[[noreturn]] void arity_error(const Signature& sig, OpSymbol nm, std::size_t got,
                              std::size_t pos) {
  throw Error(ErrorCode::arity_mismatch,
              "'" + sig.name(nm) + "' expects " + std::to_string(sig.arity(nm)) +
                  " argument(s), got " + std::to_string(got) + " (at offset " +
                  std::to_string(pos) + ")",
              pos);
}

}  // namespace

bool is_printable_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (is_delim(c)) return false;
  }
  return true;
}

Term parse_term(const Signature& sig, std::string_view text) {
  struct Frame {
    OpSymbol nm;
    std::size_t got;
    std::size_t pos;
  };
  std::vector<Frame> open;
  OpList ops;
  Cursor cur(text);

  for (;;) {
    // Expecting a term.
    cur.skip_ws();
    const std::size_t at = cur.pos();
    const std::string_view name = cur.name();
    if (name.empty()) {
      throw Error(ErrorCode::syntax,
                  "expected a symbol at offset " + std::to_string(at) + ", found " + describe(cur),
                  at);
    }
    const auto nm = sig.find(name);
    if (!nm) {
      throw Error(ErrorCode::unknown_symbol,
                  "unknown symbol '" + std::string(name) + "' at offset " + std::to_string(at),
                  at);
    }
    ops.push_back(*nm);
    cur.skip_ws();
    if (!cur.at_end() && cur.peek() == '(') {
      cur.advance();
      cur.skip_ws();
      if (!cur.at_end() && cur.peek() == ')') {
        cur.advance();
        if (sig.arity(*nm) != 0) arity_error(sig, *nm, 0, at);
      } else {
        open.push_back({*nm, 0, at});
        continue;
      }
    } else if (sig.arity(*nm) != 0) {
      arity_error(sig, *nm, 0, at);
    }

    // A term just ended; close as many parent applications as possible.
    bool need_term = false;
    while (!need_term) {
      cur.skip_ws();
      if (open.empty()) {
        if (!cur.at_end()) {
          throw Error(ErrorCode::syntax,
                      "unexpected " + describe(cur) + " at offset " + std::to_string(cur.pos()) +
                          " after a complete term",
                      cur.pos());
        }
        return Term::from_oplist(sig, std::move(ops));
      }
      Frame& top = open.back();
      ++top.got;
      if (!cur.at_end() && cur.peek() == ',') {
        cur.advance();
        need_term = true;
      } else if (!cur.at_end() && cur.peek() == ')') {
        cur.advance();
        if (top.got != sig.arity(top.nm)) arity_error(sig, top.nm, top.got, top.pos);
        open.pop_back();
      } else {
        throw Error(ErrorCode::syntax,
                    "expected ',' or ')' at offset " + std::to_string(cur.pos()) + ", found " +
                        describe(cur),
                    cur.pos());
      }
    }
  }
}

std::string print_term(const Signature& sig, const Term& t) {
  std::string out;
  std::vector<std::size_t> remaining;
  for (OpSymbol nm : t.ops()) {
    out += sig.name(nm);
    const Arity a = sig.arity(nm);
    if (a > 0) {
      out += '(';
      remaining.push_back(a);
      continue;
    }
    while (!remaining.empty()) {
      if (--remaining.back() == 0) {
        out += ')';
        remaining.pop_back();
      } else {
        out += ',';
        break;
      }
    }
  }
  return out;
}

OpList parse_oplist(const Signature& sig, std::string_view text) {
  OpList ops;
  Cursor cur(text);
  for (;;) {
    cur.skip_ws();
    if (cur.at_end()) return ops;
    const std::size_t at = cur.pos();
    const std::string_view name = cur.name();
    if (name.empty()) {
      throw Error(ErrorCode::syntax,
                  "unexpected " + describe(cur) + " at offset " + std::to_string(at), at);
    }
    const auto nm = sig.find(name);
    if (!nm) {
      throw Error(ErrorCode::unknown_symbol,
                  "unknown symbol '" + std::string(name) + "' at offset " + std::to_string(at),
                  at);
    }
    ops.push_back(*nm);
  }
}

std::string print_oplist(const Signature& sig, std::span<const OpSymbol> ops) {
  std::string out;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (i) out += ' ';
    out += sig.name(ops[i]);
  }
  return out;
}

std::vector<std::string> scan_names(std::string_view text) {
  std::vector<std::string> out;
  Cursor cur(text);
  while (!cur.at_end()) {
    if (is_delim(cur.peek())) {
      cur.advance();
      continue;
    }
    out.emplace_back(cur.name());
  }
  return out;
}

}  // namespace ua
