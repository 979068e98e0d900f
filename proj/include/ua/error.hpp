#ifndef UA_ERROR_HPP
#define UA_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ua {

enum class ErrorCode {
  empty_name,
  duplicate_name,
  invalid_symbol,
  status_mismatch,
  arity_mismatch,
  limit_exceeded,
  carrier_mismatch,
  budget_exceeded,
  unknown_symbol,
  syntax,
  bad_input,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library. Parse errors carry a byte offset
// into the text they were reading.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(what), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace ua

#endif  // UA_ERROR_HPP
