#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bergepath {

enum class errc {
  invalid_vertex,
  invalid_parameter,
  invalid_input,
  arithmetic_overflow,
  parse_error,
  precondition_violation,
  wrong_regime,
  divisibility_violation,
  convexity_violation,
  out_of_theorem_range,
};

inline std::string_view to_string(errc code) {
  switch (code) {
    case errc::invalid_vertex: return "invalid-vertex";
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::invalid_input: return "invalid-input";
    case errc::arithmetic_overflow: return "arithmetic-overflow";
    case errc::parse_error: return "parse-error";
    case errc::precondition_violation: return "precondition-violation";
    case errc::wrong_regime: return "wrong-regime";
    case errc::divisibility_violation: return "divisibility-violation";
    case errc::convexity_violation: return "convexity-violation";
    case errc::out_of_theorem_range: return "out-of-theorem-range";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code table) can dispatch without string matching.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace bergepath
