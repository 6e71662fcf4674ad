#pragma once

#include <stdexcept>
#include <string>

namespace terrafold {

enum class ErrorCode {
  SyntaxError,            // unparsable number or malformed document
  MalformedGrid,          // ragged rows, wrong-sized width/depth vectors
  NonpositiveDimension,   // height, width or depth <= 0
  EmptyGrid,              // no cells at all
  InvalidArgument,        // bad index / parameter at an API boundary
};

const char* error_code_name(ErrorCode code);

class ParseError : public std::runtime_error {
 public:
  ParseError(ErrorCode code, std::string message, int line = 0, int column = 0)
      : std::runtime_error(format(code, message, line, column)),
        code_(code),
        line_(line),
        column_(column) {}

  ErrorCode code() const { return code_; }
  int line() const { return line_; }      // 1-based, 0 when not applicable
  int column() const { return column_; }  // 1-based, 0 when not applicable

 private:
  static std::string format(ErrorCode code, const std::string& message, int line, int column);

  ErrorCode code_;
  int line_;
  int column_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MalformedGrid: return "MalformedGrid";
    case ErrorCode::NonpositiveDimension: return "NonpositiveDimension";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

inline std::string ParseError::format(ErrorCode code, const std::string& message, int line,
                                      int column) {
  std::string out = error_code_name(code);
  out += ": ";
  out += message;
  if (line > 0) {
    out += " (line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    out += ")";
  }
  return out;
}

}  // namespace terrafold
