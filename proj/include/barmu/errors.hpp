#pragma once

#include <stdexcept>
#include <string>

namespace barmu {

enum class ErrorCode {
  Syntax,         // malformed input
  Name,           // bad or reserved identifier
  Unguarded,      // fixpoint variable not under a modality
  FreeVariable,   // fixpoint variable without binder
  UnknownState,   // automaton refers to an undeclared state
  TopNotDeadlock, // transition out of a T-state
  NotClosed,      // initial language has free names
  Precondition,   // operation called outside its contract
  Resource,       // exploration budget exhausted
};

const char* code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int col, const std::string& msg)
      : Error(code, std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_, col_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(ErrorCode::Precondition, msg) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& msg) : Error(ErrorCode::Resource, msg) {}
};

}  // namespace barmu
