#include "barmu/errors.hpp"

namespace barmu {

const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Syntax: return "E-SYNTAX";
    case ErrorCode::Name: return "E-NAME";
    case ErrorCode::Unguarded: return "E-UNGUARDED";
    case ErrorCode::FreeVariable: return "E-FREEVAR";
    case ErrorCode::UnknownState: return "E-UNKNOWN-STATE";
    case ErrorCode::TopNotDeadlock: return "E-TOP-DEADLOCK";
    case ErrorCode::NotClosed: return "E-NOT-CLOSED";
    case ErrorCode::Precondition: return "E-PRECONDITION";
    case ErrorCode::Resource: return "E-RESOURCE";
  }
  return "E-UNKNOWN";
}

}  // namespace barmu
