#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scfc {

enum class ErrorKind {
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  MalformedGraph6,
  MalformedEdgeList,
  MalformedColoring,
  Disconnected,
  Trivial,
  NotAPath,
  NotATree,
  NotATriangle,
  NotEdgeDisjoint,
  InvalidParams,
  TooLarge,
  OddOrder,
  VerificationFailed,
  IoError,
  UnknownTheorem,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::MalformedEdgeList: return "MalformedEdgeList";
    case ErrorKind::MalformedColoring: return "MalformedColoring";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::Trivial: return "Trivial";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::NotATriangle: return "NotATriangle";
    case ErrorKind::NotEdgeDisjoint: return "NotEdgeDisjoint";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::OddOrder: return "OddOrder";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
  }
  return "Unknown";
}

// Every failure in the library is raised as an Error carrying its kind, so
// callers (tests, CLI) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace scfc
