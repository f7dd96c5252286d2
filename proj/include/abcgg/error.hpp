#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace abcgg {

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  NotConnected,
  EdgeNotPresent,
  IsolatedVertex,
  EmptyList,
  DegenerateAnchors,
  TooFewParts,
  DuplicateEdgeCreated,
  InvalidParams,
  NoTheorem,
  OutsideTheoremDomain,
  PendantEdge,
  NotConnectedAfterDeletion,
  PartIsK1,
  ParseError,
  Io,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::EdgeNotPresent: return "EdgeNotPresent";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::DegenerateAnchors: return "DegenerateAnchors";
    case ErrorKind::TooFewParts: return "TooFewParts";
    case ErrorKind::DuplicateEdgeCreated: return "DuplicateEdgeCreated";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NoTheorem: return "NoTheorem";
    case ErrorKind::OutsideTheoremDomain: return "OutsideTheoremDomain";
    case ErrorKind::PendantEdge: return "PendantEdge";
    case ErrorKind::NotConnectedAfterDeletion: return "NotConnectedAfterDeletion";
    case ErrorKind::PartIsK1: return "PartIsK1";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

// Every failure in the library is reported through this type. `kind` is the
// machine-readable tag; `line` is set only for errors raised while parsing a
// document.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(format(kind, message, line)), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  static std::string format(ErrorKind kind, const std::string& message,
                            std::optional<std::size_t> line) {
    std::string out(to_string(kind));
    if (line) out += " at line " + std::to_string(*line);
    if (!message.empty()) out += ": " + message;
    return out;
  }

  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace abcgg
