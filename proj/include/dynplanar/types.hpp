#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dynplanar {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using DartId = std::int32_t;
using FaceId = std::int32_t;

inline constexpr std::int32_t kNone = -1;

enum class ErrorCode {
  SameFaceViolation,
  SelfLoop,
  UnknownEdge,
  UnknownVertex,
  InvalidSegment,
  InvalidTarget,
  NotAFourCycle,
  NonContiguousCut,
  DifferentComponents,
  SameNode,
  TreeEdge,
  NotOnCycle,
  NoSuchFace,
  DuplicateEdge,
  EmptyComponent,
  TooSmall,
  NotSameBlock,
  TooLarge,
  InfiniteCost,
  ParseError,
  FlipBudgetExceeded,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// A corner is the wedge at origin(dart) between rot_prev(dart) and dart.
// Isolated vertices have a single null corner with dart == kNone.
struct Corner {
  DartId dart = kNone;
  VertexId vertex = kNone;

  bool is_null() const { return dart == kNone; }
  friend bool operator==(const Corner&, const Corner&) = default;
};

}  // namespace dynplanar
