#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace confspace {

enum class ErrorCode {
  SingletonNub,
  VertexOutOfRange,
  TooManyVertices,
  NotDownwardClosed,
  MissingSingleton,
  TooLarge,
  NotIndependent,
  NonPositiveWeight,
  ZeroConstantTerm,
  EndpointRoot,
  ZeroAtOrigin,
  TrivialConfiguration,
  OutOfRange,
  MissingEntry,
  NotRightAngled,
  BadParameters,
  SelfLoop,
  UnknownDataset,
  ParseError,
  ValidationError,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace confspace
