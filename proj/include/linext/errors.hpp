#pragma once

#include <stdexcept>
#include <string>

namespace linext {

struct CycleError : std::runtime_error {
  explicit CycleError(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotSymmetric : std::runtime_error {
  explicit NotSymmetric(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NonIntegralDeterminant : std::runtime_error {
  explicit NonIntegralDeterminant(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyShape : std::runtime_error {
  explicit EmptyShape(const std::string& what) : std::runtime_error(what) {}
};

struct NotLogConcave : std::runtime_error {
  explicit NotLogConcave(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownCheck : std::runtime_error {
  explicit UnknownCheck(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyPoset : std::runtime_error {
  explicit EmptyPoset(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace linext
