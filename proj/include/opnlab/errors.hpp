#pragma once

#include <stdexcept>
#include <string>

namespace opnlab {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  ResourceLimit,
  PrecisionCapExceeded,
  NonPositiveInterval,
};

// Base of every error the toolkit raises. The C API maps `code()` onto
// opnlab_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define OPNLAB_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what)                          \
        : Error(ErrorCode::Name, what) {}                           \
  };

OPNLAB_DEFINE_ERROR(InvalidArgument)
OPNLAB_DEFINE_ERROR(ParseError)
OPNLAB_DEFINE_ERROR(ResourceLimit)
OPNLAB_DEFINE_ERROR(PrecisionCapExceeded)
OPNLAB_DEFINE_ERROR(NonPositiveInterval)

#undef OPNLAB_DEFINE_ERROR

}  // namespace opnlab
