#pragma once

#include <stdexcept>
#include <string>

namespace fk {

enum class ErrorKind {
  Parse,
  InvalidArgument,
  Precondition,
  NotFound,
  Numeric,
  Budget,
  Internal,
};

// Every failure raised by the library carries the name of the stage that
// produced it, so pipeline callers can report "stage: message" verbatim.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string stage, const std::string& message)
      : std::runtime_error(stage + ": " + message),
        kind_(kind),
        stage_(std::move(stage)),
        detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorKind kind_;
  std::string stage_;
  std::string detail_;
};

}  // namespace fk
