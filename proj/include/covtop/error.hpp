#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covtop {

enum class ErrorKind {
  dangling,
  open_boundary,
  disconnected,
  duplicate_id,
  not_closed,
  not_cover,
  path_endpoints,
  budget,
  fiber,
  edge_lift,
  face_lift,
  truncated,
  not_based,
  loop_outside,
  parse,
};

std::string_view to_string(ErrorKind kind);

/// Raised by every validation and construction failure in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace covtop
