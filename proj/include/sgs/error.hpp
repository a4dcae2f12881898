#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgs {

enum class Errc {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  BadSign,
  NotFound,
  TooLarge,
  Disconnected,
  NoConvergence,
  PreconditionFailed,
  NotRegular,
  ParseError,
  ValidationFailed,
  UnknownName,
  BadParams,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sgs
