#pragma once

#include <stdexcept>
#include <string>

namespace kolmo {

// Domain error with a stable machine-readable code alongside the message.
// Codes are what the CLI serializes into its JSON error envelope.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace kolmo
