// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace textrec {

// All core failures are thrown as Error; the C API translates them into
// status codes and a retrievable message.
class Error : public std::runtime_error {
public:
  enum class Kind {
    invalid, // bad argument, contract violation, bad config
    io,      // filesystem / OS level failure
    format,  // unparsable or corrupt data
    state,   // operation not valid in the current state
  };

  Error(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

[[noreturn]] inline void fail_invalid(std::string msg) {
  throw Error(Error::Kind::invalid, std::move(msg));
}
[[noreturn]] inline void fail_io(std::string msg) {
  throw Error(Error::Kind::io, std::move(msg));
}
[[noreturn]] inline void fail_format(std::string msg) {
  throw Error(Error::Kind::format, std::move(msg));
}
[[noreturn]] inline void fail_state(std::string msg) {
  throw Error(Error::Kind::state, std::move(msg));
}

} // namespace textrec
