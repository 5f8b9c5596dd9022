#pragma once

#include <stdexcept>
#include <string>

namespace tn {

// Error categories used across the library. `invalid_input` covers malformed
// user-supplied data (bad JSON, rank mismatches, out-of-range indices);
// `unsupported` marks operations whose preconditions exclude the request
// (e.g. inverting an automorphism with no construction recipe);
// `internal` flags states the library's own invariants rule out.
enum class ErrorKind {
  invalid_input,
  unsupported,
  resource_limit,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace tn
