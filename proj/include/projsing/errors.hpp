#pragma once

#include <stdexcept>
#include <string>

namespace projsing {

// Error categories map one-to-one onto CLI exit codes (see cli.hpp).
enum class ErrorKind {
  Validation,          // malformed input, ambient mismatch, out-of-range index
  Hypothesis,          // a theorem hypothesis gate failed
  Indeterminate,       // answer depends on points outside the base field
  StabilizationCap,    // truncation escalation hit the cap
  NotStabilized,       // caller should retry with a larger truncation
  Internal             // invariant violation; always a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::Validation, what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::Internal, what);
}

}  // namespace projsing
