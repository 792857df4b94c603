#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace oh {

// Coarse error classes; the fine-grained kind string travels alongside so
// callers (and the C API) can map to exit codes without string matching.
enum class Errc {
  parse = 3,
  not_found = 4,
  expectation = 5,
  state = 6,
  io = 7,
  bus = 8,
  conflict = 9,
  invalid = 10,
  timeout = 11,
  internal = 99,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), code_(code), kind_(std::move(kind)) {}

  Errc code() const noexcept { return code_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  Errc code_;
  std::string kind_;
};

[[noreturn]] inline void fail(Errc code, std::string kind, const std::string& msg) {
  throw Error(code, std::move(kind), msg);
}

}  // namespace oh
