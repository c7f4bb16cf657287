#pragma once

#include <stdexcept>
#include <string>

namespace mcb {

// All validation failures carry a stable machine-readable code plus a
// human-readable detail string. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace mcb
