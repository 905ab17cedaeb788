#pragma once

#include <stdexcept>
#include <string>

namespace drdlab {

enum class errc {
  invalid_argument,
  precondition,
  not_strongly_connected,
  consistency,
  range,
  io,
  parse,
};

class error : public std::runtime_error {
public:
  error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace drdlab
