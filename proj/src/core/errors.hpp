#ifndef POINTMASS_CORE_ERRORS_HPP
#define POINTMASS_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pointmass {

enum class ErrorCode {
  invalid_argument = 1,
  invalid_coefficient,
  not_in_class,
  conditioning,
  overflow,
  numeric,
  io,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace pointmass

#endif
