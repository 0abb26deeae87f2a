#pragma once

#include <stdexcept>
#include <string>

namespace polybern {

enum class errc {
  invalid_argument,
  parse,
  domain,           // parameter outside its mathematical domain
  order_mismatch,   // series of different truncation orders combined
  order_underflow,  // operation would need terms beyond the truncation
  compose_domain,   // inner series has a nonzero constant term
  size_limit,       // input too large for an exponential-time routine
  non_integer,      // integer-valued result or format got a proper fraction
  internal,         // invariant the implementation must uphold was violated
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace polybern
