#pragma once

#include <stdexcept>
#include <string>

namespace algebase {

enum class ErrorKind {
  parse,        // malformed input text
  domain,       // precondition violated
  budget,       // step or iteration budget exhausted
  precision,    // precision cap reached without certification
  inconsistent, // two independent backends disagreed
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::domain: return "domain";
    case ErrorKind::budget: return "budget";
    case ErrorKind::precision: return "precision";
    case ErrorKind::inconsistent: return "inconsistent";
  }
  return "unknown";
}

} // namespace algebase
