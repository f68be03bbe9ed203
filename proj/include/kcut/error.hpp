#ifndef KCUT_ERROR_HPP
#define KCUT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kcut {

enum class ErrorKind {
  kParse,
  kInvalidArgument,
  kDomain,
  kSizeLimit,
  kInvariant,
  kIo,
};

/// Single exception type for the library; `kind()` lets callers (the CLI in
/// particular) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace kcut

#endif  // KCUT_ERROR_HPP
