#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradal {

enum class ErrorKind {
    InvalidArgument,
    NotSurjective,
    NotTorsionfree,
    NotEntire,
    TorsionKernelOnFractionField,
    NotASubgroup,
    NotASection,
    ParentMismatch,
    ZeroElement,
    ZeroDivisor,
    NotHomogeneous,
    PreconditionViolated,
    IncompatibleRings,
    BadOrder,
    NotSimpleBase,
    HypothesisViolated,
    UnknownCheckId,
    ParseError,
    TypeError,
};

std::string_view to_string(ErrorKind kind);

// All kernel failures are reported through this exception; `kind` lets
// callers (notably the CLI) map failures onto exit codes.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what);

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &what);

inline void require(bool condition, ErrorKind kind, const std::string &what)
{
    if (!condition)
        fail(kind, what);
}

} // namespace gradal
