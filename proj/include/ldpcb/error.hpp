#pragma once

#include <stdexcept>
#include <string>

namespace ldpcb {

enum class ErrorKind {
    Domain,       // precondition violated
    NoSolution,   // inversion target unreachable
    Degenerate,   // objective denominator vanishes on the whole interval
    Guard,        // exhaustive enumeration exceeds the desk-scale guard
    Unsupported,  // field order not available
    Parse,
    Io,
    Infeasible,   // graph degree constraints cannot be met
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
    if (!cond) fail(ErrorKind::Domain, what);
}

}  // namespace ldpcb
