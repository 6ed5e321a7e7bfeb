#ifndef HYPSPEC_ERRORS_HPP
#define HYPSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypspec {

enum class Errc {
    NonPositiveSpeed,
    DimensionMismatch,
    NonIncreasingGrid,
    OutOfRange,
    IntegratorFailure,
    SingularK,
    EigDecompFailure,
    ZeroEigenvalue,
    NoEigenvector,
    DefectiveChain,
    IndexOutOfChain,
    NotDiagonalizable,
    NegativeTime,
    InvalidConfig,
    IoFailure,
    InvalidArgument,
};

const char* errc_name(Errc c);

/// Toolkit-wide exception; carries a machine-readable code next to the message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace hypspec

#endif
