// Error hierarchy. Input-shaped problems (parsing, inhomogeneity) are
// distinguished from internal-invariant failures (NotInImage, TwistMismatch)
// because the CLI maps them to different exit codes.

#ifndef LYUCALC_ERROR_HPP
#define LYUCALC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lyu {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- input-shaped errors

struct ParseError : Error {
    int line, col;
    ParseError(const std::string& msg, int line_, int col_)
        : Error("parse error at line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

struct InhomogeneousError : Error {
    explicit InhomogeneousError(const std::string& msg) : Error(msg) {}
};

struct RingMismatch : Error {
    explicit RingMismatch(const std::string& msg) : Error(msg) {}
};

// ---- internal invariant failures (a bug somewhere, never valid-input behavior)

struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

// target vector outside the column span of a scalar matrix
struct NotInSpan : InternalError {
    explicit NotInSpan(const std::string& msg) : InternalError(msg) {}
};

// module element outside the image of a matrix while lifting a chain map;
// signals broken exactness in a resolution, never a user error
struct NotInImage : InternalError {
    explicit NotInImage(const std::string& msg) : InternalError(msg) {}
};

// the degree bookkeeping of the Frobenius pullback failed to cancel; the
// pipeline asserts at runtime that its twist ledger keeps maps degree-preserving
struct TwistMismatch : InternalError {
    explicit TwistMismatch(const std::string& msg) : InternalError(msg) {}
};

} // namespace lyu

#endif
