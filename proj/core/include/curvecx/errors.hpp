#pragma once

#include <stdexcept>
#include <string>

namespace ccx {

enum class Err {
    ZeroSlopePair,
    NotFareyRelated,
    Overflow,
    InsufficientData,
    Inconsistent,
    UnsupportedSurface,
    ModelMismatch,
    EmptyAfterReduction,
    NotSimple,
    NotEssential,
    NotTopRelated,
    PreconditionFailed,
    SearchExhausted,
    BudgetExceeded,
    InvalidMappingClass,
    WrongSurface,
    ChartInconsistent,
    InsufficientOverlap,
    ConfigNotFound,
    Internal,
    Usage,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] void fail(Err code, const std::string& msg);

// Model consistency check, never compiled out. A failure means the
// combinatorial model itself is broken, not that the input was bad.
#define CCX_CHECK(cond, msg)                                        \
    do {                                                            \
        if (!(cond)) ::ccx::fail(::ccx::Err::Internal, (msg));      \
    } while (0)

}  // namespace ccx
