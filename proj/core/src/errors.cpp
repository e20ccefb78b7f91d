#include "curvecx/errors.hpp"

namespace ccx {

const char* err_name(Err e) {
    switch (e) {
        case Err::ZeroSlopePair: return "ZeroSlopePair";
        case Err::NotFareyRelated: return "NotFareyRelated";
        case Err::Overflow: return "Overflow";
        case Err::InsufficientData: return "InsufficientData";
        case Err::Inconsistent: return "Inconsistent";
        case Err::UnsupportedSurface: return "UnsupportedSurface";
        case Err::ModelMismatch: return "ModelMismatch";
        case Err::EmptyAfterReduction: return "EmptyAfterReduction";
        case Err::NotSimple: return "NotSimple";
        case Err::NotEssential: return "NotEssential";
        case Err::NotTopRelated: return "NotTopRelated";
        case Err::PreconditionFailed: return "PreconditionFailed";
        case Err::SearchExhausted: return "SearchExhausted";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::InvalidMappingClass: return "InvalidMappingClass";
        case Err::WrongSurface: return "WrongSurface";
        case Err::ChartInconsistent: return "ChartInconsistent";
        case Err::InsufficientOverlap: return "InsufficientOverlap";
        case Err::ConfigNotFound: return "ConfigNotFound";
        case Err::Internal: return "Internal";
        case Err::Usage: return "Usage";
    }
    return "Unknown";
}

void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ccx
