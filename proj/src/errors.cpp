#include "folcone/errors.hpp"

namespace folcone {

ErrorClass classify_error(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NoTransverseClass:
        case ErrorKind::FamilyViolation:
            return ErrorClass::Mathematical;
        case ErrorKind::SyntaxError:
        case ErrorKind::SchemaError:
        case ErrorKind::IoError:
            return ErrorClass::Io;
        default:
            return ErrorClass::Validation;
    }
}

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DuplicateLetter: return "DuplicateLetter";
        case ErrorKind::BadRank: return "BadRank";
        case ErrorKind::DanglingTransition: return "DanglingTransition";
        case ErrorKind::ZeroClassLoop: return "ZeroClassLoop";
        case ErrorKind::EmptyWord: return "EmptyWord";
        case ErrorKind::IllegalTransition: return "IllegalTransition";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::ZeroVectorInput: return "ZeroVectorInput";
        case ErrorKind::BadFacet: return "BadFacet";
        case ErrorKind::BadHeight: return "BadHeight";
        case ErrorKind::ProductTypeSystem: return "ProductTypeSystem";
        case ErrorKind::DegeneratePlane: return "DegeneratePlane";
        case ErrorKind::NoTransverseClass: return "NoTransverseClass";
        case ErrorKind::FamilyViolation: return "FamilyViolation";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::IoError: return "IoError";
    }
    return "Error";
}

} // namespace folcone
