#pragma once

#include <stdexcept>
#include <string>

namespace folcone {

// Every failure the library can report, one tag per condition.
enum class ErrorKind {
    // input validation
    DuplicateLetter,
    BadRank,
    DanglingTransition,
    ZeroClassLoop,
    EmptyWord,
    IllegalTransition,
    BudgetExceeded,
    RankMismatch,
    DegenerateInput,
    ZeroVectorInput,
    BadFacet,
    BadHeight,
    ProductTypeSystem,
    DegeneratePlane,
    // mathematical failure
    NoTransverseClass,
    FamilyViolation,
    // I/O and syntax
    SyntaxError,
    SchemaError,
    IoError,
};

// Process exit codes used by the CLI. Library code never exits; it throws.
enum class ErrorClass { Validation = 1, Mathematical = 2, Io = 3 };

ErrorClass classify_error(ErrorKind kind);
const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    ErrorClass error_class() const { return classify_error(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, std::string(error_kind_name(kind)) + ": " + message);
}

} // namespace folcone
