#pragma once

#include <stdexcept>
#include <string>

namespace tecc {

enum class Errc {
    NotPrime,
    Reducible,
    DegreeMismatch,
    DivideByZero,
    FieldMismatch,
    Parse,
    WrongCharacteristic,
    Singular,
    OffCurve,
    CapExceeded,
    Insufficient,
    BadK,
    BadRange,
    BadTwist,
    PoleAtPoint,
    DuplicateX,
    BudgetExceeded,
    BadShape,
    DegenerateRecursion,
    Precondition,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace tecc
