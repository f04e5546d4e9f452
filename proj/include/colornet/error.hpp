#pragma once

#include <stdexcept>
#include <string>

namespace colornet {

// Base of every error the library throws. Subclasses carry no extra state;
// the type is the error code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define COLORNET_DEFINE_ERROR(Name)            \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    }

COLORNET_DEFINE_ERROR(InvalidNodeId);
COLORNET_DEFINE_ERROR(SelfLoopRejected);
COLORNET_DEFINE_ERROR(GeneratorInfeasible);
COLORNET_DEFINE_ERROR(DegreeSequenceInfeasible);
COLORNET_DEFINE_ERROR(RewireExhausted);
COLORNET_DEFINE_ERROR(InvalidColor);
COLORNET_DEFINE_ERROR(UndefinedAssortativity);
COLORNET_DEFINE_ERROR(QuartileTooSmall);
COLORNET_DEFINE_ERROR(UnknownInteractor);
COLORNET_DEFINE_ERROR(InvalidNid);
COLORNET_DEFINE_ERROR(EmptyInput);
COLORNET_DEFINE_ERROR(ConfigError);

#undef COLORNET_DEFINE_ERROR

// Parse failures remember the 1-based line they occurred on.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace colornet
