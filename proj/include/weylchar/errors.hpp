#pragma once

#include <stdexcept>
#include <string>

namespace weylchar {

struct SizeMismatch : std::runtime_error {
    explicit SizeMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& m) : std::runtime_error(m) {}
};

struct PaddingFails : std::runtime_error {
    explicit PaddingFails(const std::string& m) : std::runtime_error(m) {}
};

struct HasYVariables : std::runtime_error {
    explicit HasYVariables(const std::string& m) : std::runtime_error(m) {}
};

struct GroupMismatch : std::runtime_error {
    explicit GroupMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct DegenerateFit : std::runtime_error {
    explicit DegenerateFit(const std::string& m) : std::runtime_error(m) {}
};

struct InconsistentFit : std::runtime_error {
    explicit InconsistentFit(const std::string& m) : std::runtime_error(m) {}
};

struct NonIntegralMultiplicity : std::runtime_error {
    explicit NonIntegralMultiplicity(const std::string& m) : std::runtime_error(m) {}
};

struct NotACharacter : std::runtime_error {
    explicit NotACharacter(const std::string& m) : std::runtime_error(m) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace weylchar
