#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcc {

// Base class for everything thrown by this library, so callers can catch
// lcc::Error and know the failure came from us rather than the runtime.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define LCC_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                             \
        explicit Name(const std::string& what) : Error(what) {}       \
    }

LCC_DEFINE_ERROR(DimensionMismatch);
LCC_DEFINE_ERROR(NotPositiveDefinite);
LCC_DEFINE_ERROR(NonSymmetric);
LCC_DEFINE_ERROR(SingularHessian);
LCC_DEFINE_ERROR(NonFinite);
LCC_DEFINE_ERROR(InvalidProbability);
LCC_DEFINE_ERROR(UnknownModel);
LCC_DEFINE_ERROR(UnknownLabelName);
LCC_DEFINE_ERROR(NonBinaryLabel);
LCC_DEFINE_ERROR(NoVariance);
LCC_DEFINE_ERROR(TooManyLabels);
LCC_DEFINE_ERROR(EmptyDataset);

#undef LCC_DEFINE_ERROR

// Parse failures carry the 1-based line number of the offending input line.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    std::size_t line;
};

}  // namespace lcc
