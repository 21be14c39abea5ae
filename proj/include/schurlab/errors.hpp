#pragma once

#include <stdexcept>
#include <string>

namespace schurlab {

// Bad arguments from a caller or the command line. The CLI maps this to exit 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// A sampled evaluation point hit a zero denominator. Callers resample; the
// point stream retry budget turns repeated failures into a SamplingError.
struct SingularPoint : std::runtime_error {
    explicit SingularPoint(const std::string& msg) : std::runtime_error(msg) {}
};

// Retry budget exhausted while looking for a usable evaluation point.
// The CLI maps this to exit 2 as well.
struct SamplingError : std::runtime_error {
    explicit SamplingError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace schurlab
