#pragma once

#include <stdexcept>
#include <string>

namespace netmap {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroVector : Error {
    ZeroVector() : Error("zero vector has no slope") {}
};

struct SyntaxError : Error {
    SyntaxError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& invariant)
        : Error("invalid presentation: " + invariant), invariant(invariant) {}
    std::string invariant;
};

struct NonEssential : Error {
    NonEssential() : Error("slope has no essential nonperipheral preimage") {}
};

// Geometric failures of the mirror crossing computation.
struct NonTransverse : Error {
    using Error::Error;
};

struct DegenerateIncidence : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

enum class HypothesisReason { NotBasisLambda2, NotBasisLambda1, ClassSetNotInvariant, SigmaCollision };

const char* to_string(HypothesisReason r);

struct HypothesisFailed : Error {
    explicit HypothesisFailed(HypothesisReason r)
        : Error(std::string("hypothesis failed: ") + to_string(r)), reason(r) {}
    HypothesisReason reason;
};

struct MirrorsNotStabilized : Error {
    MirrorsNotStabilized() : Error("affine map does not stabilize the spin mirrors") {}
};

struct BudgetExceeded : Error {
    using Error::Error;
};

} // namespace netmap
