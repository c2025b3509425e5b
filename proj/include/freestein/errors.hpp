#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace freestein {

/// Computational failure carrying a stable machine-readable name, so CLI
/// reports and callers can match on it without parsing message text.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define FREESTEIN_ERROR(NAME)                                        \
    class NAME : public Error {                                      \
    public:                                                          \
        explicit NAME(const std::string& what) : Error(#NAME, what) {} \
    };

// measure_core
FREESTEIN_ERROR(NonPositiveMass)
FREESTEIN_ERROR(NegativeDensity)
FREESTEIN_ERROR(QuantileNonConvergent)
FREESTEIN_ERROR(SubordinationNonConvergent)
// equilibrium
FREESTEIN_ERROR(NewtonDiverged)
FREESTEIN_ERROR(WorkingIntervalTooSmall)
FREESTEIN_ERROR(NonConvexPotential)
// momentmap
FREESTEIN_ERROR(NotCentered)
FREESTEIN_ERROR(DegenerateTarget)
FREESTEIN_ERROR(NoConvergence)
FREESTEIN_ERROR(OutOfRange)
FREESTEIN_ERROR(LogOfNonpositive)
// stein
FREESTEIN_ERROR(BarycenterNotZero)
FREESTEIN_ERROR(NonConvexV)
FREESTEIN_ERROR(HypothesisNotMet)
// ncfree
FREESTEIN_ERROR(IndexOutOfArity)
FREESTEIN_ERROR(ArityMismatch)
FREESTEIN_ERROR(ConstantTermInSymmetrize)
FREESTEIN_ERROR(NotPositiveDefinite)
// interface
FREESTEIN_ERROR(SyntaxError)
FREESTEIN_ERROR(DegreeTooLarge)
FREESTEIN_ERROR(ConfigError)

#undef FREESTEIN_ERROR

}  // namespace freestein
