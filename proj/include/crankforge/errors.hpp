#pragma once

#include <stdexcept>
#include <string>

namespace crankforge {

/// Series inversion requires a nonzero constant term.
struct ZeroConstantTerm : std::domain_error {
    ZeroConstantTerm() : std::domain_error("series has zero constant term and is not invertible") {}
};

/// A Pochhammer factor whose constant term vanishes would make the product a non-unit.
struct NonUnitProduct : std::domain_error {
    explicit NonUnitProduct(const std::string& what) : std::domain_error(what) {}
};

/// Brute-force enumeration refused: requested weight exceeds the configured cap.
struct EnumerationBudgetExceeded : std::runtime_error {
    long requested;
    long cap;
    EnumerationBudgetExceeded(long requested_, long cap_)
        : std::runtime_error("enumeration budget exceeded: n = " + std::to_string(requested_) +
                             " > cap = " + std::to_string(cap_)),
          requested(requested_), cap(cap_) {}
};

/// A bijection precondition failed; carries the offending part.
struct PreconditionViolated : std::invalid_argument {
    long failing_part;
    PreconditionViolated(const std::string& what, long part)
        : std::invalid_argument(what + " (part " + std::to_string(part) + ")"), failing_part(part) {}
};

/// Linear solve needs more coefficients than the truncation provides.
struct InsufficientTruncation : std::runtime_error {
    InsufficientTruncation(long trunc, long needed)
        : std::runtime_error("truncation order " + std::to_string(trunc) +
                             " is below the required " + std::to_string(needed)) {}
};

/// No exact solution matches the target through the requested order.
struct NoSolutionWithinTruncation : std::runtime_error {
    long first_failing_order;
    explicit NoSolutionWithinTruncation(long order)
        : std::runtime_error("no solution matches the target from order " + std::to_string(order)),
          first_failing_order(order) {}
};

/// A representation solve produced a non-integer coefficient.
struct NonIntegerCoefficients : std::runtime_error {
    explicit NonIntegerCoefficients(const std::string& what) : std::runtime_error(what) {}
};

/// Truncation tail of a numeric evaluation exceeds the accuracy budget.
struct TailBoundExceeded : std::runtime_error {
    double tail_bound;
    explicit TailBoundExceeded(double bound)
        : std::runtime_error("series tail bound " + std::to_string(bound) +
                             " exceeds the evaluation tolerance"),
          tail_bound(bound) {}
};

/// Matrix is not in Gamma_0(N) for the declared level.
struct LevelViolation : std::invalid_argument {
    explicit LevelViolation(long c, long level)
        : std::invalid_argument("lower-left entry " + std::to_string(c) +
                                " is not divisible by the level " + std::to_string(level)) {}
};

}  // namespace crankforge
