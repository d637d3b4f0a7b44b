#pragma once

#include <stdexcept>
#include <string>

namespace lorenz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: empty words, garbage letters, malformed template strings.
struct InvalidInput : Error {
    using Error::Error;
};

struct EmptyWord : InvalidInput {
    EmptyWord() : InvalidInput("orbit word must be nonempty") {}
};

struct NonPrimitive : InvalidInput {
    explicit NonPrimitive(const std::string& w)
        : InvalidInput("word '" + w + "' is a proper power, not a primitive orbit") {}
};

// Closure of the braid has more than one component.
struct NotAKnot : Error {
    explicit NotAKnot(int components)
        : Error("closure has " + std::to_string(components) + " components, expected 1") {}
};

struct StrandBudgetExceeded : Error {
    StrandBudgetExceeded(int strands, int budget)
        : Error("braid has " + std::to_string(strands) + " strands, budget is " +
                std::to_string(budget)) {}
};

struct CrossingBudgetExceeded : Error {
    CrossingBudgetExceeded(int crossings, int budget)
        : Error("braid has " + std::to_string(crossings) + " crossings, budget is " +
                std::to_string(budget)) {}
};

// Bennequin genus formula asked for on a braid with both crossing signs.
struct MixedSigns : Error {
    MixedSigns() : Error("braid word mixes positive and negative crossings") {}
};

// A postcondition the mathematics guarantees failed; indicates a bug, not bad input.
struct InternalInvariantViolation : Error {
    explicit InternalInvariantViolation(const std::string& what)
        : Error("internal invariant violated: " + what) {}
};

}  // namespace lorenz
