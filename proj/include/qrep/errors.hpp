#pragma once

#include <stdexcept>
#include <string>

namespace qrep {

// Bad caller input: invalid vertex, wrong dimension, unknown preset...
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed quiver text or a quiver violating the model's hypotheses.
class QuiverError : public InputError {
public:
    enum class Kind { Syntax, BadVertex, Loop, MultipleArrow, DirectedCycle };

    QuiverError(Kind kind, const std::string& what) : InputError(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// An exhaustive search would exceed its configured budget; reduce the input.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qrep
