// Error hierarchy shared by the whole library.  The CLI maps these to
// process exit codes: bad_input -> 1, budget exhaustion -> 2, internal
// consistency failures -> 3.
#pragma once

#include <stdexcept>
#include <string>

namespace ndg {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed instance files, unparsable rationals, bad CLI parameters.
struct bad_input : error {
    using error::error;
};

// A generator or transform was called with arguments outside its domain.
struct bad_parameter : bad_input {
    using bad_input::bad_input;
};

// Path enumeration exceeded the configured cap.  Never silently truncate.
struct path_explosion : error {
    long long cap;
    explicit path_explosion(long long cap_)
        : error("simple path enumeration exceeded cap " + std::to_string(cap_)),
          cap(cap_) {}
};

// Embedding search exceeded the node-expansion budget.
struct search_budget_exceeded : error {
    long long cap;
    explicit search_budget_exceeded(long long cap_)
        : error("embedding search exceeded node-expansion budget " + std::to_string(cap_)),
          cap(cap_) {}
};

// Something that theory says cannot happen, happened.  Always a bug
// (or a witness that an invariant of the implementation is broken).
struct internal_consistency_error : error {
    using error::error;
};

// No forest of the instance admits enforcing shares; impossible when any
// forest exists, hence an internal consistency failure when raised.
struct no_enforceable_forest : internal_consistency_error {
    using internal_consistency_error::internal_consistency_error;
};

// emit_protocol called with shares that are not budget-balanced on the forest.
struct not_budget_balanced : error {
    using error::error;
};

// A share vector handed to a transform violates its linear program.
struct infeasible_shares : error {
    using error::error;
};

// change_feasible called with order indices outside the middle segment.
struct index_out_of_segment : error {
    using error::error;
};

} // namespace ndg
