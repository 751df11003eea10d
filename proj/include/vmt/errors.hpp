#pragma once

#include <stdexcept>
#include <string>

namespace vmt {

// Error taxonomy: every failure mode maps onto one of these.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape/extent mismatches.
struct dim_error : error {
    using error::error;
};

// Invalid static configuration (ranks, channel splits, stage options).
struct config_error : error {
    using error::error;
};

// NaN/Inf or other numeric breakdown. Never silently propagated.
struct numeric_error : error {
    using error::error;
};

// Operation requested in a state that does not support it.
struct state_error : error {
    using error::error;
};

// Malformed files (archives, manifests, configs).
struct format_error : error {
    using error::error;
};

// Semantically invalid input values (e.g. non-stochastic attention rows).
struct value_error : error {
    using error::error;
};

}  // namespace vmt
