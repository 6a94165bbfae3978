#pragma once

#include <stdexcept>
#include <string>

namespace qgraph {

// Malformed external input (graph6, JSON, Pauli strings, CLI arguments).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A code or stabilizer failed a correctness check it was claimed to satisfy.
struct verify_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qgraph
