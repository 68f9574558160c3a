#pragma once

#include <stdexcept>
#include <string>

namespace impart {

// Thrown when an input exceeds a documented engineering ceiling
// (subset DPs, width DPs, edge-coloring search). CLI maps this to exit 4.
struct CeilingError : std::runtime_error {
    explicit CeilingError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the text parsers (edge list, graph6). CLI maps this to exit 3.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace impart
