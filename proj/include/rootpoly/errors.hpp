#pragma once

#include <stdexcept>
#include <string>

namespace rootpoly {

/// Malformed input text (graph/point/hypertree files, CLI arguments).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Violated operation precondition (wrong graph class, bad pivot, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rootpoly
