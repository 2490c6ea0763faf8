#ifndef SPECMAP_ERRORS_HPP
#define SPECMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specmap {

/// Input fails an exact structural check (associativity, unit law, ideal
/// closure, relation axioms, ...). Carries a human-readable witness.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A floating-point kernel failed or a genericity retry budget was exhausted.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file / JSON schema violation.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace specmap

#endif
