#pragma once

#include <stdexcept>
#include <string>

namespace maslov {

/// Input fails a structural precondition (dimension mismatch, broken
/// invariant, degenerate form where a nondegenerate one is required).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical procedure could not reach its target accuracy
/// (ill-conditioned normalization, inconsistent eigenvalue clustering,
/// chart search exhausted).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// A problem file does not match the input schema.
class schema_error : public std::runtime_error {
public:
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace maslov
