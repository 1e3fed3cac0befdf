#pragma once

#include <stdexcept>
#include <string>

namespace hdg {

/// Raised for malformed or inconsistent user input (CLI exit code 2).
class InputError : public std::runtime_error {
public:
    enum class Code {
        malformed_json,
        duplicate_label,
        unknown_label,
        repeated_vertex,
        bad_vertex_id,
        bad_dimension,
        missing_coords,
        bad_argument,
        pdb_line_too_short,
        unknown_element,
        empty_ligand,
        empty_grade,
        io_failure,
    };

    InputError(Code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

/// Raised when an internal cross-check fails, e.g. the numeric
/// zero-eigenvalue count disagrees with the exact Betti number
/// (CLI exit code 3).  A ConsistencyError always indicates a bug
/// or a user-forced broken tolerance, never a recoverable state.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace hdg
