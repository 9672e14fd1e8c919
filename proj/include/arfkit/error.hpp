#pragma once

#include <stdexcept>
#include <string>

namespace arfkit {

enum class errc {
    empty_generators,
    invalid_argument,
    non_coprime,
    not_a_semigroup,
    not_in_semigroup,
    not_an_ideal,
    ambient_mismatch,
    fractional_input,
    unit_ideal,
    not_arf,
    invalid_sequence,
    bound_mismatch,
    bound_exceeded,
    internal,
};

inline const char* to_string(errc code) noexcept {
    switch (code) {
    case errc::empty_generators: return "EmptyGenerators";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::non_coprime: return "NonCoprime";
    case errc::not_a_semigroup: return "NotASemigroup";
    case errc::not_in_semigroup: return "NotInSemigroup";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::ambient_mismatch: return "AmbientMismatch";
    case errc::fractional_input: return "FractionalInput";
    case errc::unit_ideal: return "UnitIdeal";
    case errc::not_arf: return "NotArf";
    case errc::invalid_sequence: return "InvalidSequence";
    case errc::bound_mismatch: return "BoundMismatch";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::internal: return "InternalError";
    }
    return "Unknown";
}

/// Every failure raised by arfkit carries one of the codes above.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

    /// Input/precondition problems, as opposed to broken invariants.
    bool is_usage_error() const noexcept {
        return code_ != errc::internal && code_ != errc::not_arf;
    }

private:
    errc code_;
};

// Invariant violations are bugs, never user errors.
[[noreturn]] inline void internal_failure(const std::string& what) {
    throw error(errc::internal, what);
}

#define ARFKIT_ENSURE(cond, msg)                                                   \
    do {                                                                           \
        if (!(cond)) ::arfkit::internal_failure(std::string("invariant: ") + (msg)); \
    } while (0)

} // namespace arfkit
