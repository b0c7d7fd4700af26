#pragma once

#include <stdexcept>
#include <string>

namespace monoglue {

enum class errc {
    malformed,
    shape_mismatch,
    not_monodromic,
    not_commuting,
    singular,
    not_square,
    zero_polynomial,
    unsupported_degree,
    dimension_too_large,
    not_filtration,
    not_pure,
    not_hodge_morphism,
    validation_failed,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::malformed: return "Malformed";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::not_monodromic: return "NotMonodromic";
        case errc::not_commuting: return "NotCommuting";
        case errc::singular: return "Singular";
        case errc::not_square: return "NotSquare";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::unsupported_degree: return "UnsupportedDegree";
        case errc::dimension_too_large: return "DimensionTooLarge";
        case errc::not_filtration: return "NotFiltration";
        case errc::not_pure: return "NotPure";
        case errc::not_hodge_morphism: return "NotHodgeMorphism";
        case errc::validation_failed: return "ValidationFailed";
    }
    return "Unknown";
}

/// Single exception type for the whole library; `code()` identifies the failure class.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const noexcept { return code_; }

    /// Exit code convention: 2 for "computation unsupported at this size", 1 otherwise.
    int exit_code() const noexcept {
        return (code_ == errc::unsupported_degree || code_ == errc::dimension_too_large) ? 2 : 1;
    }

private:
    errc code_;
};

} // namespace monoglue
