#pragma once

#include <cstddef>
#include <string>

#include "monoglue/errors.hpp"
#include "monoglue/glue.hpp"
#include "monoglue/linalg.hpp"
#include "monoglue/matrix.hpp"

namespace monoglue {

/// Local system on the punctured line, presented by its monodromy matrix.
struct LocalSystem {
    std::size_t rank = 0;
    Matrix t;
};

inline LocalSystem validate_local_system(std::size_t rank, Matrix t) {
    if (rank < 1) throw error(errc::malformed, "local system rank must be positive");
    if (t.rows() != rank || t.cols() != rank)
        throw error(errc::shape_mismatch, "monodromy must be " + std::to_string(rank) + "x" +
                                              std::to_string(rank) + ", got " + t.shape_str());
    if (!is_invertible(t)) throw error(errc::not_monodromic, "monodromy matrix is singular");
    return LocalSystem{rank, std::move(t)};
}

/// Dimensions of the two possibly-nonzero cohomologies of a two-term
/// complex, in degrees -1 and 0.
struct GradedPair {
    std::size_t h_minus1 = 0;
    std::size_t h_0 = 0;

    friend bool operator==(const GradedPair&, const GradedPair&) = default;
};

inline GlueObject skyscraper(std::size_t d) {
    return validate_object(0, d, Matrix(d, 0), Matrix(0, d));
}

inline GlueObject constant(std::size_t d) {
    return validate_object(d, 0, Matrix(0, d), Matrix(d, 0));
}

enum class ExtendKind { shriek, star, intermediate };

inline ExtendKind extend_kind_from_name(const std::string& name) {
    if (name == "shriek") return ExtendKind::shriek;
    if (name == "star") return ExtendKind::star;
    if (name == "intermediate") return ExtendKind::intermediate;
    throw error(errc::malformed, "unknown extension kind '" + name + "'");
}

inline GlueObject extend(const LocalSystem& l, ExtendKind kind);

/// The map j_! -> j_*: identity on Psi, id - T on Phi.
inline GlueMorphism forget_supports(const LocalSystem& l) {
    Matrix id = Matrix::identity(l.rank);
    return validate_morphism(id, id - l.t, extend(l, ExtendKind::shriek),
                             extend(l, ExtendKind::star));
}

inline GlueObject extend(const LocalSystem& l, ExtendKind kind) {
    Matrix id = Matrix::identity(l.rank);
    switch (kind) {
    case ExtendKind::shriek:
        return validate_object(l.rank, l.rank, id, id - l.t);
    case ExtendKind::star:
        return validate_object(l.rank, l.rank, id - l.t, id);
    case ExtendKind::intermediate:
        return exact_decompose(forget_supports(l)).image;
    }
    throw error(errc::malformed, "unknown extension kind");
}

/// Two-term complex Psi -can-> Phi: (dim ker can, dim coker can).
inline GradedPair stalk_at_zero(const GlueObject& x) {
    std::size_t r = rank(x.can);
    return GradedPair{x.psi_dim - r, x.phi_dim - r};
}

/// Two-term complex Phi -var-> Psi: (dim ker var, dim coker var).
inline GradedPair costalk_at_zero(const GlueObject& x) {
    std::size_t r = rank(x.var);
    return GradedPair{x.phi_dim - r, x.psi_dim - r};
}

/// Global sections agree with the stalk at the origin for monodromic
/// objects (contracting homotopy along the dilation flow).
inline GradedPair global_cohomology(const GlueObject& x) { return stalk_at_zero(x); }

} // namespace monoglue
