#pragma once

#include "monoglue/glue.hpp"
#include "monoglue/linalg.hpp"
#include "monoglue/matrix.hpp"

namespace monoglue {

/// Shifted Fourier transform: swap the two spaces and the two arrows.
/// An involution on objects.
inline GlueObject fourier(const GlueObject& x) {
    return validate_object(x.phi_dim, x.psi_dim, x.var, x.can);
}

/// (g, f) is a morphism fourier(X) -> fourier(Y) whenever (f, g) is one
/// X -> Y.
inline GlueMorphism fourier(const GlueMorphism& m) {
    return validate_morphism(m.g, m.f, fourier(m.source), fourier(m.target));
}

/// Verdier duality on quiver data: transpose both arrows, with a monodromy
/// twist on the can side making duality exchange the two extensions and
/// invert monodromy. The dual's T_psi is the inverse transpose of the
/// original's.
inline GlueObject verdier_dual(const GlueObject& x) {
    Matrix t_inv_tr = invert(monodromy(x).t_psi).transpose();
    return validate_object(x.psi_dim, x.phi_dim, -(x.var.transpose() * t_inv_tr),
                           x.can.transpose());
}

} // namespace monoglue
