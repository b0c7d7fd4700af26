#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoglue/errors.hpp"
#include "monoglue/linalg.hpp"
#include "monoglue/matrix.hpp"
#include "monoglue/polynomial.hpp"
#include "monoglue/rational.hpp"

namespace monoglue {

/// Object of the gluing category: Psi -can-> Phi -var-> Psi with
/// id - var*can invertible. can is phi_dim x psi_dim, var is psi_dim x
/// phi_dim.
struct GlueObject {
    std::size_t psi_dim = 0;
    std::size_t phi_dim = 0;
    Matrix can;
    Matrix var;

    friend bool operator==(const GlueObject& a, const GlueObject& b) {
        return a.psi_dim == b.psi_dim && a.phi_dim == b.phi_dim && a.can == b.can &&
               a.var == b.var;
    }
};

inline GlueObject validate_object(std::size_t psi_dim, std::size_t phi_dim, Matrix can,
                                  Matrix var) {
    if (can.rows() != phi_dim || can.cols() != psi_dim)
        throw error(errc::shape_mismatch, "can must be " + std::to_string(phi_dim) + "x" +
                                              std::to_string(psi_dim) + ", got " +
                                              can.shape_str());
    if (var.rows() != psi_dim || var.cols() != phi_dim)
        throw error(errc::shape_mismatch, "var must be " + std::to_string(psi_dim) + "x" +
                                              std::to_string(phi_dim) + ", got " +
                                              var.shape_str());
    Matrix t = Matrix::identity(psi_dim) - var * can;
    if (!is_invertible(t))
        throw error(errc::not_monodromic, "id - var*can is singular");
    return GlueObject{psi_dim, phi_dim, std::move(can), std::move(var)};
}

struct Monodromy {
    Matrix t_psi;
    Matrix t_phi;
};

inline Monodromy monodromy(const GlueObject& x) {
    return {Matrix::identity(x.psi_dim) - x.var * x.can,
            Matrix::identity(x.phi_dim) - x.can * x.var};
}

/// Morphism (f, g): X -> Y with can_Y*f = g*can_X and var_Y*g = f*var_X.
/// f is psi_Y x psi_X, g is phi_Y x phi_X.
struct GlueMorphism {
    GlueObject source;
    GlueObject target;
    Matrix f;
    Matrix g;
};

inline GlueMorphism validate_morphism(Matrix f, Matrix g, const GlueObject& x,
                                      const GlueObject& y) {
    if (f.rows() != y.psi_dim || f.cols() != x.psi_dim)
        throw error(errc::shape_mismatch, "f must be " + std::to_string(y.psi_dim) + "x" +
                                              std::to_string(x.psi_dim) + ", got " +
                                              f.shape_str());
    if (g.rows() != y.phi_dim || g.cols() != x.phi_dim)
        throw error(errc::shape_mismatch, "g must be " + std::to_string(y.phi_dim) + "x" +
                                              std::to_string(x.phi_dim) + ", got " +
                                              g.shape_str());
    if (!(y.can * f == g * x.can))
        throw error(errc::not_commuting, "can square fails: can_Y*f != g*can_X");
    if (!(y.var * g == f * x.var))
        throw error(errc::not_commuting, "var square fails: var_Y*g != f*var_X");
    return GlueMorphism{x, y, std::move(f), std::move(g)};
}

inline GlueMorphism identity_morphism(const GlueObject& x) {
    return GlueMorphism{x, x, Matrix::identity(x.psi_dim), Matrix::identity(x.phi_dim)};
}

inline GlueObject direct_sum(const GlueObject& x, const GlueObject& y) {
    return validate_object(x.psi_dim + y.psi_dim, x.phi_dim + y.phi_dim,
                           Matrix::block_diag(x.can, y.can), Matrix::block_diag(x.var, y.var));
}

namespace detail {

inline Matrix solve_factor(const Matrix& basis, const Matrix& target, const char* what) {
    auto x = solve(basis, target);
    if (!x) throw error(errc::not_commuting, std::string(what) + " does not factor");
    return std::move(*x);
}

} // namespace detail

struct ExactDecomposition {
    GlueObject kernel;
    GlueMorphism kernel_embedding; // kernel -> source
    GlueObject image;
    GlueMorphism image_embedding;  // image -> target
    GlueMorphism image_projection; // source -> image
    GlueObject cokernel;
    GlueMorphism cokernel_projection; // target -> cokernel
};

/// Kernel, image, and cokernel of a morphism, taken componentwise on Psi and
/// Phi with the induced can/var. Bases are the deterministic ones produced by
/// kernel_basis, image_basis, and annihilator.
inline ExactDecomposition exact_decompose(const GlueMorphism& m) {
    const GlueObject& x = m.source;
    const GlueObject& y = m.target;

    Matrix k_psi = kernel_basis(m.f);
    Matrix k_phi = kernel_basis(m.g);
    GlueObject ker = validate_object(
        k_psi.cols(), k_phi.cols(),
        detail::solve_factor(k_phi, x.can * k_psi, "restricted can"),
        detail::solve_factor(k_psi, x.var * k_phi, "restricted var"));
    GlueMorphism ker_emb = validate_morphism(k_psi, k_phi, ker, x);

    Matrix i_psi = image_basis(m.f);
    Matrix i_phi = image_basis(m.g);
    GlueObject img = validate_object(
        i_psi.cols(), i_phi.cols(),
        detail::solve_factor(i_phi, y.can * i_psi, "induced can on image"),
        detail::solve_factor(i_psi, y.var * i_phi, "induced var on image"));
    GlueMorphism img_emb = validate_morphism(i_psi, i_phi, img, y);
    GlueMorphism img_proj = validate_morphism(detail::solve_factor(i_psi, m.f, "f coordinates"),
                                              detail::solve_factor(i_phi, m.g, "g coordinates"),
                                              x, img);

    Matrix p_psi = annihilator(m.f).transpose();
    Matrix p_phi = annihilator(m.g).transpose();
    Matrix coker_can = detail::solve_factor(p_psi.transpose(), (p_phi * y.can).transpose(),
                                            "induced can on cokernel")
                           .transpose();
    Matrix coker_var = detail::solve_factor(p_phi.transpose(), (p_psi * y.var).transpose(),
                                            "induced var on cokernel")
                           .transpose();
    GlueObject coker =
        validate_object(p_psi.rows(), p_phi.rows(), std::move(coker_can), std::move(coker_var));
    GlueMorphism coker_proj = validate_morphism(p_psi, p_phi, y, coker);

    return ExactDecomposition{std::move(ker), std::move(ker_emb), std::move(img),
                              std::move(img_emb), std::move(img_proj), std::move(coker),
                              std::move(coker_proj)};
}

/// Basis of Hom(X, Y): the solution space of the two commuting-square
/// systems, solved as one linear system in the entries of f and g.
inline std::vector<GlueMorphism> hom_space(const GlueObject& x, const GlueObject& y) {
    std::size_t nf = y.psi_dim * x.psi_dim;
    std::size_t ng = y.phi_dim * x.phi_dim;
    auto fidx = [&](std::size_t i, std::size_t j) { return i * x.psi_dim + j; };
    auto gidx = [&](std::size_t i, std::size_t j) { return nf + i * x.phi_dim + j; };

    std::size_t eq_can = y.phi_dim * x.psi_dim;
    std::size_t eq_var = y.psi_dim * x.phi_dim;
    Matrix sys(eq_can + eq_var, nf + ng);
    // can_Y*f - g*can_X = 0, one equation per (a, b).
    for (std::size_t a = 0; a < y.phi_dim; ++a)
        for (std::size_t b = 0; b < x.psi_dim; ++b) {
            std::size_t row = a * x.psi_dim + b;
            for (std::size_t k = 0; k < y.psi_dim; ++k) sys(row, fidx(k, b)) += y.can(a, k);
            for (std::size_t c = 0; c < x.phi_dim; ++c) sys(row, gidx(a, c)) -= x.can(c, b);
        }
    // var_Y*g - f*var_X = 0, one equation per (p, q).
    for (std::size_t p = 0; p < y.psi_dim; ++p)
        for (std::size_t q = 0; q < x.phi_dim; ++q) {
            std::size_t row = eq_can + p * x.phi_dim + q;
            for (std::size_t c = 0; c < y.phi_dim; ++c) sys(row, gidx(c, q)) += y.var(p, c);
            for (std::size_t k = 0; k < x.psi_dim; ++k) sys(row, fidx(p, k)) -= x.var(k, q);
        }

    Matrix basis = kernel_basis(sys);
    std::vector<GlueMorphism> out;
    out.reserve(basis.cols());
    for (std::size_t col = 0; col < basis.cols(); ++col) {
        Matrix f(y.psi_dim, x.psi_dim), g(y.phi_dim, x.phi_dim);
        for (std::size_t i = 0; i < y.psi_dim; ++i)
            for (std::size_t j = 0; j < x.psi_dim; ++j) f(i, j) = basis(fidx(i, j), col);
        for (std::size_t i = 0; i < y.phi_dim; ++i)
            for (std::size_t j = 0; j < x.phi_dim; ++j) g(i, j) = basis(gidx(i, j), col);
        out.push_back(GlueMorphism{x, y, std::move(f), std::move(g)});
    }
    return out;
}

struct IsoConfig {
    std::size_t hom_dim_bound = 6;
};

struct IsoResult {
    bool isomorphic = false;
    std::optional<GlueMorphism> witness;
};

namespace detail {

inline bool morphism_invertible(const GlueMorphism& m) {
    return is_invertible(m.f) && is_invertible(m.g);
}

/// Evaluation points 1, -1, 2, -2, ... with 0 last; count points in total.
/// Nonzero points come first so sparse (likely singular) combinations are
/// visited late.
inline std::vector<Rational> grid_points(std::size_t count) {
    std::vector<Rational> pts;
    for (long k = 1; pts.size() + 1 < count; ++k) {
        pts.emplace_back(k);
        if (pts.size() + 1 < count) pts.emplace_back(-k);
    }
    pts.emplace_back(0);
    return pts;
}

} // namespace detail

/// Decides whether an invertible morphism X -> Y exists. The hom space is a
/// finite-dimensional vector space and det(f)*det(g) of a generic combination
/// is a polynomial of degree at most psi_dim + phi_dim in each coordinate, so
/// scanning a grid with psi_dim + phi_dim + 1 points per coordinate either
/// finds an invertible combination or proves the determinant vanishes
/// identically.
inline IsoResult is_isomorphic(const GlueObject& x, const GlueObject& y,
                               const IsoConfig& config = {}) {
    if (x.psi_dim != y.psi_dim || x.phi_dim != y.phi_dim) return {false, std::nullopt};
    if (x == y) return {true, identity_morphism(x)};

    std::vector<GlueMorphism> fwd = hom_space(x, y);
    std::vector<GlueMorphism> bwd = hom_space(y, x);
    if (fwd.size() != bwd.size()) return {false, std::nullopt};
    if (fwd.empty()) return {false, std::nullopt};
    if (fwd.size() > config.hom_dim_bound)
        throw error(errc::dimension_too_large,
                    "hom dimension " + std::to_string(fwd.size()) + " exceeds bound " +
                        std::to_string(config.hom_dim_bound));

    for (const auto& m : fwd)
        if (detail::morphism_invertible(m)) return {true, m};

    std::size_t d = fwd.size();
    std::vector<Rational> pts = detail::grid_points(x.psi_dim + x.phi_dim + 1);
    std::vector<std::size_t> idx(d, 0);
    while (true) {
        Matrix f(y.psi_dim, x.psi_dim), g(y.phi_dim, x.phi_dim);
        for (std::size_t i = 0; i < d; ++i) {
            const Rational& c = pts[idx[i]];
            if (c.is_zero()) continue;
            f = f + c * fwd[i].f;
            g = g + c * fwd[i].g;
        }
        if (is_invertible(f) && is_invertible(g))
            return {true, GlueMorphism{x, y, std::move(f), std::move(g)}};
        std::size_t pos = 0;
        while (pos < d && ++idx[pos] == pts.size()) idx[pos++] = 0;
        if (pos == d) break;
    }
    return {false, std::nullopt};
}

/// Grothendieck-group class: multiplicity of the skyscraper simple plus the
/// multiset of irreducible monodromy factors.
struct KClass {
    long delta_mult = 0;
    std::vector<std::pair<Polynomial, int>> local_factors;

    friend bool operator==(const KClass& a, const KClass& b) {
        return a.delta_mult == b.delta_mult && a.local_factors == b.local_factors;
    }
};

inline KClass jordan_holder_class(const GlueObject& x) {
    Polynomial cp = charpoly(monodromy(x).t_psi);
    long delta = long(x.phi_dim) - long(x.psi_dim) + root_multiplicity(cp, Rational(1));
    return KClass{delta, factor_rational_poly(cp)};
}

inline KClass kclass_union(const KClass& a, const KClass& b) {
    std::vector<std::pair<Polynomial, int>> merged = a.local_factors;
    merged.insert(merged.end(), b.local_factors.begin(), b.local_factors.end());
    std::sort(merged.begin(), merged.end(),
              [](const auto& p, const auto& q) { return poly_less(p.first, q.first); });
    std::vector<std::pair<Polynomial, int>> out;
    for (auto& [f, m] : merged) {
        if (!out.empty() && out.back().first == f)
            out.back().second += m;
        else
            out.emplace_back(std::move(f), m);
    }
    return KClass{a.delta_mult + b.delta_mult, std::move(out)};
}

inline bool is_simple(const GlueObject& x) {
    if (x.psi_dim == 0 && x.phi_dim == 1) return true;
    if (x.psi_dim == 0) return false;
    Polynomial cp = charpoly(monodromy(x).t_psi);
    auto factors = factor_rational_poly(cp);
    bool irreducible = factors.size() == 1 && factors[0].second == 1 && factors[0].first == cp;
    if (!irreducible) return false;
    long delta = long(x.phi_dim) - long(x.psi_dim) + root_multiplicity(cp, Rational(1));
    if (delta != 0) return false;
    bool can_surjective = rank(x.can) == x.phi_dim;
    bool var_injective = rank(x.var) == x.phi_dim;
    return can_surjective && var_injective;
}

} // namespace monoglue
