#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoglue/errors.hpp"
#include "monoglue/fourier.hpp"
#include "monoglue/glue.hpp"
#include "monoglue/linalg.hpp"
#include "monoglue/matrix.hpp"

namespace monoglue {

/// Increasing exhaustive filtration of a fixed rational space: zero far
/// below, the full space far above. Stored as its jump set, each jump
/// carrying the canonical echelon basis of the value there, so equal
/// filtrations are entry-identical.
class Filtration {
public:
    Filtration() = default;

    static Filtration from_steps(std::size_t dim, std::vector<std::pair<long, Matrix>> listed) {
        for (auto& [k, basis] : listed) {
            if (basis.rows() != dim)
                throw error(errc::shape_mismatch, "filtration basis at index " +
                                                      std::to_string(k) + " has " +
                                                      std::to_string(basis.rows()) +
                                                      " rows, space has dimension " +
                                                      std::to_string(dim));
            basis = canonical_subspace(basis);
        }
        std::sort(listed.begin(), listed.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i + 1 < listed.size(); ++i)
            if (listed[i].first == listed[i + 1].first && !(listed[i].second == listed[i + 1].second))
                throw error(errc::not_filtration, "conflicting values at index " +
                                                      std::to_string(listed[i].first));
        Filtration out;
        out.dim_ = dim;
        Matrix prev(dim, 0);
        for (auto& [k, basis] : listed) {
            if (basis == prev) continue;
            if (!subspace_leq(prev, basis))
                throw error(errc::not_filtration,
                            "value at index " + std::to_string(k) + " does not contain its predecessor");
            out.jumps_.emplace_back(k, basis);
            prev = std::move(basis);
        }
        if (dim > 0 && (out.jumps_.empty() || out.jumps_.back().second.cols() != dim))
            throw error(errc::not_filtration, "filtration never reaches the full space");
        return out;
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::pair<long, Matrix>>& jumps() const { return jumps_; }

    /// Value at index k: the canonical basis of the largest listed step with
    /// index at most k, the zero subspace below all steps.
    Matrix value_at(long k) const {
        Matrix v(dim_, 0);
        for (const auto& [j, basis] : jumps_) {
            if (j > k) break;
            v = basis;
        }
        return v;
    }

    Filtration shifted(long delta) const {
        std::vector<std::pair<long, Matrix>> listed = jumps_;
        for (auto& [k, basis] : listed) k += delta;
        return from_steps(dim_, std::move(listed));
    }

    /// Dual filtration on the dual space under the standard pairing:
    /// value_at(k) of the dual is the annihilator of value_at(-k-1).
    Filtration dual() const {
        std::vector<std::pair<long, Matrix>> listed;
        for (std::size_t i = 0; i < jumps_.size(); ++i) {
            Matrix below = i == 0 ? Matrix(dim_, 0) : jumps_[i - 1].second;
            listed.emplace_back(-jumps_[i].first, annihilator(below));
        }
        return from_steps(dim_, std::move(listed));
    }

    static Filtration direct_sum(const Filtration& a, const Filtration& b) {
        std::vector<long> indices;
        for (const auto& [k, basis] : a.jumps_) indices.push_back(k);
        for (const auto& [k, basis] : b.jumps_) indices.push_back(k);
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
        std::vector<std::pair<long, Matrix>> listed;
        for (long k : indices)
            listed.emplace_back(k, Matrix::block_diag(a.value_at(k), b.value_at(k)));
        return from_steps(a.dim_ + b.dim_, std::move(listed));
    }

    friend bool operator==(const Filtration& a, const Filtration& b) {
        return a.dim_ == b.dim_ && a.jumps_ == b.jumps_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<std::pair<long, Matrix>> jumps_;
};

/// Rational mixed Hodge structure of Hodge-Tate type. The Hodge filtration
/// is decreasing in p; it is stored as the increasing filtration whose value
/// at j is F^{-j}.
struct MixedHodgeStructure {
    std::size_t dim = 0;
    Filtration weight;
    Filtration hodge;

    Matrix weight_piece(long k) const { return weight.value_at(k); }
    Matrix hodge_piece(long p) const { return hodge.value_at(-p); }

    friend bool operator==(const MixedHodgeStructure&, const MixedHodgeStructure&) = default;
};

/// Converts a decreasing list (p, F^p) into the internal increasing form.
inline Filtration hodge_filtration_from_decreasing(std::size_t dim,
                                                   std::vector<std::pair<long, Matrix>> listed) {
    for (auto& [p, basis] : listed) p = -p;
    return Filtration::from_steps(dim, std::move(listed));
}

namespace detail {

/// Purity of Hodge-Tate type: odd weight pieces vanish and on each nonzero
/// even graded piece gr^W_n the induced Hodge filtration falls from full to
/// zero between p = n/2 and p = n/2 + 1.
inline void check_purity(const Filtration& weight, const Filtration& hodge) {
    for (const auto& [n, v] : weight.jumps()) {
        if (n % 2 != 0)
            throw error(errc::not_pure, "nonzero graded piece in odd weight " + std::to_string(n));
        Matrix prev = weight.value_at(n - 1);
        Matrix f_lo = hodge.value_at(-(n / 2));
        if (!subspace_leq(v, subspace_sum(subspace_intersection(f_lo, v), prev)))
            throw error(errc::not_pure, "Hodge filtration not full at p = " +
                                            std::to_string(n / 2) + " on weight " +
                                            std::to_string(n));
        Matrix f_hi = hodge.value_at(-(n / 2 + 1));
        if (!subspace_leq(subspace_intersection(f_hi, v), prev))
            throw error(errc::not_pure, "Hodge filtration not zero at p = " +
                                            std::to_string(n / 2 + 1) + " on weight " +
                                            std::to_string(n));
    }
}

} // namespace detail

inline MixedHodgeStructure mhs_validate(std::size_t dim, Filtration weight, Filtration hodge) {
    if (weight.dim() != dim || hodge.dim() != dim)
        throw error(errc::shape_mismatch, "filtrations must live on a space of dimension " +
                                              std::to_string(dim));
    detail::check_purity(weight, hodge);
    return MixedHodgeStructure{dim, std::move(weight), std::move(hodge)};
}

/// The one-dimensional pure structure Q(n): weight -2n, single Hodge jump
/// after p = -n.
inline MixedHodgeStructure mhs_tate(long n) {
    Matrix full = Matrix::identity(1);
    return mhs_validate(1, Filtration::from_steps(1, {{-2 * n, full}}),
                        Filtration::from_steps(1, {{n, full}}));
}

inline MixedHodgeStructure mhs_zero() {
    return mhs_validate(0, Filtration::from_steps(0, {}), Filtration::from_steps(0, {}));
}

/// Same underlying space; weights shift by -2n, Hodge indices by -n.
inline MixedHodgeStructure tate_twist(const MixedHodgeStructure& m, long n) {
    return mhs_validate(m.dim, m.weight.shifted(-2 * n), m.hodge.shifted(n));
}

/// W_k of the dual is the annihilator of W_{-k-1}; F^p of the dual is the
/// annihilator of F^{1-p}. Both rules are the same index-reflection on the
/// internal increasing filtrations.
inline MixedHodgeStructure mhs_dual(const MixedHodgeStructure& m) {
    return mhs_validate(m.dim, m.weight.dual(), m.hodge.dual());
}

inline MixedHodgeStructure mhs_direct_sum(const MixedHodgeStructure& a,
                                          const MixedHodgeStructure& b) {
    return mhs_validate(a.dim + b.dim, Filtration::direct_sum(a.weight, b.weight),
                        Filtration::direct_sum(a.hodge, b.hodge));
}

namespace detail {

inline bool maps_filtration_into(const Matrix& f, const Filtration& src, const Filtration& dst) {
    for (const auto& [k, v] : src.jumps())
        if (!subspace_leq(f * v, dst.value_at(k))) return false;
    return true;
}

/// Name of the first filtration f fails to preserve, if any.
inline std::optional<std::string> filtered_failure(const Matrix& f, const MixedHodgeStructure& m,
                                                   const MixedHodgeStructure& n) {
    if (!maps_filtration_into(f, m.weight, n.weight)) return "weight";
    if (!maps_filtration_into(f, m.hodge, n.hodge)) return "Hodge";
    return std::nullopt;
}

inline bool strict_on(const Matrix& f, const Matrix& img, const Filtration& src,
                      const Filtration& dst) {
    std::vector<long> indices;
    for (const auto& [k, v] : src.jumps()) indices.push_back(k);
    for (const auto& [k, v] : dst.jumps()) indices.push_back(k);
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (long k : indices) {
        Matrix lhs = subspace_intersection(img, dst.value_at(k));
        Matrix rhs = canonical_subspace(f * src.value_at(k));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

} // namespace detail

struct MorphismReport {
    bool filtered = false;
    bool strict = false;
};

/// filtered: f carries both filtrations of m into those of n.
/// strict: additionally f(value) = image(f) cap value at every index, for
/// both filtrations.
inline MorphismReport mhs_morphism_validate(const Matrix& f, const MixedHodgeStructure& m,
                                            const MixedHodgeStructure& n) {
    if (f.rows() != n.dim || f.cols() != m.dim)
        throw error(errc::shape_mismatch, "morphism must be " + std::to_string(n.dim) + "x" +
                                              std::to_string(m.dim) + ", got " + f.shape_str());
    if (detail::filtered_failure(f, m, n)) return {false, false};
    Matrix img = canonical_subspace(f);
    bool strict = detail::strict_on(f, img, m.weight, n.weight) &&
                  detail::strict_on(f, img, m.hodge, n.hodge);
    return {true, strict};
}

/// Glue object enriched with mixed Hodge structures: can maps psi to phi,
/// var maps phi to psi(-1), both filtration-preserving, and the underlying
/// rational object is monodromic.
struct HodgeGlueObject {
    MixedHodgeStructure psi;
    MixedHodgeStructure phi;
    Matrix can;
    Matrix var;

    friend bool operator==(const HodgeGlueObject&, const HodgeGlueObject&) = default;
};

inline GlueObject rat_forget(const HodgeGlueObject& x) {
    return validate_object(x.psi.dim, x.phi.dim, x.can, x.var);
}

inline HodgeGlueObject hodge_glue_validate(MixedHodgeStructure psi, MixedHodgeStructure phi,
                                           Matrix can, Matrix var) {
    if (can.rows() != phi.dim || can.cols() != psi.dim)
        throw error(errc::shape_mismatch, "can must be " + std::to_string(phi.dim) + "x" +
                                              std::to_string(psi.dim) + ", got " +
                                              can.shape_str());
    if (var.rows() != psi.dim || var.cols() != phi.dim)
        throw error(errc::shape_mismatch, "var must be " + std::to_string(psi.dim) + "x" +
                                              std::to_string(phi.dim) + ", got " +
                                              var.shape_str());
    if (auto which = detail::filtered_failure(can, psi, phi))
        throw error(errc::not_hodge_morphism, "can fails the " + *which + " filtration");
    if (auto which = detail::filtered_failure(var, phi, tate_twist(psi, -1)))
        throw error(errc::not_hodge_morphism, "var fails the " + *which + " filtration");
    validate_object(psi.dim, phi.dim, can, var);
    return HodgeGlueObject{std::move(psi), std::move(phi), std::move(can), std::move(var)};
}

/// Swap with a twist: (psi, phi, can, var) becomes
/// (phi, psi(-1), var, can). Applying it twice is the componentwise Tate
/// twist by -1.
inline HodgeGlueObject hodge_fourier(const HodgeGlueObject& x) {
    return hodge_glue_validate(x.phi, tate_twist(x.psi, -1), x.var, x.can);
}

inline HodgeGlueObject hodge_tate_twist(const HodgeGlueObject& x, long n) {
    return hodge_glue_validate(tate_twist(x.psi, n), tate_twist(x.phi, n), x.can, x.var);
}

inline HodgeGlueObject hodge_direct_sum(const HodgeGlueObject& x, const HodgeGlueObject& y) {
    return hodge_glue_validate(mhs_direct_sum(x.psi, y.psi), mhs_direct_sum(x.phi, y.phi),
                               Matrix::block_diag(x.can, y.can),
                               Matrix::block_diag(x.var, y.var));
}

/// Duality: underlying maps as verdier_dual; the dual of psi is twisted by
/// (1), the dual of phi is untwisted. Fails with NotHodgeMorphism on inputs
/// whose filtrations are not compatible with the dualized maps.
inline HodgeGlueObject hodge_dual(const HodgeGlueObject& x) {
    GlueObject dual = verdier_dual(rat_forget(x));
    return hodge_glue_validate(tate_twist(mhs_dual(x.psi), 1), mhs_dual(x.phi),
                               std::move(dual.can), std::move(dual.var));
}

inline HodgeGlueObject hodge_skyscraper() {
    return hodge_glue_validate(mhs_zero(), mhs_tate(0), Matrix(1, 0), Matrix(0, 1));
}

inline HodgeGlueObject hodge_constant() {
    return hodge_glue_validate(mhs_tate(0), mhs_zero(), Matrix(0, 1), Matrix(1, 0));
}

inline HodgeGlueObject hodge_extend_shriek() {
    return hodge_glue_validate(mhs_tate(0), mhs_tate(0), Matrix::identity(1), Matrix(1, 1));
}

inline HodgeGlueObject hodge_extend_star() {
    return hodge_glue_validate(mhs_tate(0), mhs_tate(-1), Matrix(1, 1), Matrix::identity(1));
}

/// Basis of the space of Hodge morphisms X -> Y: glue morphisms of the
/// underlying objects whose components preserve both filtrations. Computed
/// by cutting the glue hom space with the linear filtration conditions.
inline std::vector<GlueMorphism> hodge_hom_space(const HodgeGlueObject& x,
                                                 const HodgeGlueObject& y) {
    GlueObject rx = rat_forget(x);
    GlueObject ry = rat_forget(y);
    std::vector<GlueMorphism> glue_basis = hom_space(rx, ry);
    if (glue_basis.empty()) return {};

    // One scalar condition per (annihilator functional of the target value,
    // generator of the source value) pair, per filtration jump.
    auto conditions = [](const Matrix& f, const MixedHodgeStructure& m,
                         const MixedHodgeStructure& n, std::vector<Rational>& out) {
        for (const Filtration* pair : {&m.weight, &m.hodge}) {
            const Filtration& dst = pair == &m.weight ? n.weight : n.hodge;
            for (const auto& [k, v] : pair->jumps()) {
                Matrix ann = annihilator(dst.value_at(k));
                Matrix vals = ann.transpose() * f * v;
                for (std::size_t i = 0; i < vals.rows(); ++i)
                    for (std::size_t j = 0; j < vals.cols(); ++j) out.push_back(vals(i, j));
            }
        }
    };

    std::vector<std::vector<Rational>> columns;
    std::size_t n_rows = 0;
    for (const auto& m : glue_basis) {
        std::vector<Rational> col;
        conditions(m.f, x.psi, y.psi, col);
        conditions(m.g, x.phi, y.phi, col);
        n_rows = col.size();
        columns.push_back(std::move(col));
    }
    Matrix sys(n_rows, glue_basis.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < n_rows; ++i) sys(i, j) = columns[j][i];
    Matrix combos = kernel_basis(sys);

    std::vector<GlueMorphism> out;
    for (std::size_t c = 0; c < combos.cols(); ++c) {
        Matrix f(ry.psi_dim, rx.psi_dim), g(ry.phi_dim, rx.phi_dim);
        for (std::size_t i = 0; i < glue_basis.size(); ++i) {
            const Rational& w = combos(i, c);
            if (w.is_zero()) continue;
            f = f + w * glue_basis[i].f;
            g = g + w * glue_basis[i].g;
        }
        out.push_back(GlueMorphism{rx, ry, std::move(f), std::move(g)});
    }
    return out;
}

namespace detail {

inline bool hodge_morphism_invertible(const GlueMorphism& m, const HodgeGlueObject& x,
                                      const HodgeGlueObject& y) {
    if (!is_invertible(m.f) || !is_invertible(m.g)) return false;
    Matrix f_inv = invert(m.f);
    Matrix g_inv = invert(m.g);
    return !filtered_failure(f_inv, y.psi, x.psi) && !filtered_failure(g_inv, y.phi, x.phi);
}

} // namespace detail

/// Same grid-search strategy as is_isomorphic, restricted to the Hodge hom
/// space; a witness must be invertible with a filtration-preserving inverse.
inline IsoResult is_hodge_isomorphic(const HodgeGlueObject& x, const HodgeGlueObject& y,
                                     const IsoConfig& config = {}) {
    if (x.psi.dim != y.psi.dim || x.phi.dim != y.phi.dim) return {false, std::nullopt};
    if (x == y) return {true, identity_morphism(rat_forget(x))};

    std::vector<GlueMorphism> fwd = hodge_hom_space(x, y);
    std::vector<GlueMorphism> bwd = hodge_hom_space(y, x);
    if (fwd.size() != bwd.size()) return {false, std::nullopt};
    if (fwd.empty()) return {false, std::nullopt};
    if (fwd.size() > config.hom_dim_bound)
        throw error(errc::dimension_too_large,
                    "Hodge hom dimension " + std::to_string(fwd.size()) + " exceeds bound " +
                        std::to_string(config.hom_dim_bound));

    for (const auto& m : fwd)
        if (detail::hodge_morphism_invertible(m, x, y)) return {true, m};

    std::size_t d = fwd.size();
    std::vector<Rational> pts = detail::grid_points(x.psi.dim + x.phi.dim + 1);
    std::vector<std::size_t> idx(d, 0);
    while (true) {
        Matrix f(y.psi.dim, x.psi.dim), g(y.phi.dim, x.phi.dim);
        for (std::size_t i = 0; i < d; ++i) {
            const Rational& c = pts[idx[i]];
            if (c.is_zero()) continue;
            f = f + c * fwd[i].f;
            g = g + c * fwd[i].g;
        }
        GlueMorphism cand{fwd[0].source, fwd[0].target, std::move(f), std::move(g)};
        if (detail::hodge_morphism_invertible(cand, x, y)) return {true, cand};
        std::size_t pos = 0;
        while (pos < d && ++idx[pos] == pts.size()) idx[pos++] = 0;
        if (pos == d) break;
    }
    return {false, std::nullopt};
}

} // namespace monoglue
