#pragma once

#include <cstdint>
#include <random>

#include "monoglue/errors.hpp"
#include "monoglue/glue.hpp"
#include "monoglue/hodge.hpp"
#include "monoglue/matrix.hpp"
#include "monoglue/sheaf.hpp"

namespace monoglue {

/// Deterministic random source. mt19937_64 output is fixed by the standard,
/// and the rejection sampling below avoids std::uniform_int_distribution,
/// whose mapping is implementation-defined; identical seeds therefore give
/// identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    /// Matrix with integer entries in [-3, 3].
    Matrix small_matrix(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(uniform(-3, 3));
        return m;
    }

private:
    std::mt19937_64 engine_;
};

/// Random valid object with dimensions up to max_dim, rejection-sampled
/// against the monodromy invariant.
inline GlueObject random_glue_object(Rng& rng, std::size_t max_dim) {
    std::size_t psi = static_cast<std::size_t>(rng.uniform(0, long(max_dim)));
    std::size_t phi = static_cast<std::size_t>(rng.uniform(0, long(max_dim)));
    while (true) {
        try {
            return validate_object(psi, phi, rng.small_matrix(phi, psi),
                                   rng.small_matrix(psi, phi));
        } catch (const error& e) {
            if (e.code() != errc::not_monodromic) throw;
        }
    }
}

/// Random local system of rank in [1, max_rank], rejection-sampled against
/// singular monodromy.
inline LocalSystem random_local_system(Rng& rng, std::size_t max_rank) {
    std::size_t rank = static_cast<std::size_t>(rng.uniform(1, long(max_rank)));
    while (true) {
        try {
            return validate_local_system(rank, rng.small_matrix(rank, rank));
        } catch (const error& e) {
            if (e.code() != errc::not_monodromic) throw;
        }
    }
}

/// Random combination of a hom-space basis with coefficients in [-3, 3];
/// the zero morphism when the hom space is trivial.
inline GlueMorphism random_morphism(Rng& rng, const GlueObject& x, const GlueObject& y) {
    std::vector<GlueMorphism> basis = hom_space(x, y);
    Matrix f(y.psi_dim, x.psi_dim), g(y.phi_dim, x.phi_dim);
    for (const auto& m : basis) {
        Rational c(rng.uniform(-3, 3));
        if (c.is_zero()) continue;
        f = f + c * m.f;
        g = g + c * m.g;
    }
    return validate_morphism(std::move(f), std::move(g), x, y);
}

/// Element of the closed Hodge test family: a direct sum of up to three
/// Tate twists of the four generators.
inline HodgeGlueObject random_hodge_family_object(Rng& rng) {
    auto generator = [&](long which) {
        switch (which) {
        case 0: return hodge_skyscraper();
        case 1: return hodge_constant();
        case 2: return hodge_extend_shriek();
        default: return hodge_extend_star();
        }
    };
    long parts = rng.uniform(1, 3);
    HodgeGlueObject x = hodge_tate_twist(generator(rng.uniform(0, 3)), rng.uniform(-2, 2));
    for (long i = 1; i < parts; ++i)
        x = hodge_direct_sum(x, hodge_tate_twist(generator(rng.uniform(0, 3)), rng.uniform(-2, 2)));
    return x;
}

} // namespace monoglue
