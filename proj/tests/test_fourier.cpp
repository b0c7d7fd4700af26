#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "monoglue/fourier.hpp"
#include "monoglue/glue.hpp"
#include "monoglue/rng.hpp"
#include "monoglue/sheaf.hpp"

namespace mg = monoglue;
using mg::ExtendKind;
using mg::GlueObject;
using mg::LocalSystem;
using mg::Matrix;
using mg::Rational;
using testutil::mat;

TEST_CASE("fourier transform of pinned objects", "[fourdual]") {
    CHECK(mg::fourier(mg::skyscraper(1)) == mg::constant(1));
    CHECK(mg::fourier(mg::constant(1)) == mg::skyscraper(1));

    LocalSystem two = mg::validate_local_system(1, mat({{2}}));
    CHECK(mg::fourier(mg::extend(two, ExtendKind::shriek)) == mg::extend(two, ExtendKind::star));
    CHECK(mg::fourier(mg::extend(two, ExtendKind::star)) == mg::extend(two, ExtendKind::shriek));
}

TEST_CASE("fourier transform is an involution", "[fourdual]") {
    mg::Rng rng(41);
    for (int i = 0; i < 30; ++i) {
        GlueObject x = mg::random_glue_object(rng, 4);
        CHECK(mg::fourier(mg::fourier(x)) == x);
        CHECK(mg::monodromy(mg::fourier(x)).t_psi == mg::monodromy(x).t_phi);
    }
}

TEST_CASE("fourier transform is functorial", "[fourdual]") {
    mg::Rng rng(42);
    for (int i = 0; i < 15; ++i) {
        GlueObject x = mg::random_glue_object(rng, 3);
        GlueObject y = mg::random_glue_object(rng, 3);
        mg::GlueMorphism m = mg::random_morphism(rng, x, y);
        mg::GlueMorphism fm = mg::fourier(m);
        CHECK(fm.f == m.g);
        CHECK(fm.g == m.f);
        CHECK_NOTHROW(mg::validate_morphism(fm.f, fm.g, mg::fourier(x), mg::fourier(y)));
    }
}

TEST_CASE("verdier dual of pinned objects", "[fourdual]") {
    CHECK(mg::verdier_dual(mg::skyscraper(1)) == mg::skyscraper(1));
    CHECK(mg::verdier_dual(mg::constant(1)) == mg::constant(1));

    GlueObject shriek_two = mg::validate_object(1, 1, mat({{1}}), mat({{-1}}));
    GlueObject dual = mg::verdier_dual(shriek_two);
    CHECK(dual == mg::validate_object(1, 1, Matrix{{Rational(1, 2)}}, mat({{1}})));
    LocalSystem half = mg::validate_local_system(1, Matrix{{Rational(1, 2)}});
    CHECK(dual == mg::extend(half, ExtendKind::star));
}

TEST_CASE("verdier duality inverts monodromy", "[fourdual]") {
    mg::Rng rng(43);
    for (int i = 0; i < 20; ++i) {
        GlueObject x = mg::random_glue_object(rng, 4);
        GlueObject d = mg::verdier_dual(x);
        CHECK(mg::monodromy(d).t_psi == mg::invert(mg::monodromy(x).t_psi).transpose());
        CHECK(mg::monodromy(d).t_phi == mg::invert(mg::monodromy(x).t_phi).transpose());
    }
}

TEST_CASE("double duality is a natural isomorphism", "[fourdual]") {
    mg::Rng rng(44);
    const mg::IsoConfig config{12};
    for (int i = 0; i < 20; ++i) {
        GlueObject x = mg::random_glue_object(rng, 3);
        GlueObject dd = mg::verdier_dual(mg::verdier_dual(x));
        CHECK(dd.can == -(x.can * mg::monodromy(x).t_psi));
        CHECK(dd.var == -(mg::invert(mg::monodromy(x).t_psi) * x.var));

        mg::GlueMorphism unit = mg::validate_morphism(-mg::invert(mg::monodromy(x).t_psi),
                                                      Matrix::identity(x.phi_dim), x, dd);
        CHECK(mg::is_invertible(unit.f));
        CHECK(mg::is_invertible(unit.g));
        CHECK(mg::is_isomorphic(dd, x, config).isomorphic);
    }
}

TEST_CASE("duality exchanges the two extensions", "[fourdual]") {
    mg::Rng rng(45);
    for (int i = 0; i < 15; ++i) {
        LocalSystem l = mg::random_local_system(rng, 3);
        LocalSystem dual_l =
            mg::validate_local_system(l.rank, mg::invert(l.t).transpose());
        CHECK(mg::verdier_dual(mg::extend(l, ExtendKind::shriek)) ==
              mg::extend(dual_l, ExtendKind::star));
    }
}

TEST_CASE("duality commutes with fourier up to isomorphism", "[fourdual]") {
    mg::Rng rng(46);
    const mg::IsoConfig config{12};
    for (int i = 0; i < 20; ++i) {
        GlueObject x = mg::random_glue_object(rng, 3);
        CHECK(mg::is_isomorphic(mg::verdier_dual(mg::fourier(x)),
                                mg::fourier(mg::verdier_dual(x)), config)
                  .isomorphic);
    }
}

TEST_CASE("duality reciprocates local factors and keeps the point mass", "[fourdual]") {
    mg::Rng rng(47);
    for (int i = 0; i < 20; ++i) {
        GlueObject x = mg::random_glue_object(rng, 3);
        mg::KClass kx = mg::jordan_holder_class(x);
        mg::KClass kd = mg::jordan_holder_class(mg::verdier_dual(x));
        CHECK(kd.delta_mult == kx.delta_mult);

        std::vector<std::pair<mg::Polynomial, int>> expected;
        for (const auto& [f, mult] : kx.local_factors)
            expected.emplace_back(f.reciprocal_monic(), mult);
        std::sort(expected.begin(), expected.end(),
                  [](const auto& a, const auto& b) { return mg::poly_less(a.first, b.first); });
        CHECK(kd.local_factors == expected);
    }
}
