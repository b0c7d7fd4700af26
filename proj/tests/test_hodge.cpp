#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "monoglue/fourier.hpp"
#include "monoglue/hodge.hpp"
#include "monoglue/rng.hpp"

namespace mg = monoglue;
using mg::Filtration;
using mg::HodgeGlueObject;
using mg::Matrix;
using mg::MixedHodgeStructure;
using mg::Rational;
using testutil::mat;

TEST_CASE("filtrations canonicalize and validate", "[hodge]") {
    Matrix full = Matrix::identity(2);
    Filtration f = Filtration::from_steps(2, {{0, mat({{1}, {1}})}, {3, full}});
    CHECK(f.jumps().size() == 2);
    CHECK(f.value_at(-1) == Matrix(2, 0));
    CHECK(f.value_at(0) == f.value_at(2));
    CHECK(f.value_at(3) == full);

    Filtration g = Filtration::from_steps(2, {{0, mat({{2}, {2}})}, {3, mat({{1, 0}, {1, 1}})}});
    CHECK(f == g);

    Filtration dedup = Filtration::from_steps(2, {{0, mat({{3}, {3}})}, {1, mat({{1}, {1}})}, {3, full}});
    CHECK(dedup.jumps().size() == 2);

    try {
        Filtration::from_steps(2, {{0, mat({{1}, {0}})}, {1, mat({{0}, {1}})}});
        FAIL("non-nested values must be rejected");
    } catch (const mg::error& e) {
        CHECK(e.code() == mg::errc::not_filtration);
    }
    try {
        Filtration::from_steps(2, {{0, mat({{1}, {0}})}});
        FAIL("a filtration that never fills the space must be rejected");
    } catch (const mg::error& e) {
        CHECK(e.code() == mg::errc::not_filtration);
    }
    try {
        Filtration::from_steps(2, {{0, mat({{1}, {0}})}, {0, mat({{0}, {1}})}, {1, full}});
        FAIL("conflicting duplicate indices must be rejected");
    } catch (const mg::error& e) {
        CHECK(e.code() == mg::errc::not_filtration);
    }
    try {
        Filtration::from_steps(2, {{0, mat({{1}})}});
        FAIL("wrong basis height must be rejected");
    } catch (const mg::error& e) {
        CHECK(e.code() == mg::errc::shape_mismatch);
    }

    CHECK(Filtration::from_steps(0, {}).jumps().empty());
}

TEST_CASE("tate structures and purity", "[hodge]") {
    for (long n = -3; n <= 3; ++n) {
        MixedHodgeStructure q = mg::mhs_tate(n);
        CHECK(q.dim == 1);
        CHECK(q.weight_piece(-2 * n) == Matrix::identity(1));
        CHECK(q.weight_piece(-2 * n - 1) == Matrix(1, 0));
        CHECK(q.hodge_piece(-n) == Matrix::identity(1));
        CHECK(q.hodge_piece(-n + 1) == Matrix(1, 0));
    }

    Matrix full = Matrix::identity(1);
    try {
        mg::mhs_validate(1, Filtration::from_steps(1, {{0, full}}),
                         Filtration::from_steps(1, {{-1, full}}));
        FAIL("Hodge filtration too deep for the weight must be rejected");
    } catch (const mg::error& e) {
        CHECK(e.code() == mg::errc::not_pure);
    }
    try {
        mg::mhs_validate(1, Filtration::from_steps(1, {{1, full}}),
                         Filtration::from_steps(1, {{0, full}}));
        FAIL("odd weight must be rejected");
    } catch (const mg::error& e) {
        CHECK(e.code() == mg::errc::not_pure);
    }

    MixedHodgeStructure mixed = mg::mhs_validate(
        2, Filtration::from_steps(2, {{0, mat({{1}, {0}})}, {2, Matrix::identity(2)}}),
        Filtration::from_steps(2, {{-1, mat({{1}, {1}})}, {0, Matrix::identity(2)}}));
    CHECK(mixed.dim == 2);
    CHECK(mixed.hodge_piece(1) == mat({{1}, {1}}));
}

TEST_CASE("tate twisting composes and shifts indices", "[hodge]") {
    CHECK(mg::tate_twist(mg::mhs_tate(0), 1) == mg::mhs_tate(1));
    CHECK(mg::tate_twist(mg::mhs_tate(2), -3) == mg::mhs_tate(-1));

    MixedHodgeStructure sum = mg::mhs_direct_sum(mg::mhs_tate(0), mg::mhs_tate(1));
    CHECK(mg::tate_twist(sum, 1) == mg::mhs_direct_sum(mg::mhs_tate(1), mg::mhs_tate(2)));

    mg::Rng rng(51);
    for (int i = 0; i < 10; ++i) {
        long a = rng.uniform(-2, 2);
        long b = rng.uniform(-2, 2);
        MixedHodgeStructure m = mg::mhs_direct_sum(mg::mhs_tate(rng.uniform(-2, 2)),
                                                   mg::mhs_tate(rng.uniform(-2, 2)));
        CHECK(mg::tate_twist(mg::tate_twist(m, a), b) == mg::tate_twist(m, a + b));
        CHECK(mg::tate_twist(m, 0) == m);
    }
}

TEST_CASE("duality of mixed Hodge structures", "[hodge]") {
    CHECK(mg::mhs_dual(mg::mhs_tate(0)) == mg::mhs_tate(0));
    CHECK(mg::mhs_dual(mg::mhs_tate(1)) == mg::mhs_tate(-1));
    CHECK(mg::mhs_dual(mg::mhs_direct_sum(mg::mhs_tate(0), mg::mhs_tate(1))) ==
          mg::mhs_direct_sum(mg::mhs_tate(0), mg::mhs_tate(-1)));

    mg::Rng rng(52);
    for (int i = 0; i < 10; ++i) {
        MixedHodgeStructure m = mg::mhs_direct_sum(mg::mhs_tate(rng.uniform(-2, 2)),
                                                   mg::mhs_tate(rng.uniform(-2, 2)));
        CHECK(mg::mhs_dual(mg::mhs_dual(m)) == m);
        CHECK(mg::mhs_dual(mg::tate_twist(m, 1)) == mg::tate_twist(mg::mhs_dual(m), -1));
    }
}

TEST_CASE("morphism reports on pinned maps", "[hodge]") {
    mg::MorphismReport id_ok = mg::mhs_morphism_validate(Matrix::identity(1), mg::mhs_tate(0),
                                                         mg::mhs_tate(0));
    CHECK(id_ok.filtered);
    CHECK(id_ok.strict);

    mg::MorphismReport wrong_twist =
        mg::mhs_morphism_validate(Matrix::identity(1), mg::mhs_tate(1), mg::mhs_tate(0));
    CHECK_FALSE(wrong_twist.filtered);
    CHECK_FALSE(wrong_twist.strict);

    MixedHodgeStructure sum = mg::mhs_direct_sum(mg::mhs_tate(0), mg::mhs_tate(1));
    mg::MorphismReport proj = mg::mhs_morphism_validate(mat({{1, 0}}), sum, mg::mhs_tate(0));
    CHECK(proj.filtered);
    CHECK(proj.strict);
    mg::MorphismReport bad_proj = mg::mhs_morphism_validate(mat({{0, 1}}), sum, mg::mhs_tate(0));
    CHECK_FALSE(bad_proj.filtered);

    CHECK_THROWS_AS(mg::mhs_morphism_validate(Matrix(2, 1), sum, mg::mhs_tate(0)), mg::error);

    mg::MorphismReport zero = mg::mhs_morphism_validate(mat({{0}}), mg::mhs_tate(1), mg::mhs_tate(0));
    CHECK(zero.filtered);
    CHECK(zero.strict);
}

TEST_CASE("hodge glue objects validate the twisted var condition", "[hodge]") {
    CHECK_NOTHROW(mg::hodge_skyscraper());
    CHECK_NOTHROW(mg::hodge_constant());
    CHECK_NOTHROW(mg::hodge_extend_shriek());
    CHECK_NOTHROW(mg::hodge_extend_star());

    try {
        mg::hodge_glue_validate(mg::mhs_tate(0), mg::mhs_tate(0), Matrix::identity(1),
                                Matrix::identity(1));
        FAIL("var into the untwisted structure must be rejected");
    } catch (const mg::error& e) {
        CHECK(e.code() == mg::errc::not_hodge_morphism);
    }
    try {
        mg::hodge_glue_validate(mg::mhs_tate(0), mg::mhs_tate(0), Matrix(2, 1), Matrix(1, 1));
        FAIL("wrong can shape must be rejected");
    } catch (const mg::error& e) {
        CHECK(e.code() == mg::errc::shape_mismatch);
    }

    // var*can lowers the canonical bigrading, so the monodromy of any valid
    // Hodge glue object is unipotent.
    mg::Rng unip_rng(57);
    for (int i = 0; i < 10; ++i) {
        HodgeGlueObject h = mg::random_hodge_family_object(unip_rng);
        mg::GlueObject r = mg::rat_forget(h);
        Matrix n = mg::monodromy(r).t_psi - Matrix::identity(r.psi_dim);
        Matrix power = Matrix::identity(r.psi_dim);
        for (std::size_t k = 0; k < r.psi_dim; ++k) power = power * n;
        CHECK(power.is_zero());
    }

    HodgeGlueObject star = mg::hodge_extend_star();
    CHECK(star.psi == mg::mhs_tate(0));
    CHECK(star.phi == mg::mhs_tate(-1));
    CHECK(mg::rat_forget(star) == mg::validate_object(1, 1, mat({{0}}), mat({{1}})));
    CHECK(mg::rat_forget(mg::hodge_skyscraper()) == mg::validate_object(0, 1, Matrix(1, 0), Matrix(0, 1)));
}

TEST_CASE("hodge fourier transform on the generators", "[hodge]") {
    CHECK(mg::hodge_fourier(mg::hodge_skyscraper()) == mg::hodge_constant());
    CHECK(mg::hodge_fourier(mg::hodge_constant()) ==
          mg::hodge_tate_twist(mg::hodge_skyscraper(), -1));
    CHECK(mg::hodge_fourier(mg::hodge_extend_shriek()) == mg::hodge_extend_star());
    CHECK(mg::hodge_fourier(mg::hodge_extend_star()) ==
          mg::hodge_tate_twist(mg::hodge_extend_shriek(), -1));

    mg::Rng rng(53);
    for (int i = 0; i < 20; ++i) {
        HodgeGlueObject h = mg::random_hodge_family_object(rng);
        CHECK(mg::hodge_fourier(mg::hodge_fourier(h)) == mg::hodge_tate_twist(h, -1));
        CHECK(mg::rat_forget(mg::hodge_fourier(h)) == mg::fourier(mg::rat_forget(h)));
        CHECK(mg::rat_forget(mg::hodge_tate_twist(h, 1)) == mg::rat_forget(h));
    }
}

TEST_CASE("hodge duality on the generators", "[hodge]") {
    CHECK(mg::hodge_dual(mg::hodge_skyscraper()) == mg::hodge_skyscraper());
    CHECK(mg::hodge_dual(mg::hodge_constant()) == mg::hodge_tate_twist(mg::hodge_constant(), 1));
    CHECK(mg::hodge_dual(mg::hodge_extend_shriek()) ==
          mg::hodge_tate_twist(mg::hodge_extend_star(), 1));

    HodgeGlueObject d_star = mg::hodge_dual(mg::hodge_extend_star());
    CHECK(d_star.psi == mg::mhs_tate(1));
    CHECK(d_star.phi == mg::mhs_tate(1));
    CHECK(d_star.can == mat({{-1}}));
    CHECK(d_star.var == mat({{0}}));
    mg::IsoResult r = mg::is_hodge_isomorphic(d_star, mg::hodge_tate_twist(mg::hodge_extend_shriek(), 1));
    CHECK(r.isomorphic);
    REQUIRE(r.witness.has_value());
    CHECK(mg::is_invertible(r.witness->f));

    mg::Rng rng(54);
    const mg::IsoConfig config{12};
    for (int i = 0; i < 15; ++i) {
        HodgeGlueObject h = mg::random_hodge_family_object(rng);
        CHECK(mg::rat_forget(mg::hodge_dual(h)) == mg::verdier_dual(mg::rat_forget(h)));
        CHECK(mg::is_hodge_isomorphic(mg::hodge_dual(mg::hodge_dual(h)), h, config).isomorphic);
    }
}

TEST_CASE("duality and fourier on hodge objects differ by one twist", "[hodge]") {
    mg::Rng rng(55);
    const mg::IsoConfig config{12};
    for (int i = 0; i < 15; ++i) {
        HodgeGlueObject h = mg::random_hodge_family_object(rng);
        HodgeGlueObject lhs = mg::hodge_dual(mg::hodge_fourier(h));
        HodgeGlueObject rhs = mg::hodge_tate_twist(mg::hodge_fourier(mg::hodge_dual(h)), 1);
        CHECK(mg::is_hodge_isomorphic(lhs, rhs, config).isomorphic);
    }
}

TEST_CASE("hodge hom spaces are cut out by the filtrations", "[hodge]") {
    CHECK(mg::hodge_hom_space(mg::hodge_skyscraper(), mg::hodge_skyscraper()).size() == 1);
    CHECK(mg::hodge_hom_space(mg::hodge_skyscraper(),
                              mg::hodge_tate_twist(mg::hodge_skyscraper(), 1))
              .empty());
    CHECK(mg::hodge_hom_space(mg::hodge_extend_shriek(), mg::hodge_extend_shriek()).size() == 1);

    mg::Rng rng(56);
    for (int i = 0; i < 10; ++i) {
        HodgeGlueObject x = mg::random_hodge_family_object(rng);
        HodgeGlueObject y = mg::random_hodge_family_object(rng);
        for (const auto& m : mg::hodge_hom_space(x, y)) {
            CHECK_NOTHROW(mg::validate_morphism(m.f, m.g, mg::rat_forget(x), mg::rat_forget(y)));
            mg::MorphismReport rf = mg::mhs_morphism_validate(m.f, x.psi, y.psi);
            mg::MorphismReport rg = mg::mhs_morphism_validate(m.g, x.phi, y.phi);
            CHECK(rf.filtered);
            CHECK(rf.strict);
            CHECK(rg.filtered);
            CHECK(rg.strict);
        }
    }
}

TEST_CASE("hodge isomorphism testing distinguishes twists", "[hodge]") {
    HodgeGlueObject sky = mg::hodge_skyscraper();
    CHECK(mg::is_hodge_isomorphic(sky, sky).isomorphic);
    CHECK_FALSE(mg::is_hodge_isomorphic(sky, mg::hodge_tate_twist(sky, 1)).isomorphic);
    CHECK_FALSE(mg::is_hodge_isomorphic(sky, mg::hodge_constant()).isomorphic);

    HodgeGlueObject sky3 = mg::hodge_direct_sum(sky, mg::hodge_direct_sum(sky, sky));
    HodgeGlueObject big_x = mg::hodge_direct_sum(sky3, mg::hodge_dual(mg::hodge_extend_star()));
    HodgeGlueObject big_y =
        mg::hodge_direct_sum(sky3, mg::hodge_tate_twist(mg::hodge_extend_shriek(), 1));
    CHECK(mg::hodge_hom_space(big_x, big_y).size() == 10);
    CHECK_THROWS_AS(mg::is_hodge_isomorphic(big_x, big_y), mg::error);
    mg::IsoResult big = mg::is_hodge_isomorphic(big_x, big_y, mg::IsoConfig{12});
    CHECK(big.isomorphic);
    REQUIRE(big.witness.has_value());
    CHECK(mg::is_invertible(big.witness->g));
}
