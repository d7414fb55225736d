#include <doctest.h>

#include <cmath>

#include "peirce/catalog.hpp"
#include "peirce/metrised.hpp"
#include "peirce/solve.hpp"
#include "peirce/spectral.hpp"
#include "test_util.hpp"

using namespace peirce;
using namespace peirce::test;

TEST_CASE("matsuo structure constants") {
    const Algebra a = matsuo_3c(0.3);
    CHECK(std::abs(a.c(0, 0, 0) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(a.c(0, 1, 0) - Complex(0.15)) < 1e-15);
    CHECK(std::abs(a.c(0, 1, 1) - Complex(0.15)) < 1e-15);
    CHECK(std::abs(a.c(0, 1, 2) - Complex(-0.15)) < 1e-15);
    CHECK(std::abs(a.c(1, 2, 0) - Complex(-0.15)) < 1e-15);
}

TEST_CASE("generalized matsuo degenerates to matsuo at eps = 0") {
    const Algebra g = generalized_matsuo(Complex(0.37, 0.11), 0.0);
    const Algebra m = matsuo_3c(Complex(0.37, 0.11));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(std::abs(g.c(i, j, k) - m.c(i, j, k)) == 0.0);
}

TEST_CASE("generalized matsuo basis spectra follow the published formula") {
    const Complex alpha(0.3), eps(0.2);
    const Algebra g = generalized_matsuo(alpha, eps);
    const Spectrum s = spectrum_of(g, make_vec({1.0, 0.0, 0.0}));
    CHECK(multiset_match(s.values(), {Complex(1.0), alpha - eps / 2.0, eps / 2.0}, 1e-10));
}

TEST_CASE("matsuo alpha = -1: the unit formula poles and a nilpotent appears") {
    const Algebra a = matsuo_3c(-1.0);
    CHECK_FALSE(a.find_unit().has_value());
    SolveConfig cfg;
    cfg.seed = 35;
    const IdempotentSet s = solve_idempotents(a, cfg);
    CHECK(classify_genericity(s).kind == GenericityKind::nongeneric_nilpotent);
    REQUIRE(s.nilpotent_directions.size() == 1);
    // (e1 + e2 + e3)^2 = 0 at alpha = -1
    Vec diag(3);
    diag << 1.0, 1.0, 1.0;
    CHECK(a.square(diag).norm() < 1e-12);
}

TEST_CASE("generalized matsuo exceptional parameters") {
    SolveConfig cfg;
    cfg.seed = 36;

    // eps = 1: the published e_{3+i} formula collapses onto e_i, so the
    // basis idempotents become isolated double points, not a family.
    const IdempotentSet dbl = solve_idempotents(generalized_matsuo(0.3, 1.0), cfg);
    CHECK(dbl.idempotents.size() == 5);
    CHECK_FALSE(dbl.has_infinite_family);
    int doubles = 0;
    for (const IdempotentRecord& rec : dbl.idempotents) {
        if (rec.multiplicity_estimate == 2) ++doubles;
    }
    CHECK(doubles == 3);
    CHECK(classify_genericity(dbl).kind == GenericityKind::nongeneric_half_in_spectrum);

    // eps = 2 alpha - 1: a genuine infinite family
    const IdempotentSet fam = solve_idempotents(generalized_matsuo(0.7, 0.4), cfg);
    CHECK(fam.has_infinite_family);
    CHECK(classify_genericity(fam).kind == GenericityKind::nongeneric_infinite_family);

    // gamma = 0 (here alpha = 1, eps = 2): 2-nilpotents appear
    const IdempotentSet nil = solve_idempotents(generalized_matsuo(1.0, 2.0), cfg);
    CHECK_FALSE(nil.nilpotent_directions.empty());
    CHECK(classify_genericity(nil).kind == GenericityKind::nongeneric_nilpotent);
}

TEST_CASE("two_dim_from_pair encodes the Peirce numbers in the table") {
    const Complex l1(0.2, 0.1), l2(-0.4, 0.3);
    const Algebra a = two_dim_from_pair(l1, l2);
    CHECK(multiset_match(spectrum_of(a, make_vec({1.0, 0.0})).values(), {Complex(1.0), l1}, 1e-10));
    CHECK(multiset_match(spectrum_of(a, make_vec({0.0, 1.0})).values(), {Complex(1.0), l2}, 1e-10));

    // (0,0): the third idempotent is the unit c1 + c2 with Peirce number 1
    const Algebra zz = two_dim_from_pair(0.0, 0.0);
    const auto unit = zz.find_unit();
    REQUIRE(unit);
    CHECK((*unit - make_vec({1.0, 1.0})).norm() < 1e-10);
    CHECK(multiset_match(spectrum_of(zz, *unit).values(), {Complex(1.0), Complex(1.0)}, 1e-10));

    // (-1,-1): the third Peirce number is again -1 (4(-1)^3 + 3 + 1 = 0), the
    // constant-spectrum configuration
    const Algebra mm = two_dim_from_pair(-1.0, -1.0);
    SolveConfig cfg;
    cfg.seed = 37;
    const IdempotentSet s = solve_idempotents(mm, cfg);
    CHECK(s.idempotents.size() == 4);
    for (const IdempotentRecord& rec : s.idempotents) {
        if (rec.is_zero()) continue;
        CHECK(multiset_match(rec.spectrum.values(), {Complex(1.0), Complex(-1.0)}, 1e-9));
    }
    CHECK(constant_spectrum_check(s).roots_of_unity_ok);
}

TEST_CASE("constant spectrum 3d reproduces the published idempotents and the zero sum") {
    const Algebra a = constant_spectrum_3d();
    const auto extras = constant_spectrum_3d_extra_idempotents();
    REQUIRE(extras.size() == 4);
    Vec sum = Vec::Zero(3);
    for (const Vec& c : extras) {
        CHECK((a.square(c) - c).norm() < 1e-12);
        sum += c;
    }
    for (int i = 0; i < 3; ++i) {
        Vec ci = Vec::Zero(3);
        ci[i] = 1.0;
        sum += ci;
    }
    CHECK(sum.norm() < 1e-12);  // the seven nonzero idempotents sum to zero
}

TEST_CASE("u1 and u1eps multiplications") {
    const Algebra u1 = cubic_u1(3);
    CHECK((u1.multiply(make_vec({1.0, 2.0, 3.0}), make_vec({4.0, 5.0, 6.0})) -
           make_vec({4.0, 10.0, 18.0}))
              .norm() < 1e-14);

    // x^2 = (x1^2 + 2 eps x2 x3, x2^2 + 2 eps x1 x3, x3^2 + 2 eps x1 x2)
    const Complex eps(0.7);
    const Algebra ue = cubic_u1_eps(eps);
    const Vec x = make_vec({1.0, 2.0, -1.0});
    const Vec sq = ue.square(x);
    CHECK(std::abs(sq[0] - (1.0 + 2.0 * eps * 2.0 * -1.0)) < 1e-13);
    CHECK(std::abs(sq[1] - (4.0 + 2.0 * eps * 1.0 * -1.0)) < 1e-13);
    CHECK(std::abs(sq[2] - (1.0 + 2.0 * eps * 1.0 * 2.0)) < 1e-13);
}

TEST_CASE("u2 is trace-free") {
    const Algebra a = cubic_u2();
    Rng rng(31);
    for (int i = 0; i < 10; ++i) {
        const Vec x = random_vec(4, rng);
        CHECK(std::abs(a.left_mult_matrix(x).trace()) < 1e-12 * (1.0 + x.norm()));
    }
}

// Closed-form enumeration of the idempotents of V(u2), derived by case
// analysis on x3, x4 in the defining equations x3^2 - x4^2 = x1,
// 2i x3 x4 = x2, 2x1 x3 + 2i x2 x4 = x3, -2x1 x4 + 2i x2 x3 = x4.
// Independent of the continuation solver; pins down the documented count
// (9 idempotents in total, i.e. 8 nonzero ones) and the true spectrum
// {1, -1/2, (-1 +- i sqrt(7))/4} of the nonzero idempotents.
static std::vector<Vec> u2_idempotents_closed_form() {
    std::vector<Vec> out;
    const double r = 1.0 / std::sqrt(2.0);
    out.push_back(make_vec({0.0, 0.0, 0.0, 0.0}));
    out.push_back(make_vec({0.5, 0.0, r, 0.0}));
    out.push_back(make_vec({0.5, 0.0, -r, 0.0}));
    out.push_back(make_vec({-0.5, 0.0, 0.0, r}));
    out.push_back(make_vec({-0.5, 0.0, 0.0, -r}));
    const Complex ih(0.0, 0.5);
    for (const double s3 : {1.0, -1.0}) {
        for (const double s4 : {1.0, -1.0}) {
            out.push_back(make_vec({0.0, -s3 * s4 * ih, s3 * ih, s4 * ih}));
        }
    }
    return out;
}

TEST_CASE("u2 idempotents: closed-form oracle against the solver") {
    const Algebra a = cubic_u2();
    const auto expected = u2_idempotents_closed_form();
    REQUIRE(expected.size() == 9);
    for (const Vec& c : expected) {
        CHECK((a.square(c) - c).norm() < 1e-15);
    }
    SolveConfig cfg;
    cfg.seed = 32;
    const IdempotentSet s = solve_idempotents(a, cfg);
    CHECK(point_sets_match(points_of(s), expected, 1e-9));

    // true common spectrum of the nonzero idempotents; the published
    // real values (-1 +- sqrt(7))/4 contradict det L_c = -1/4
    const double r7 = std::sqrt(7.0) / 4.0;
    const std::vector<Complex> truth = {Complex(1.0), Complex(-0.5), Complex(-0.25, r7),
                                        Complex(-0.25, -r7)};
    const std::vector<Complex> misprint = {Complex(1.0), Complex(-0.5), Complex(-0.25 + r7),
                                           Complex(-0.25 - r7)};
    for (const Vec& c : expected) {
        if (c.norm() < 1e-12) continue;
        const auto vals = spectrum_of(a, c).values();
        CHECK(multiset_match(vals, truth, 1e-10));
        CHECK_FALSE(multiset_match(vals, misprint, 1e-3));
        Complex det = 1.0;
        for (const Complex& v : vals) det *= v;
        CHECK(std::abs(det - Complex(-0.25)) < 1e-10);
    }
}

TEST_CASE("u2 nilpotents fill the plane x3 = x4 = 0") {
    const Algebra a = cubic_u2();
    Rng rng(33);
    for (int i = 0; i < 10; ++i) {
        Vec x = Vec::Zero(4);
        x[0] = gaussian_complex(rng);
        x[1] = gaussian_complex(rng);
        CHECK(a.square(x).norm() < 1e-14 * (1.0 + x.squaredNorm()));
    }
}

TEST_CASE("circle cubic parameter domain") {
    CHECK_THROWS_AS(cubic_circle(0.0), InputError);
    CHECK_THROWS_AS(cubic_circle(std::sqrt(0.5)), InputError);
    const Algebra ok = cubic_circle(0.7);
    CHECK(ok.dim() == 3);
}

TEST_CASE("cubic catalog algebras associate with the Euclidean form") {
    for (const Algebra& a : {cubic_u1(4), cubic_u1_eps(1.0), cubic_u2(), cubic_circle(0.5)}) {
        const auto check = metrised_check(a, InnerProduct::euclidean(a.dim()));
        CHECK(check.ok);
        CHECK(check.max_violation < 1e-14);
    }
}

TEST_CASE("registry covers the catalog and validates parameters") {
    CHECK(catalog_descriptors().size() >= 8);

    const CatalogEntry e = catalog_build("gen-matsuo", {{"alpha", 0.3}, {"eps", 0.2}});
    CHECK(e.algebra.dim() == 3);
    REQUIRE(e.expected.has_value());
    CHECK(e.expected->idempotent_count == 8);

    CHECK_THROWS_AS(catalog_build("nonesuch", {}), InputError);
    CHECK_THROWS_AS(catalog_build("matsuo", {{"k", 1.0}}), InputError);
    CHECK_THROWS_AS(catalog_build("u1", {{"n", 2.5}}), InputError);
    CHECK_THROWS_AS(catalog_cubic("matsuo", {}), InputError);
    CHECK(catalog_cubic("circle", {{"k", 0.5}}).dim() == 3);
}

TEST_CASE("catalog fixtures reproduce under the solver pipeline") {
    SolveConfig cfg;
    cfg.seed = 34;
    for (const CatalogEntry& entry :
         {matsuo_3c_entry(0.3), two_dim_from_pair_entry(0.2, -0.3), constant_spectrum_2d_entry(),
          cubic_u1_entry(3), cubic_u2_entry()}) {
        REQUIRE(entry.expected.has_value());
        const CatalogExpected& exp = *entry.expected;
        const IdempotentSet s = solve_idempotents(entry.algebra, cfg);
        if (exp.idempotent_count) CHECK(static_cast<int>(s.idempotents.size()) == *exp.idempotent_count);
        if (exp.nilpotent_count) CHECK(static_cast<int>(s.nilpotent_directions.size()) == *exp.nilpotent_count);
        if (exp.genericity) CHECK(classify_genericity(s).kind == *exp.genericity);
        CHECK(s.has_infinite_family == exp.infinite_family);
        // every expected spectrum matches some nonzero idempotent
        for (const auto& spec : exp.spectra) {
            bool matched = false;
            for (const IdempotentRecord& rec : s.idempotents) {
                if (rec.is_zero()) continue;
                matched = matched || multiset_match(rec.spectrum.values(), spec, 1e-7);
            }
            CHECK(matched);
        }
    }
}
