#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "peirce/catalog.hpp"
#include "peirce/poly.hpp"
#include "peirce/syzygy.hpp"
#include "test_util.hpp"

using namespace peirce;
using namespace peirce::test;

namespace {

IdempotentSet solved(const Algebra& a, std::uint64_t seed = 21) {
    SolveConfig cfg;
    cfg.seed = seed;
    return solve_idempotents(a, cfg);
}

}  // namespace

TEST_CASE("principal syzygy on the catalog") {
    const auto samples = default_syzygy_samples();
    CHECK(samples.size() == 24);
    CHECK(principal_syzygy(solved(matsuo_3c(0.3)), samples) < 1e-8);
    CHECK(principal_syzygy(solved(constant_spectrum_2d()), samples) < 1e-9);
    CHECK(principal_syzygy(solved(constant_spectrum_3d()), samples) < 1e-8);

    // at t = 1/2 every ratio is 1 and the sum is the count: residual zero
    CHECK(principal_syzygy(solved(cubic_u1(3)), {Complex(0.5, 0.0)}) < 1e-13);

    CHECK_THROWS_AS(principal_syzygy(solved(matsuo_3c(0.5)), samples), InputError);
}

TEST_CASE("derivative syzygies, including the k = n reduction") {
    const IdempotentSet s = solved(matsuo_3c(0.3));
    const auto res = derivative_syzygies(s);
    REQUIRE(res.size() == 3);
    for (double r : res) CHECK(r < 1e-8);

    // p^(n) is the constant n!, so k = n reduces to n! * sum 1/p_c(1/2),
    // the degree-0 instance of the general vector syzygy.
    PolyMap constant;
    constant.nvars = 3;
    constant.ncomponents = 1;
    constant.terms.push_back({0, {0, 0, 0}, Complex(1.0)});
    const double scalar_sum = general_syzygy(s, constant);
    CHECK(res[2] == doctest::Approx(6.0 * scalar_sum).epsilon(1e-6));
}

TEST_CASE("vector syzygy: hand-computed u1(2) case and the catalog") {
    // u1(2) vertices: p_c(1/2) is -1/4 at (1,0) and (0,1), +1/4 at (1,1);
    // (1,0)/(-1/4) + (0,1)/(-1/4) + (1,1)/(1/4) = 0 exactly.
    CHECK(vector_syzygy(solved(cubic_u1(2))) < 1e-10);
    CHECK(vector_syzygy(solved(matsuo_3c(0.3))) < 1e-8);

    // the 3D constant-spectrum example: sum of the seven nonzero idempotents
    // vanishes because all denominators are equal
    CHECK(vector_syzygy(solved(constant_spectrum_3d())) < 1e-8);
}

TEST_CASE("general vector syzygy") {
    const IdempotentSet s = solved(matsuo_3c(0.3));

    PolyMap identity;
    identity.nvars = 3;
    identity.ncomponents = 3;
    for (int i = 0; i < 3; ++i) {
        std::vector<int> e(3, 0);
        e[i] = 1;
        identity.terms.push_back({i, e, Complex(1.0)});
    }
    // H = id agrees with the vector syzygy (the zero idempotent adds nothing)
    CHECK(general_syzygy(s, identity) == doctest::Approx(vector_syzygy(s)).epsilon(1e-9));

    Rng rng(212);
    PolyMap quadratic;
    quadratic.nvars = 3;
    quadratic.ncomponents = 2;
    for (int c = 0; c < 2; ++c) {
        for (int i = 0; i < 3; ++i) {
            for (int j = i; j < 3; ++j) {
                std::vector<int> e(3, 0);
                e[i] += 1;
                e[j] += 1;
                quadratic.terms.push_back({c, e, gaussian_complex(rng)});
            }
        }
    }
    CHECK(general_syzygy(s, quadratic) < 1e-7);

    PolyMap cubic = quadratic;
    cubic.terms.push_back({0, {1, 1, 1}, Complex(1.0)});
    CHECK_THROWS_AS(general_syzygy(s, cubic), InputError);
}

TEST_CASE("reduced identities idemm and idemm1") {
    const auto samples = default_syzygy_samples();
    for (const Algebra& a : {matsuo_3c(0.3), constant_spectrum_3d(), cubic_u1(3)}) {
        const auto [idemm, idemm1] = idemm_syzygies(solved(a), samples);
        CHECK(idemm < 1e-8);
        CHECK(idemm1 < 1e-8);
    }
    // t = 1 annihilates both sides of idemm; t = 1/2 degenerates both
    // identities to counting the nonzero idempotents
    const auto [at_one, at_one1] = idemm_syzygies(solved(matsuo_3c(0.3)), {Complex(1.0, 0.0)});
    CHECK(at_one < 1e-10);
    CHECK(at_one1 < 1e-10);
    const auto [at_half, at_half1] = idemm_syzygies(solved(matsuo_3c(0.3)), {Complex(0.5, 0.0)});
    CHECK(at_half < 1e-12);
    CHECK(at_half1 < 1e-12);
}

TEST_CASE("unital conjugate-pair syzygies") {
    const auto samples = default_syzygy_samples();

    const Algebra u14 = cubic_u1(4);
    const IdempotentSet s4 = solved(u14);
    const auto unit4 = u14.find_unit();
    REQUIRE(unit4);
    const auto [p1_4, half41] = unital_syzygies(s4, *unit4, samples);
    CHECK(p1_4 < 1e-8);
    REQUIRE(half41.has_value());
    // hand enumeration of the seven representatives: four weight-1/weight-3
    // pairs contribute 1/((1/2)(1/2)) = 4 each, three weight-2 pairs
    // contribute 1/((1/2)(-1/2)) = -4 each: 16 - 12 = 4.
    CHECK(*half41 < 1e-9);

    const Algebra u13 = cubic_u1(3);
    const auto unit3 = u13.find_unit();
    REQUIRE(unit3);
    const auto [p1_3, none] = unital_syzygies(solved(u13), *unit3, samples);
    CHECK(p1_3 < 1e-8);
    CHECK_FALSE(none.has_value());

    const Algebra m = matsuo_3c(0.3);
    const auto unitm = m.find_unit();
    REQUIRE(unitm);
    const auto [p1_m, none_m] = unital_syzygies(solved(m), *unitm, samples);
    CHECK(p1_m < 1e-8);
    CHECK_FALSE(none_m.has_value());

    // a wrong unit leaves idempotents unpaired
    CHECK_THROWS_AS(unital_syzygies(s4, make_vec({1.0, 1.0, 1.0, 2.0}), samples),
                    InconsistencyError);
}

TEST_CASE("unital syzygies survive a unit that sorts before zero") {
    // basis {-e, v} puts the unit at (-1, 0), lexicographically before the
    // zero idempotent; pair representatives must still exclude the unit
    std::vector<Complex> t(8, Complex(0.0));
    t[(0 * 2 + 0) * 2 + 0] = -1.0;  // b1^2 = -b1  (b1 = -e)
    t[(0 * 2 + 1) * 2 + 1] = -1.0;  // b1 v = -v
    t[(1 * 2 + 0) * 2 + 1] = -1.0;
    t[(1 * 2 + 1) * 2 + 0] = -0.3;  // v^2 = 0.3 e + 0.2 v
    t[(1 * 2 + 1) * 2 + 1] = 0.2;
    const Algebra flipped(2, t);
    const Algebra a = direct_sum(flipped, two_dim_from_pair(0.0, 0.0));
    const auto unit = a.find_unit();
    REQUIRE(unit);
    CHECK((*unit)[0].real() == doctest::Approx(-1.0));
    const IdempotentSet s = solved(a, 99);
    REQUIRE(classify_genericity(s).kind == GenericityKind::generic);
    const auto [p1, h41] = unital_syzygies(s, *unit, default_syzygy_samples());
    CHECK(p1 < 1e-7);
    REQUIRE(h41.has_value());
    CHECK(*h41 < 1e-8);
}

TEST_CASE("two-dimensional eigenvalue syzygy") {
    CHECK(std::abs(two_dim_syzygy(Complex(1.0), Complex(0.0), Complex(0.0))) == 0.0);
    CHECK(std::abs(two_dim_syzygy(Complex(-1.0), Complex(-1.0), Complex(-1.0))) == 0.0);
    Rng rng(213);
    for (int i = 0; i < 20; ++i) {
        const Complex l = gaussian_complex(rng);
        CHECK(std::abs(two_dim_syzygy(Complex(0.5), Complex(0.5), l)) < 1e-15);
    }

    // factorization at l3 = 1/2: S(l1, l2, 1/2) = (2l1-1)(2l2-1)/2 exactly
    for (int i = 0; i < 100; ++i) {
        const Complex l1 = gaussian_complex(rng);
        const Complex l2 = gaussian_complex(rng);
        const Complex lhs = two_dim_syzygy(l1, l2, Complex(0.5));
        const Complex rhs = 0.5 * (2.0 * l1 - 1.0) * (2.0 * l2 - 1.0);
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
    }

    // companion reciprocal form: same zero set away from the poles
    CHECK_FALSE(two_dim_syzygy_reciprocal(Complex(0.5), Complex(0.1), Complex(0.2)).has_value());
    const auto rec = two_dim_syzygy_reciprocal(Complex(-1.0), Complex(-1.0), Complex(-1.0));
    REQUIRE(rec.has_value());
    CHECK(std::abs(*rec) < 1e-14);
}

TEST_CASE("n = 2: the eigenvalue syzygy and the principal syzygy agree") {
    Rng rng(214);
    const auto samples = default_syzygy_samples();
    int tested = 0;
    for (int trial = 0; trial < 60 && tested < 25; ++trial) {
        const Algebra a = random_algebra(2, rng);
        const IdempotentSet s = solved(a, 215);
        if (classify_genericity(s).kind != GenericityKind::generic) continue;
        ++tested;
        std::vector<Complex> lambdas;
        for (const IdempotentRecord& rec : s.idempotents) {
            if (!rec.is_zero()) lambdas.push_back(off_one_eigenvalue(rec));
        }
        REQUIRE(lambdas.size() == 3);
        const double syz = std::abs(two_dim_syzygy(lambdas[0], lambdas[1], lambdas[2]));
        const double principal = principal_syzygy(s, samples);
        CHECK(syz < 1e-9);
        CHECK(principal < 1e-7);
        // lambda0 and lambda1 are the k = 2 and k = 1 derivative instances
        const auto deriv = derivative_syzygies(s);
        CHECK(deriv[0] < 1e-7);
        CHECK(deriv[1] < 1e-7);
    }
    CHECK(tested == 25);
}

TEST_CASE("syzygy residuals are independent of the idempotent ordering") {
    const auto samples = default_syzygy_samples();
    IdempotentSet s = solved(matsuo_3c(0.3));
    const double before = principal_syzygy(s, samples);
    const double vec_before = vector_syzygy(s);
    std::reverse(s.idempotents.begin(), s.idempotents.end());
    // identical up to the reordered floating-point summation
    CHECK(std::abs(principal_syzygy(s, samples) - before) < 1e-12);
    CHECK(std::abs(vector_syzygy(s) - vec_before) < 1e-12);
}

TEST_CASE("verify_syzygies fills the full report") {
    const SyzygyReport rep = verify_syzygies(solved(matsuo_3c(0.3)));
    CHECK(rep.principal_max_residual < 1e-8);
    CHECK(rep.derivative_residuals.size() == 3);
    CHECK(rep.vector_residual < 1e-8);
    CHECK(rep.idemm_max_residual < 1e-8);
    CHECK(rep.idemm1_max_residual < 1e-8);
    REQUIRE(rep.unital.has_value());
    CHECK(rep.unital->p1_max_residual < 1e-8);
    CHECK_FALSE(rep.unital->half41_residual.has_value());
    CHECK(rep.samples.size() == 24);

    const SyzygyReport rep2 = verify_syzygies(solved(constant_spectrum_2d()));
    CHECK_FALSE(rep2.unital.has_value());  // no unit in this algebra
}
