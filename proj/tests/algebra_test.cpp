#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "peirce/algebra.hpp"
#include "peirce/catalog.hpp"
#include "peirce/poly.hpp"
#include "test_util.hpp"

using namespace peirce;
using namespace peirce::test;

TEST_CASE("multiply on Matsuo 3C_0.3 matches the defining relation") {
    const Algebra a = matsuo_3c(0.3);
    const Vec e1 = make_vec({1.0, 0.0, 0.0});
    const Vec e2 = make_vec({0.0, 1.0, 0.0});
    const Vec prod = a.multiply(e1, e2);
    CHECK(std::abs(prod[0] - Complex(0.15)) < 1e-15);
    CHECK(std::abs(prod[1] - Complex(0.15)) < 1e-15);
    CHECK(std::abs(prod[2] - Complex(-0.15)) < 1e-15);
}

TEST_CASE("multiply by zero vanishes") {
    Rng rng(11);
    const Algebra a = random_algebra(4, rng);
    const Vec zero = Vec::Zero(4);
    const Vec y = random_vec(4, rng);
    CHECK(a.multiply(zero, y).norm() == 0.0);
}

TEST_CASE("u1 multiplies coordinatewise") {
    const Algebra a = cubic_u1(3);
    const Vec x = make_vec({1.0, 2.0, 3.0});
    const Vec y = make_vec({4.0, 5.0, 6.0});
    const Vec prod = a.multiply(x, y);
    CHECK(std::abs(prod[0] - Complex(4.0)) < 1e-14);
    CHECK(std::abs(prod[1] - Complex(10.0)) < 1e-14);
    CHECK(std::abs(prod[2] - Complex(18.0)) < 1e-14);
}

TEST_CASE("multiply is symmetric and bilinear at random samples") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const Algebra a = random_algebra(n, rng);
        const Vec x = random_vec(n, rng);
        const Vec y = random_vec(n, rng);
        const Vec z = random_vec(n, rng);
        const Complex s = gaussian_complex(rng);
        CHECK((a.multiply(x, y) - a.multiply(y, x)).norm() <= 1e-12 * (1 + a.multiply(x, y).norm()));
        const Vec lhs = a.multiply(x + s * z, y);
        const Vec rhs = a.multiply(x, y) + s * a.multiply(z, y);
        CHECK((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm()));
    }
}

TEST_CASE("left_mult_matrix basics") {
    const Algebra u1 = cubic_u1(2);
    const Mat l = u1.left_mult_matrix(make_vec({1.0, 0.0}));
    CHECK(std::abs(l(0, 0) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(l(1, 1)) < 1e-15);
    CHECK(std::abs(l(0, 1)) < 1e-15);

    const Algebra m = matsuo_3c(0.3);
    const auto unit = m.find_unit();
    REQUIRE(unit.has_value());
    CHECK((m.left_mult_matrix(*unit) - Mat::Identity(3, 3)).norm() < 1e-10);

    // L_{e1} acting on e2 gives 0.15 (e1 + e2 - e3)
    const Mat l1 = m.left_mult_matrix(make_vec({1.0, 0.0, 0.0}));
    CHECK(std::abs(l1(0, 1) - Complex(0.15)) < 1e-15);
    CHECK(std::abs(l1(1, 1) - Complex(0.15)) < 1e-15);
    CHECK(std::abs(l1(2, 1) - Complex(-0.15)) < 1e-15);
}

TEST_CASE("char_poly is monic and matches the closed forms") {
    Rng rng(23);
    const Algebra a = random_algebra(5, rng);
    const CharPoly p0 = a.char_poly(Vec::Zero(5));
    REQUIRE(p0.coeffs.size() == 6);
    CHECK(p0.coeffs[5] == Complex(1.0));
    for (int k = 0; k < 5; ++k) CHECK(std::abs(p0.coeffs[k]) < 1e-14);

    const Algebra m = matsuo_3c(0.3);
    const auto unit = m.find_unit();
    REQUIRE(unit);
    // p(t) = (t-1)^3 = t^3 - 3t^2 + 3t - 1
    const CharPoly pe = m.char_poly(*unit);
    CHECK(std::abs(pe.coeffs[0] - Complex(-1.0)) < 1e-10);
    CHECK(std::abs(pe.coeffs[1] - Complex(3.0)) < 1e-10);
    CHECK(std::abs(pe.coeffs[2] - Complex(-3.0)) < 1e-10);
    CHECK(std::abs(pe.coeffs[3] - Complex(1.0)) < 1e-12);

    // roots of p_{e1} are {0, 0.3, 1}
    const auto roots = poly_roots(m.char_poly(make_vec({1.0, 0.0, 0.0})).coeffs);
    CHECK(multiset_match(roots, {Complex(0.0), Complex(0.3), Complex(1.0)}, 1e-10));
}

TEST_CASE("char_poly vanishes on the eigenvalues of L_x (independent route)") {
    Rng rng(29);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Algebra a = random_algebra(n, rng);
        Vec x = random_vec(n, rng);
        x /= x.norm();
        const CharPoly p = a.char_poly(x);
        Eigen::ComplexEigenSolver<Mat> es(a.left_mult_matrix(x), false);
        for (int i = 0; i < n; ++i) {
            CHECK(std::abs(poly_eval(p.coeffs, es.eigenvalues()[i])) < 1e-8);
        }
    }
}

TEST_CASE("find_unit on the catalog") {
    const Algebra m = matsuo_3c(0.3);
    const auto e = m.find_unit();
    REQUIRE(e);
    const double coeff = 1.0 / 1.3;
    for (int i = 0; i < 3; ++i) CHECK(std::abs((*e)[i] - Complex(coeff)) < 1e-10);

    const auto e1 = cubic_u1(3).find_unit();
    REQUIRE(e1);
    for (int i = 0; i < 3; ++i) CHECK(std::abs((*e1)[i] - Complex(1.0)) < 1e-10);

    // e1^2 = e1, e2^2 = -e1, e1 e2 = -e2 has no unit: the linear system is
    // inconsistent (e*e1 = e1 forces e = e1, but e1*e2 = -e2 != e2).
    CHECK_FALSE(constant_spectrum_2d().find_unit().has_value());
}

TEST_CASE("conjugate idempotents") {
    const Algebra m = matsuo_3c(0.3);
    const auto e = m.find_unit();
    REQUIRE(e);

    const Vec zero = Vec::Zero(3);
    CHECK(((*e) - m.conjugate_idempotent(*e, zero)).norm() < 1e-12);

    const Vec e1 = make_vec({1.0, 0.0, 0.0});
    const Vec conj = m.conjugate_idempotent(*e, e1);
    CHECK((m.square(conj) - conj).norm() < 1e-10);
    CHECK(m.multiply(e1, conj).norm() < 1e-10);  // c and e-c are orthogonal
    const auto roots = poly_roots(m.char_poly(conj).coeffs);
    CHECK(multiset_match(roots, {Complex(0.0), Complex(0.7), Complex(1.0)}, 1e-9));

    // involution
    CHECK((m.conjugate_idempotent(*e, conj) - e1).norm() < 1e-12);

    // u1(3): conjugate of (1,1,0) is (0,0,1)
    const Algebra u1 = cubic_u1(3);
    const auto u = u1.find_unit();
    REQUIRE(u);
    CHECK((u1.conjugate_idempotent(*u, make_vec({1.0, 1.0, 0.0})) - make_vec({0.0, 0.0, 1.0})).norm() <
          1e-12);

    CHECK_THROWS_AS(m.conjugate_idempotent(e1, zero), InputError);          // e1 is not the unit
    CHECK_THROWS_AS(m.conjugate_idempotent(*e, make_vec({0.4, 0.4, 0.4})), InputError);
}

TEST_CASE("conjugation reflects the characteristic polynomial: p_ebar(t) = +/- p_c(1-t)") {
    const Algebra m = matsuo_3c(Complex(0.27, 0.05));
    const auto e = m.find_unit();
    REQUIRE(e);
    Rng rng(31);
    const Vec c = make_vec({1.0, 0.0, 0.0});
    const Vec cbar = m.conjugate_idempotent(*e, c);
    const CharPoly pc = m.char_poly(c);
    const CharPoly pbar = m.char_poly(cbar);
    const double sign = (m.dim() % 2 == 0) ? 1.0 : -1.0;  // p(t) = (-1)^n chi(t) twice over
    for (int i = 0; i < 20; ++i) {
        const Complex t = gaussian_complex(rng);
        // chi_bar(t) = (-1)^n chi_c(1-t)  <=>  p_bar(t) = (-1)^n p_c(1-t)
        const Complex lhs = poly_eval(pbar.coeffs, t);
        const Complex rhs = sign * poly_eval(pc.coeffs, Complex(1.0) - t);
        CHECK(std::abs(lhs - rhs) < 1e-8);
    }
}

TEST_CASE("detjac identity: |det(2L_c - I)| = 2^n |p_c(1/2)|") {
    Rng rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const Algebra a = random_algebra(n, rng);
        // any point works for the determinant identity; idempotency not needed
        const Vec x = random_vec(n, rng);
        const Mat j = 2.0 * a.left_mult_matrix(x) - Mat::Identity(n, n);
        const double lhs = std::abs(j.determinant());
        const double rhs = std::pow(2.0, n) * std::abs(poly_eval(a.char_poly(x).coeffs, Complex(0.5)));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("direct sums") {
    const Algebra a = cubic_u1(2);
    const Algebra b = matsuo_3c(0.3);
    const Algebra s = direct_sum(a, b);
    CHECK(s.dim() == 5);
    CHECK(std::abs(s.c(0, 1, 0)) < 1e-15);
    CHECK(std::abs(s.c(2, 3, 2) - Complex(0.15)) < 1e-15);
    CHECK(std::abs(s.c(0, 2, 0)) < 1e-15);  // cross-block products vanish

    // u1(1) + u1(1) has exactly the u1(2) structure tensor
    const Algebra sum11 = direct_sum(cubic_u1(1), cubic_u1(1));
    const Algebra u12 = cubic_u1(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) CHECK(std::abs(sum11.c(i, j, k) - u12.c(i, j, k)) < 1e-15);
}

TEST_CASE("commutativity violations are rejected, tiny asymmetry symmetrized") {
    std::vector<Complex> bad(8, Complex(0.0));
    bad[(0 * 2 + 1) * 2 + 0] = 1.0;  // c[0][1][0] = 1 but c[1][0][0] = 0
    CHECK_THROWS_AS(Algebra(2, bad), InputError);

    std::vector<Complex> ok(8, Complex(0.0));
    ok[(0 * 2 + 1) * 2 + 0] = 1.0;
    ok[(1 * 2 + 0) * 2 + 0] = 1.0 + 5e-13;
    const Algebra a(2, ok);
    CHECK(std::abs(a.c(0, 1, 0) - a.c(1, 0, 0)) == 0.0);
}

TEST_CASE("algebra JSON round trip and validation") {
    const Algebra m = matsuo_3c(0.3);
    const Algebra back = algebra_from_json(algebra_to_json(m));
    CHECK(back.dim() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(std::abs(back.c(i, j, k) - m.c(i, j, k)) < 1e-15);
    CHECK(back.label() == m.label());

    CHECK_THROWS_AS(algebra_from_json("{"), InputError);
    CHECK_THROWS_AS(algebra_from_json("{\"dim\": 2, \"tensor\": [[0,1,0,1.0,0.0]]}"), InputError);
    CHECK_THROWS_AS(algebra_from_json("{\"dim\": 0}"), InputError);
    CHECK_THROWS_AS(
        algebra_from_json("{\"dim\": 1, \"tensor\": [[0,0,0,1,0],[0,0,0,2,0]]}"), InputError);
}
