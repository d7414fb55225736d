#include "peirce/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "peirce/metrised.hpp"

namespace peirce {

namespace {

std::vector<Complex> zero_tensor(int n) {
    return std::vector<Complex>(static_cast<size_t>(n) * n * n, Complex(0.0));
}

void set_sym(std::vector<Complex>& t, int n, int i, int j, int k, Complex v) {
    t[(static_cast<size_t>(i) * n + j) * n + k] = v;
    t[(static_cast<size_t>(j) * n + i) * n + k] = v;
}

std::vector<Complex> spectrum_list(std::initializer_list<Complex> vals) {
    return std::vector<Complex>(vals);
}

}  // namespace

Algebra matsuo_3c(Complex alpha) {
    auto t = zero_tensor(3);
    for (int i = 0; i < 3; ++i) set_sym(t, 3, i, i, i, Complex(1.0));
    const Complex h = alpha / 2.0;
    // e_i e_j = (alpha/2)(e_i + e_j - e_k)
    const int third[3][3] = {{-1, 2, 1}, {2, -1, 0}, {1, 0, -1}};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            set_sym(t, 3, i, j, i, h);
            set_sym(t, 3, i, j, j, h);
            set_sym(t, 3, i, j, third[i][j], -h);
        }
    }
    return Algebra(3, std::move(t), "matsuo_3c");
}

CatalogEntry matsuo_3c_entry(Complex alpha) {
    CatalogEntry e{"matsuo", {{"alpha", alpha}}, matsuo_3c(alpha), std::nullopt};
    if (std::abs(alpha - Complex(-1.0)) > 1e-9 && std::abs(alpha - Complex(0.5)) > 1e-9) {
        CatalogExpected exp;
        exp.idempotent_count = 8;
        exp.nilpotent_count = 0;
        exp.genericity = GenericityKind::generic;
        for (int i = 0; i < 3; ++i) exp.spectra.push_back(spectrum_list({0.0, alpha, 1.0}));
        for (int i = 0; i < 3; ++i) exp.spectra.push_back(spectrum_list({0.0, 1.0 - alpha, 1.0}));
        exp.spectra.push_back(spectrum_list({1.0, 1.0, 1.0}));
        e.expected = std::move(exp);
    } else if (std::abs(alpha - Complex(0.5)) <= 1e-9) {
        CatalogExpected exp;
        exp.genericity = GenericityKind::nongeneric_infinite_family;
        exp.infinite_family = true;
        e.expected = std::move(exp);
    }
    return e;
}

Algebra generalized_matsuo(Complex alpha, Complex eps) {
    auto t = zero_tensor(3);
    for (int i = 0; i < 3; ++i) set_sym(t, 3, i, i, i, Complex(1.0));
    const Complex h = alpha / 2.0;
    const Complex g = (eps - alpha) / 2.0;
    const int third[3][3] = {{-1, 2, 1}, {2, -1, 0}, {1, 0, -1}};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            set_sym(t, 3, i, j, i, h);
            set_sym(t, 3, i, j, j, h);
            set_sym(t, 3, i, j, third[i][j], g);
        }
    }
    return Algebra(3, std::move(t), "generalized_matsuo");
}

CatalogEntry generalized_matsuo_entry(Complex alpha, Complex eps) {
    CatalogEntry e{"gen-matsuo", {{"alpha", alpha}, {"eps", eps}}, generalized_matsuo(alpha, eps),
                   std::nullopt};
    const Complex gamma = alpha + 1.0 + eps * (eps - 2.0 * alpha - 1.0);
    const Complex cond = (alpha + 1.0 + eps) * (eps - 1.0) * gamma;
    if (std::abs(cond) > 1e-9) {
        CatalogExpected exp;
        exp.idempotent_count = 8;
        exp.nilpotent_count = 0;
        exp.genericity = GenericityKind::generic;
        // sigma(e_i) has a closed form; the e_7 and e_{3+i} spectra are
        // published expressions we verify rather than trust.
        for (int i = 0; i < 3; ++i) {
            exp.spectra.push_back(spectrum_list({1.0, alpha - eps / 2.0, eps / 2.0}));
        }
        const Complex mu = 1.0 - 1.5 * eps / (1.0 + alpha + eps);
        const Complex s1 = eps * (2.0 - alpha - eps) / (2.0 * gamma);
        const Complex s2 =
            (2.0 * (1.0 - alpha * alpha) + eps * (3.0 * alpha - eps - 2.0)) / (2.0 * gamma);
        for (int i = 0; i < 3; ++i) exp.spectra.push_back(spectrum_list({1.0, s1, s2}));
        exp.spectra.push_back(spectrum_list({1.0, mu, mu}));
        e.expected = std::move(exp);
    }
    return e;
}

Algebra two_dim_from_pair(Complex l1, Complex l2) {
    auto t = zero_tensor(2);
    set_sym(t, 2, 0, 0, 0, Complex(1.0));
    set_sym(t, 2, 1, 1, 1, Complex(1.0));
    set_sym(t, 2, 0, 1, 0, l2);
    set_sym(t, 2, 0, 1, 1, l1);
    return Algebra(2, std::move(t), "two_dim_from_pair");
}

CatalogEntry two_dim_from_pair_entry(Complex l1, Complex l2) {
    CatalogEntry e{"two-dim", {{"lambda1", l1}, {"lambda2", l2}}, two_dim_from_pair(l1, l2),
                   std::nullopt};
    CatalogExpected exp;
    const Complex delta = 1.0 - 4.0 * l1 * l2;
    if (std::abs(delta) > 1e-9) {
        exp.idempotent_count = 4;
        exp.nilpotent_count = 0;
        // The third nonzero idempotent's Peirce number solves the 2D syzygy.
        const Complex l3 = (l1 + l2 - 1.0) / (4.0 * l1 * l2 - 1.0);
        exp.spectra.push_back(spectrum_list({1.0, l1}));
        exp.spectra.push_back(spectrum_list({1.0, l2}));
        exp.spectra.push_back(spectrum_list({1.0, l3}));
    } else {
        exp.idempotent_count = 3;
        exp.nilpotent_count = 1;
        exp.genericity = GenericityKind::nongeneric_nilpotent;
        exp.spectra.push_back(spectrum_list({1.0, l1}));
        exp.spectra.push_back(spectrum_list({1.0, l2}));
    }
    e.expected = std::move(exp);
    return e;
}

Algebra constant_spectrum_2d() {
    auto t = zero_tensor(2);
    set_sym(t, 2, 0, 0, 0, Complex(1.0));
    set_sym(t, 2, 1, 1, 0, Complex(-1.0));
    set_sym(t, 2, 0, 1, 1, Complex(-1.0));
    return Algebra(2, std::move(t), "constant_spectrum_2d");
}

CatalogEntry constant_spectrum_2d_entry() {
    CatalogEntry e{"const2d", {}, constant_spectrum_2d(), std::nullopt};
    CatalogExpected exp;
    exp.idempotent_count = 4;
    exp.nilpotent_count = 0;
    exp.genericity = GenericityKind::generic;
    for (int i = 0; i < 3; ++i) exp.spectra.push_back(spectrum_list({1.0, -1.0}));
    e.expected = std::move(exp);
    return e;
}

namespace {

Algebra constant_spectrum_3d_for(Complex alpha, Complex beta, Complex gamma) {
    auto t = zero_tensor(3);
    for (int i = 0; i < 3; ++i) set_sym(t, 3, i, i, i, Complex(1.0));
    // c_i c_j = alpha c_i + beta c_j + gamma c_k, (i,j,k) cyclic.
    const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& ijk : cyc) {
        const int i = ijk[0], j = ijk[1], k = ijk[2];
        set_sym(t, 3, i, j, i, alpha);
        set_sym(t, 3, i, j, j, beta);
        set_sym(t, 3, i, j, k, gamma);
    }
    return Algebra(3, std::move(t), "constant_spectrum_3d");
}

}  // namespace

std::vector<Vec> constant_spectrum_3d_extra_idempotents() {
    const Complex gamma = (1.0 - std::sqrt(Complex(-7.0))) / 4.0;
    std::vector<Vec> out;
    Vec c4(3), c5(3), c6(3), c7(3);
    c4 << -gamma, -gamma, -gamma;
    c5 << gamma - 1.0, -gamma, gamma;
    c6 << gamma, gamma - 1.0, -gamma;
    c7 << -gamma, gamma, gamma - 1.0;
    out = {c4, c5, c6, c7};
    return out;
}

Algebra constant_spectrum_3d() {
    const Complex root = std::sqrt(Complex(-6.0, 0.0) + 2.0 * std::sqrt(Complex(-7.0)));
    const Complex gamma = (1.0 - std::sqrt(Complex(-7.0))) / 4.0;
    // The published table leaves the pairing of the +/- values of alpha, beta
    // open; keep the choice under which the published c4..c7 are idempotent.
    for (int sign = -1; sign <= 1; sign += 2) {
        const Complex alpha = -0.5 + 0.25 * static_cast<double>(sign) * root;
        const Complex beta = -0.5 - 0.25 * static_cast<double>(sign) * root;
        Algebra cand = constant_spectrum_3d_for(alpha, beta, gamma);
        bool all_idempotent = true;
        for (const Vec& c : constant_spectrum_3d_extra_idempotents()) {
            if ((cand.square(c) - c).norm() > 1e-9) {
                all_idempotent = false;
                break;
            }
        }
        if (all_idempotent) return cand;
    }
    throw Error("constant_spectrum_3d: neither sign choice reproduces the published idempotents");
}

CatalogEntry constant_spectrum_3d_entry() {
    CatalogEntry e{"const3d", {}, constant_spectrum_3d(), std::nullopt};
    CatalogExpected exp;
    exp.idempotent_count = 8;
    exp.nilpotent_count = 0;
    exp.genericity = GenericityKind::generic;
    const Complex w1(-0.5, std::sqrt(3.0) / 2.0);
    const Complex w2(-0.5, -std::sqrt(3.0) / 2.0);
    for (int i = 0; i < 7; ++i) exp.spectra.push_back(spectrum_list({1.0, w1, w2}));
    e.expected = std::move(exp);
    return e;
}

CubicForm cubic_form_u1(int n) {
    if (n < 1 || n > kMaxDim) throw InputError("cubic_u1: dimension out of range");
    CubicForm u(n);
    for (int i = 0; i < n; ++i) u.add_monomial(i, i, i, Complex(1.0 / 6.0));
    return u;
}

CubicForm cubic_form_u1_eps(Complex eps) {
    CubicForm u = cubic_form_u1(3);
    u.add_monomial(0, 1, 2, eps);
    return u;
}

CubicForm cubic_form_u2() {
    CubicForm u(4);
    u.add_monomial(0, 2, 2, Complex(0.5));
    u.add_monomial(0, 3, 3, Complex(-0.5));
    u.add_monomial(1, 2, 3, Complex(0.0, 1.0));
    return u;
}

CubicForm cubic_form_circle(double k) {
    if (k == 0.0) throw InputError("cubic_circle: k must be nonzero");
    if (std::abs(4.0 * k * k - 2.0) < 1e-12) throw InputError("cubic_circle: 4k^2 = 2 is excluded");
    CubicForm u(3);
    u.add_monomial(0, 0, 2, Complex(0.5));
    u.add_monomial(1, 1, 2, Complex(0.5));
    u.add_monomial(2, 2, 2, Complex(-(4.0 * k * k - 2.0) / 6.0));
    return u;
}

Algebra cubic_u1(int n) {
    Algebra a = algebra_from_cubic(cubic_form_u1(n), InnerProduct::euclidean(n), "cubic_u1");
    return a;
}

CatalogEntry cubic_u1_entry(int n) {
    CatalogEntry e{"u1", {{"n", Complex(static_cast<double>(n))}}, cubic_u1(n), std::nullopt};
    CatalogExpected exp;
    exp.idempotent_count = 1 << n;
    exp.nilpotent_count = 0;
    exp.genericity = GenericityKind::generic;
    // One spectrum per cube vertex: {1^m, 0^(n-m)} with binomial counts.
    for (long mask = 1; mask < (1L << n); ++mask) {
        std::vector<Complex> spec;
        int m = 0;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) ++m;
        for (int i = 0; i < m; ++i) spec.emplace_back(1.0);
        for (int i = m; i < n; ++i) spec.emplace_back(0.0);
        exp.spectra.push_back(std::move(spec));
    }
    e.expected = std::move(exp);
    return e;
}

Algebra cubic_u1_eps(Complex eps) {
    return algebra_from_cubic(cubic_form_u1_eps(eps), InnerProduct::euclidean(3), "cubic_u1_eps");
}

CatalogEntry cubic_u1_eps_entry(Complex eps) {
    CatalogEntry e{"u1eps", {{"eps", eps}}, cubic_u1_eps(eps), std::nullopt};
    if (std::abs(eps - Complex(1.0)) < 1e-12) {
        CatalogExpected exp;
        exp.idempotent_count = 8;
        exp.nilpotent_count = 0;
        exp.genericity = GenericityKind::generic;
        exp.spectra.push_back(spectrum_list({0.0, 0.0, 1.0}));
        for (int i = 0; i < 3; ++i) exp.spectra.push_back(spectrum_list({0.0, -1.0, 1.0}));
        for (int i = 0; i < 3; ++i) exp.spectra.push_back(spectrum_list({-1.0, 1.0, 1.0}));
        e.expected = std::move(exp);
    }
    return e;
}

Algebra cubic_u2() {
    return algebra_from_cubic(cubic_form_u2(), InnerProduct::euclidean(4), "cubic_u2");
}

CatalogEntry cubic_u2_entry() {
    CatalogEntry e{"u2", {}, cubic_u2(), std::nullopt};
    CatalogExpected exp;
    // 9 idempotents in total (the zero one included; the published count of
    // nine "nonzero" ones includes it), and the constant nonzero spectrum
    // carries the conjugate pair (-1 +- i sqrt 7)/4 - the printed real values
    // contradict det L_c = -1/4.
    exp.idempotent_count = 9;
    exp.nilpotent_count = 1;
    exp.genericity = GenericityKind::nongeneric_nilpotent;
    const double r = std::sqrt(7.0) / 4.0;
    for (int i = 0; i < 8; ++i) {
        exp.spectra.push_back(spectrum_list({Complex(-0.25, -r), -0.5, Complex(-0.25, r), 1.0}));
    }
    e.expected = std::move(exp);
    return e;
}

Algebra cubic_circle(double k) {
    return algebra_from_cubic(cubic_form_circle(k), InnerProduct::euclidean(3), "cubic_circle");
}

CatalogEntry cubic_circle_entry(double k) {
    CatalogEntry e{"circle", {{"k", Complex(k)}}, cubic_circle(k), std::nullopt};
    CatalogExpected exp;
    exp.genericity = GenericityKind::nongeneric_infinite_family;
    exp.infinite_family = true;
    // Circle idempotents share {1, 1/2, 1/2 - 2k^2}; the isolated one is
    // (0, 0, -1/(4k^2-2)).
    exp.spectra.push_back(spectrum_list({1.0, 0.5, 0.5 - 2.0 * k * k}));
    const double c0 = -1.0 / (4.0 * k * k - 2.0);
    exp.spectra.push_back(spectrum_list({1.0, c0, c0}));
    e.expected = std::move(exp);
    return e;
}

const std::vector<CatalogDescriptor>& catalog_descriptors() {
    static const std::vector<CatalogDescriptor> descriptors = {
        {"matsuo", "Matsuo algebra 3C_alpha on three idempotents", {{"alpha", 0.3}}, false},
        {"gen-matsuo", "generalized Matsuo 3C_{alpha,eps}", {{"alpha", 0.3}, {"eps", 0.2}}, false},
        {"two-dim", "2D algebra with prescribed Peirce numbers", {{"lambda1", 0.0}, {"lambda2", 0.0}}, false},
        {"const2d", "2D algebra with constant spectrum {1,-1}", {}, false},
        {"const3d", "3D algebra with constant cube-roots-of-unity spectrum", {}, false},
        {"u1", "product algebra of the diagonal cubic", {{"n", 3}}, true},
        {"u1eps", "perturbed diagonal cubic eps*x1*x2*x3 + u1", {{"eps", 1.0}}, true},
        {"u2", "the 4D trace-free cubic with a nilpotent plane", {}, true},
        {"circle", "3D cubic with a circle of idempotents", {{"k", 0.5}}, true},
    };
    return descriptors;
}

namespace {

double param_or(const std::vector<std::pair<std::string, double>>& params, const std::string& key,
                double fallback, bool* found = nullptr) {
    for (const auto& [k, v] : params) {
        if (k == key) {
            if (found) *found = true;
            return v;
        }
    }
    return fallback;
}

void reject_unknown(const std::string& name,
                    const std::vector<std::pair<std::string, double>>& params,
                    std::initializer_list<const char*> known) {
    for (const auto& [k, v] : params) {
        (void)v;
        bool ok = false;
        for (const char* key : known) {
            if (k == key) ok = true;
        }
        if (!ok) throw InputError("catalog " + name + ": unknown parameter --" + k);
    }
}

}  // namespace

CatalogEntry catalog_build(const std::string& name,
                           const std::vector<std::pair<std::string, double>>& params) {
    if (name == "matsuo") {
        reject_unknown(name, params, {"alpha"});
        return matsuo_3c_entry(param_or(params, "alpha", 0.3));
    }
    if (name == "gen-matsuo") {
        reject_unknown(name, params, {"alpha", "eps"});
        return generalized_matsuo_entry(param_or(params, "alpha", 0.3), param_or(params, "eps", 0.2));
    }
    if (name == "two-dim") {
        reject_unknown(name, params, {"lambda1", "lambda2"});
        return two_dim_from_pair_entry(param_or(params, "lambda1", 0.0),
                                       param_or(params, "lambda2", 0.0));
    }
    if (name == "const2d") {
        reject_unknown(name, params, {});
        return constant_spectrum_2d_entry();
    }
    if (name == "const3d") {
        reject_unknown(name, params, {});
        return constant_spectrum_3d_entry();
    }
    if (name == "u1") {
        reject_unknown(name, params, {"n"});
        const double n = param_or(params, "n", 3.0);
        if (n != std::floor(n)) throw InputError("catalog u1: n must be an integer");
        return cubic_u1_entry(static_cast<int>(n));
    }
    if (name == "u1eps") {
        reject_unknown(name, params, {"eps"});
        return cubic_u1_eps_entry(param_or(params, "eps", 1.0));
    }
    if (name == "u2") {
        reject_unknown(name, params, {});
        return cubic_u2_entry();
    }
    if (name == "circle") {
        reject_unknown(name, params, {"k"});
        return cubic_circle_entry(param_or(params, "k", 0.5));
    }
    throw InputError("unknown catalog algebra: " + name);
}

CubicForm catalog_cubic(const std::string& name,
                        const std::vector<std::pair<std::string, double>>& params) {
    if (name == "u1") {
        reject_unknown(name, params, {"n"});
        const double n = param_or(params, "n", 3.0);
        if (n != std::floor(n)) throw InputError("catalog u1: n must be an integer");
        return cubic_form_u1(static_cast<int>(n));
    }
    if (name == "u1eps") {
        reject_unknown(name, params, {"eps"});
        return cubic_form_u1_eps(param_or(params, "eps", 1.0));
    }
    if (name == "u2") {
        reject_unknown(name, params, {});
        return cubic_form_u2();
    }
    if (name == "circle") {
        reject_unknown(name, params, {"k"});
        return cubic_form_circle(param_or(params, "k", 0.5));
    }
    throw InputError("catalog algebra " + name + " is not defined by a cubic form");
}

}  // namespace peirce
