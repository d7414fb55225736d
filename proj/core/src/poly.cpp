#include "peirce/poly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>

namespace peirce {

Complex poly_eval(const std::vector<Complex>& coeffs, Complex t) {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::vector<Complex> poly_derivative(const std::vector<Complex>& coeffs) {
    if (coeffs.size() <= 1) return {Complex(0.0)};
    std::vector<Complex> d(coeffs.size() - 1);
    for (size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = coeffs[k] * static_cast<double>(k);
    return d;
}

Complex poly_derivative_eval(const std::vector<Complex>& coeffs, int k, Complex t) {
    std::vector<Complex> d = coeffs;
    for (int i = 0; i < k; ++i) d = poly_derivative(d);
    return poly_eval(d, t);
}

std::vector<Complex> poly_deflate(const std::vector<Complex>& coeffs, Complex root,
                                  Complex* remainder) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    std::vector<Complex> q(std::max(deg, 1), Complex(0.0));
    Complex carry = coeffs[deg];
    for (int k = deg - 1; k >= 0; --k) {
        q[k] = carry;
        carry = coeffs[k] + carry * root;
    }
    if (remainder) *remainder = carry;
    return q;
}

std::vector<Complex> poly_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> out(a.size() + b.size() - 1, Complex(0.0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<Complex> poly_add(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> out(std::max(a.size(), b.size()), Complex(0.0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

std::vector<Complex> poly_scale(const std::vector<Complex>& a, Complex s) {
    std::vector<Complex> out = a;
    for (Complex& z : out) z *= s;
    return out;
}

namespace {

constexpr double kEps = 2.220446049250313e-16;

double coeff_scale(const std::vector<Complex>& p) {
    double m = 0.0;
    for (const Complex& z : p) m = std::max(m, std::abs(z));
    return std::max(m, 1.0);
}

/// Noise floor of |p^(j)| near z for backward-error validation.
double derivative_noise_floor(const std::vector<Complex>& p, int j, Complex z) {
    const int deg = static_cast<int>(p.size()) - 1;
    const double az = std::abs(z);
    double bound = 0.0;
    for (int k = j; k <= deg; ++k) {
        double fall = 1.0;
        for (int i = 0; i < j; ++i) fall *= static_cast<double>(k - i);
        bound += std::abs(p[k]) * fall * std::pow(az, k - j);
    }
    return 20.0 * deg * kEps * std::max(bound, 1.0);
}

/// Newton iteration on the (m-1)-th derivative; for an m-fold root of p this
/// is a simple root of p^(m-1) and converges quadratically.
Complex newton_on_derivative(const std::vector<Complex>& p, int m, Complex z) {
    std::vector<Complex> d = p;
    for (int i = 0; i + 1 < m; ++i) d = poly_derivative(d);
    const std::vector<Complex> dd = poly_derivative(d);
    for (int it = 0; it < 60; ++it) {
        const Complex f = poly_eval(d, z);
        const Complex fp = poly_eval(dd, z);
        if (fp == 0.0) break;
        const Complex step = f / fp;
        z -= step;
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
    }
    return z;
}

/// Accept z* as an m-fold root only if every lower derivative sits at its
/// rounding noise floor; prevents genuinely distinct close roots from being
/// merged.
bool validate_multiple_root(const std::vector<Complex>& p, int m, Complex z) {
    for (int j = 0; j < m; ++j) {
        if (std::abs(poly_derivative_eval(p, j, z)) > derivative_noise_floor(p, j, z)) return false;
    }
    return true;
}

std::vector<Complex> companion_eigenvalues(const std::vector<Complex>& monic) {
    const int deg = static_cast<int>(monic.size()) - 1;
    Mat comp = Mat::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -monic[i];
    Eigen::ComplexEigenSolver<Mat> es(comp, /*computeEigenvectors=*/false);
    std::vector<Complex> out(deg);
    for (int i = 0; i < deg; ++i) out[i] = es.eigenvalues()[i];
    return out;
}

/// Connected components under |z_i - z_j| <= radius (single linkage).
std::vector<std::vector<int>> link_clusters(const std::vector<Complex>& z, double radius) {
    const int n = static_cast<int>(z.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(z[i] - z[j]) <= radius) parent[find(i)] = find(j);
    std::vector<std::vector<int>> comps(n);
    for (int i = 0; i < n; ++i) comps[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& c : comps)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

}  // namespace

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
    // Normalize to monic; reject zero polynomials.
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && coeffs[deg] == 0.0) --deg;
    if (deg <= 0) {
        if (deg == 0 && coeffs[0] == 0.0) throw InputError("poly_roots: zero polynomial");
        return {};
    }
    std::vector<Complex> p(coeffs.begin(), coeffs.begin() + deg + 1);
    const Complex lead = p[deg];
    for (Complex& z : p) z /= lead;

    std::vector<Complex> roots;
    roots.reserve(deg);

    // Structural zero roots: deflate trailing coefficients at rounding level
    // exactly (handles p(t) = t^n without asking Aberth to crawl to 0).
    const double scale = coeff_scale(p);
    int zero_mult = 0;
    while (zero_mult < deg && std::abs(p[zero_mult]) <= 8 * deg * kEps * scale) ++zero_mult;
    if (zero_mult == deg) {
        return std::vector<Complex>(deg, Complex(0.0));
    }
    if (zero_mult > 0) {
        p.erase(p.begin(), p.begin() + zero_mult);
        roots.insert(roots.end(), zero_mult, Complex(0.0));
    }
    const int d = static_cast<int>(p.size()) - 1;
    if (d == 0) {
        std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) { return lex_less(a, b); });
        return roots;
    }

    // Aberth-Ehrlich from a circle of radius given by the Cauchy bound, with
    // an asymmetric phase so symmetric configurations do not lock.
    double radius = 0.0;
    for (int k = 0; k < d; ++k) radius = std::max(radius, std::abs(p[k]));
    radius = 1.0 + radius;
    std::vector<Complex> z(d);
    for (int i = 0; i < d; ++i) {
        const double theta = 2.0 * M_PI * i / d + 0.7 / d + 0.1;
        z[i] = radius * Complex(std::cos(theta), std::sin(theta));
    }
    const std::vector<Complex> dp = poly_derivative(p);
    bool stalled = true;
    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < d; ++i) {
            const Complex pv = poly_eval(p, z[i]);
            const Complex dv = poly_eval(dp, z[i]);
            Complex ratio;
            if (dv != 0.0) {
                ratio = pv / dv;
            } else {
                ratio = Complex(1e-3, 1e-3);
            }
            Complex repulsion = 0.0;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                const Complex diff = z[i] - z[j];
                if (diff != 0.0) repulsion += 1.0 / diff;
            }
            const Complex denom = 1.0 - ratio * repulsion;
            const Complex step = denom != 0.0 ? ratio / denom : ratio;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (worst < 1e-14) {
            stalled = false;
            break;
        }
    }
    if (stalled) {
        // Multiple roots keep Aberth at its linear-rate crawl; companion
        // eigenvalues give equally good raw approximations for the cluster
        // refinement below.
        z = companion_eigenvalues(p);
    }

    // Multiplicity-aware polishing: candidate clusters at a radius matched to
    // the attainable accuracy eps^(1/m) of an m-fold root, refined against
    // p^(m-1) and kept only when the backward error validates the merge.
    std::vector<bool> consumed(d, false);
    const double coef_norm = coeff_scale(p);
    for (int m = d; m >= 2; --m) {
        double rho = 100.0 * std::pow(std::pow(4.0, d) * kEps * coef_norm, 1.0 / m);
        rho = std::min(rho, 1e-3);
        std::vector<Complex> active;
        std::vector<int> index;
        for (int i = 0; i < d; ++i) {
            if (!consumed[i]) {
                active.push_back(z[i]);
                index.push_back(i);
            }
        }
        if (static_cast<int>(active.size()) < m) continue;
        for (const auto& comp : link_clusters(active, rho)) {
            if (static_cast<int>(comp.size()) < m) continue;
            Complex centroid = 0.0;
            for (int idx : comp) centroid += active[idx];
            centroid /= static_cast<double>(comp.size());
            const Complex refined = newton_on_derivative(p, m, centroid);
            if (!validate_multiple_root(p, m, refined)) continue;
            // Consume the m members nearest the refined root.
            std::vector<int> members(comp.begin(), comp.end());
            std::sort(members.begin(), members.end(), [&](int x, int y) {
                return std::abs(active[x] - refined) < std::abs(active[y] - refined);
            });
            for (int t = 0; t < m; ++t) {
                consumed[index[members[t]]] = true;
                roots.push_back(refined);
            }
        }
    }

    // Plain Newton polish for the simple leftovers.
    for (int i = 0; i < d; ++i) {
        if (consumed[i]) continue;
        Complex zi = z[i];
        for (int it = 0; it < 30; ++it) {
            const Complex pv = poly_eval(p, zi);
            const Complex dv = poly_eval(dp, zi);
            if (dv == 0.0) break;
            const Complex step = pv / dv;
            zi -= step;
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(zi))) break;
        }
        roots.push_back(zi);
    }

    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) { return lex_less(a, b); });
    return roots;
}

}  // namespace peirce
