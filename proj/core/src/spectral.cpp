#include "peirce/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "peirce/poly.hpp"
#include "peirce/solve.hpp"

namespace peirce {

int Spectrum::total_multiplicity() const {
    int total = 0;
    for (const Root& r : roots) total += r.multiplicity;
    return total;
}

std::vector<Complex> Spectrum::values() const {
    std::vector<Complex> out;
    for (const Root& r : roots) out.insert(out.end(), r.multiplicity, r.value);
    return out;
}

bool Spectrum::contains(Complex v, double tol) const {
    for (const Root& r : roots) {
        if (std::abs(r.value - v) <= tol) return true;
    }
    return false;
}

const char* to_string(GenericityKind k) {
    switch (k) {
        case GenericityKind::generic: return "generic";
        case GenericityKind::nongeneric_half_in_spectrum: return "nongeneric_half_in_spectrum";
        case GenericityKind::nongeneric_nilpotent: return "nongeneric_nilpotent";
        case GenericityKind::nongeneric_infinite_family: return "nongeneric_infinite_family";
        case GenericityKind::undetermined: return "undetermined";
    }
    return "undetermined";
}

namespace {

Spectrum cluster_roots(const std::vector<Complex>& roots, double cluster_tol) {
    // Union-find on pairwise distance, representative = cluster mean.
    const int n = static_cast<int>(roots.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    double scale = 0.0;
    for (const Complex& z : roots) scale = std::max(scale, std::abs(z));
    const double tol = cluster_tol * std::max(1.0, scale);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(roots[i] - roots[j]) <= tol) parent[find(i)] = find(j);
    std::vector<Complex> sum(n, Complex(0.0));
    std::vector<int> count(n, 0);
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        sum[r] += roots[i];
        count[r] += 1;
    }
    Spectrum spec;
    for (int i = 0; i < n; ++i) {
        if (count[i] == 0) continue;
        spec.roots.push_back({sum[i] / static_cast<double>(count[i]), count[i]});
    }
    std::sort(spec.roots.begin(), spec.roots.end(),
              [](const Spectrum::Root& a, const Spectrum::Root& b) { return lex_less(a.value, b.value); });
    return spec;
}

std::string format_complex(Complex z) {
    std::ostringstream ss;
    ss.precision(6);
    if (std::abs(z.imag()) < 1e-12) {
        ss << z.real();
    } else {
        ss << z.real() << (z.imag() >= 0 ? "+" : "") << z.imag() << "i";
    }
    return ss.str();
}

}  // namespace

Spectrum spectrum_of(const Algebra& a, const Vec& x, double cluster_tol) {
    const CharPoly p = a.char_poly(x);
    return cluster_roots(poly_roots(p.coeffs), cluster_tol);
}

std::pair<std::vector<std::pair<Complex, int>>, bool> peirce_data(const Algebra& a, const Vec& c,
                                                                  const Spectrum& spectrum,
                                                                  double cluster_tol) {
    (void)cluster_tol;
    const Mat l = a.left_mult_matrix(c);
    const int n = a.dim();
    std::vector<std::pair<Complex, int>> dims;
    int total = 0;
    for (const Spectrum::Root& r : spectrum.roots) {
        Mat shifted = l - r.value * Mat::Identity(n, n);
        Eigen::JacobiSVD<Mat> svd(shifted);
        const auto& sv = svd.singularValues();
        // The shifted matrix can vanish entirely (L_e - I at a unit), so the
        // threshold carries a floor at the scale of L_c and the eigenvalue.
        const double scale = std::max(sv.maxCoeff(), 1.0 + std::abs(r.value));
        const double rank_tol = kRankTolFactor * scale;
        int kernel = 0;
        for (int i = 0; i < sv.size(); ++i) {
            if (sv[i] <= rank_tol) ++kernel;
        }
        dims.emplace_back(r.value, kernel);
        total += kernel;
    }
    return {dims, total == n};
}

IdempotentRecord make_idempotent_record(const Algebra& a, const Vec& point,
                                        double jacobian_min_sv, int multiplicity_estimate,
                                        double cluster_tol) {
    IdempotentRecord rec;
    rec.point = point;
    rec.residual = (a.square(point) - point).norm();
    rec.charpoly = a.char_poly(point);
    rec.spectrum = cluster_roots(poly_roots(rec.charpoly.coeffs), cluster_tol);
    auto [dims, semisimple] = peirce_data(a, point, rec.spectrum, cluster_tol);
    rec.peirce_dims = std::move(dims);
    rec.semisimple = semisimple;
    rec.regular = !rec.spectrum.contains(Complex(0.5, 0.0), cluster_tol);
    double max_imag = 0.0;
    double max_abs = 0.0;
    for (int i = 0; i < point.size(); ++i) {
        max_imag = std::max(max_imag, std::abs(point[i].imag()));
        max_abs = std::max(max_abs, std::abs(point[i]));
    }
    rec.is_real = max_imag < 1e-8 * (1.0 + max_abs);
    rec.jacobian_min_singular_value = jacobian_min_sv;
    rec.multiplicity_estimate = multiplicity_estimate;
    return rec;
}

GenericityVerdict classify_genericity(const IdempotentSet& s, double cluster_tol) {
    const int n = s.algebra.dim();
    const long expected = 1L << n;
    std::ostringstream ev;
    ev << s.idempotents.size() << " idempotents of " << expected << " possible, "
       << s.nilpotent_directions.size() << " nilpotent directions, " << s.paths_failed
       << " failed paths";

    std::vector<Complex> half_values;
    double half_dist = 1e300;
    for (const IdempotentRecord& rec : s.idempotents) {
        for (const Spectrum::Root& r : rec.spectrum.roots) {
            const double dist = std::abs(r.value - Complex(0.5, 0.0));
            half_dist = std::min(half_dist, dist);
            if (dist <= cluster_tol) half_values.push_back(r.value);
        }
    }

    GenericityVerdict v;
    if (!s.exhaustive) {
        v.kind = GenericityKind::undetermined;
        ev << "; not exhaustive, the global count cannot be certified";
        v.evidence = ev.str();
        return v;
    }
    if (s.has_infinite_family) {
        v.kind = GenericityKind::nongeneric_infinite_family;
        ev << "; singular endpoints whose null-direction walks land on distinct nearby solutions "
              "witness a positive-dimensional family";
        v.evidence = ev.str();
        return v;
    }
    if (!s.nilpotent_directions.empty()) {
        v.kind = GenericityKind::nongeneric_nilpotent;
        ev << "; nonzero 2-nilpotents present";
        v.evidence = ev.str();
        return v;
    }
    if (static_cast<long>(s.idempotents.size()) == expected) {
        if (!half_values.empty()) {
            v.kind = GenericityKind::undetermined;
            ev << "; inconsistency: full count 2^n yet 1/2 appears in a Peirce spectrum (";
            for (const Complex& z : half_values) ev << format_complex(z) << " ";
            ev << ")";
            v.evidence = ev.str();
            return v;
        }
        v.kind = GenericityKind::generic;
        ev << "; distance from 1/2 to the nearest Peirce number: " << half_dist;
        v.evidence = ev.str();
        return v;
    }
    if (!half_values.empty()) {
        v.kind = GenericityKind::nongeneric_half_in_spectrum;
        ev << "; offending eigenvalue(s) near 1/2:";
        for (const Complex& z : half_values) ev << ' ' << format_complex(z);
        v.evidence = ev.str();
        return v;
    }
    v.kind = GenericityKind::undetermined;
    ev << "; count below 2^n without nilpotents, family, or 1/2 in a spectrum - inconsistent with "
          "the genericity dichotomy";
    v.evidence = ev.str();
    return v;
}

std::vector<Complex> algebra_spectrum(const IdempotentSet& s, double cluster_tol) {
    std::vector<Complex> all;
    for (const IdempotentRecord& rec : s.idempotents) {
        if (rec.is_zero()) continue;
        for (const Spectrum::Root& r : rec.spectrum.roots) all.push_back(r.value);
    }
    const Spectrum clustered = cluster_roots(all, cluster_tol);
    std::vector<Complex> out;
    for (const Spectrum::Root& r : clustered.roots) out.push_back(r.value);
    return out;
}

namespace {

/// Multiset match of two spectra within tol.
bool same_multiset(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const Complex& x : a) {
        bool matched = false;
        for (size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && std::abs(x - b[j]) <= tol) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

void require_generic(const IdempotentSet& s, double cluster_tol, const char* who) {
    const GenericityVerdict v = classify_genericity(s, cluster_tol);
    if (v.kind != GenericityKind::generic) {
        throw InputError(std::string(who) + ": the idempotent set is not generic (" +
                         to_string(v.kind) + ")");
    }
}

}  // namespace

ConstantSpectrumReport constant_spectrum_check(const IdempotentSet& s, double cluster_tol) {
    require_generic(s, cluster_tol, "constant_spectrum_check");
    ConstantSpectrumReport rep;
    std::vector<std::vector<Complex>> spectra;
    for (const IdempotentRecord& rec : s.idempotents) {
        if (rec.is_zero()) continue;
        spectra.push_back(rec.spectrum.values());
    }
    if (spectra.empty()) {
        rep.report = "no nonzero idempotents";
        return rep;
    }
    rep.constant = true;
    for (size_t i = 1; i < spectra.size(); ++i) {
        if (!same_multiset(spectra[0], spectra[i], cluster_tol)) {
            rep.constant = false;
            break;
        }
    }
    if (!rep.constant) {
        rep.report = "spectra differ between idempotents";
        return rep;
    }
    // A constant spectrum in a generic algebra must be exactly the n-th roots
    // of unity.
    const int n = s.algebra.dim();
    std::vector<Complex> expected;
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * M_PI * k / n;
        expected.emplace_back(std::cos(theta), std::sin(theta));
    }
    rep.roots_of_unity_ok = same_multiset(spectra[0], expected, 1e-8);
    std::ostringstream ss;
    ss << "constant spectrum {";
    for (const Complex& z : spectra[0]) ss << ' ' << format_complex(z);
    ss << " }";
    if (!rep.roots_of_unity_ok) {
        rep.inconsistency = true;
        ss << "; INCONSISTENT: not the n-th roots of unity";
    } else {
        ss << " = the " << n << "-th roots of unity";
    }
    rep.report = ss.str();
    return rep;
}

CommonEigenvalueReport common_eigenvalue_check(const IdempotentSet& s, double cluster_tol) {
    require_generic(s, cluster_tol, "common_eigenvalue_check");
    CommonEigenvalueReport rep;
    std::vector<std::vector<Complex>> spectra;
    for (const IdempotentRecord& rec : s.idempotents) {
        if (rec.is_zero()) continue;
        spectra.push_back(rec.spectrum.values());
    }
    if (spectra.empty()) {
        rep.verified = true;
        rep.report = "no nonzero idempotents";
        return rep;
    }
    // Candidates from the first spectrum, kept when present in all others;
    // the trivial common value 1 is uninformative and excluded.
    std::vector<Complex> candidates;
    for (const Complex& z : spectra[0]) {
        if (std::abs(z - 1.0) <= cluster_tol) continue;
        bool fresh = true;
        for (const Complex& c : candidates) {
            if (std::abs(z - c) <= cluster_tol) fresh = false;
        }
        if (fresh) candidates.push_back(z);
    }
    for (const Complex& cand : candidates) {
        bool common = true;
        for (size_t i = 1; i < spectra.size(); ++i) {
            bool found = false;
            for (const Complex& z : spectra[i]) {
                if (std::abs(z - cand) <= cluster_tol) found = true;
            }
            if (!found) {
                common = false;
                break;
            }
        }
        if (common) rep.common.push_back(cand);
    }
    rep.verified = true;
    const int n = s.algebra.dim();
    std::ostringstream ss;
    if (rep.common.empty()) {
        ss << "no common eigenvalue besides the trivial 1";
    } else {
        ss << "common eigenvalues:";
        for (const Complex& z : rep.common) {
            Complex pw = 1.0;
            for (int i = 0; i < n; ++i) pw *= z;
            const double err = std::abs(pw - 1.0);
            ss << ' ' << format_complex(z) << " (|a^n - 1| = " << err << ")";
            if (err > 1e-8) {
                rep.verified = false;
                rep.inconsistency = true;
            }
        }
        if (rep.inconsistency) ss << "; INCONSISTENT with alpha^n = 1";
    }
    rep.report = ss.str();
    return rep;
}

}  // namespace peirce
