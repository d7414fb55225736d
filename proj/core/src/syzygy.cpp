#include "peirce/syzygy.hpp"

#include <algorithm>
#include <cmath>

#include "peirce/poly.hpp"

namespace peirce {

namespace {

constexpr double kDenominatorFloor = 1e-12;

void require_generic_set(const IdempotentSet& s, const char* who) {
    const GenericityVerdict v = classify_genericity(s);
    if (v.kind != GenericityKind::generic) {
        throw InputError(std::string(who) + ": syzygies hold for generic algebras only (set is " +
                         to_string(v.kind) + ")");
    }
}

Complex half_value(const IdempotentRecord& rec, const char* who) {
    const Complex v = poly_eval(rec.charpoly.coeffs, Complex(0.5, 0.0));
    if (std::abs(v) < kDenominatorFloor) {
        throw InconsistencyError(std::string(who) +
                                 ": |p_c(1/2)| below 1e-12 for an idempotent of a generic set, "
                                 "contradicting regularity");
    }
    return v;
}

}  // namespace

int PolyMap::total_degree() const {
    int deg = 0;
    for (const Term& t : terms) {
        int d = 0;
        for (int e : t.exponents) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

Vec PolyMap::eval(const Vec& x) const {
    Vec out = Vec::Zero(ncomponents);
    for (const Term& t : terms) {
        Complex v = t.coeff;
        for (int i = 0; i < nvars; ++i) {
            for (int e = 0; e < t.exponents[i]; ++e) v *= x[i];
        }
        out[t.component] += v;
    }
    return out;
}

std::vector<Complex> default_syzygy_samples() {
    std::vector<Complex> samples;
    for (int j = 0; j < 20; ++j) {
        const double theta = 2.0 * M_PI * j / 20.0;
        samples.emplace_back(std::cos(theta), std::sin(theta));
    }
    samples.emplace_back(0.0, 0.0);
    samples.emplace_back(1.0, 0.0);
    samples.emplace_back(2.0, 0.0);
    samples.emplace_back(-1.0, 0.0);
    return samples;
}

double principal_syzygy(const IdempotentSet& s, const std::vector<Complex>& t_samples) {
    require_generic_set(s, "principal_syzygy");
    const double target = std::pow(2.0, s.algebra.dim());
    double worst = 0.0;
    for (const Complex& t : t_samples) {
        Complex sum = 0.0;
        for (const IdempotentRecord& rec : s.idempotents) {
            sum += poly_eval(rec.charpoly.coeffs, t) / half_value(rec, "principal_syzygy");
        }
        worst = std::max(worst, std::abs(sum - target));
    }
    return worst;
}

std::vector<double> derivative_syzygies(const IdempotentSet& s) {
    require_generic_set(s, "derivative_syzygies");
    const int n = s.algebra.dim();
    std::vector<double> out;
    for (int k = 1; k <= n; ++k) {
        Complex sum = 0.0;
        for (const IdempotentRecord& rec : s.idempotents) {
            sum += poly_derivative_eval(rec.charpoly.coeffs, k, Complex(0.5, 0.0)) /
                   half_value(rec, "derivative_syzygies");
        }
        out.push_back(std::abs(sum));
    }
    return out;
}

double vector_syzygy(const IdempotentSet& s) {
    require_generic_set(s, "vector_syzygy");
    Vec sum = Vec::Zero(s.algebra.dim());
    for (const IdempotentRecord& rec : s.idempotents) {
        if (rec.is_zero()) continue;
        sum += rec.point / half_value(rec, "vector_syzygy");
    }
    return sum.norm();
}

double general_syzygy(const IdempotentSet& s, const PolyMap& h) {
    require_generic_set(s, "general_syzygy");
    const int n = s.algebra.dim();
    if (h.nvars != n) throw InputError("general_syzygy: map variable count must equal dim");
    if (h.total_degree() > n - 1) {
        throw InputError("general_syzygy: componentwise total degree must be at most n-1");
    }
    Vec sum = Vec::Zero(h.ncomponents);
    for (const IdempotentRecord& rec : s.idempotents) {
        sum += h.eval(rec.point) / half_value(rec, "general_syzygy");
    }
    return sum.norm();
}

std::pair<double, double> idemm_syzygies(const IdempotentSet& s,
                                         const std::vector<Complex>& t_samples) {
    require_generic_set(s, "idemm_syzygies");
    const int n = s.algebra.dim();
    const double two_n = std::pow(2.0, n);

    // Deflated polynomials q_c = p_c / (t - 1); 1 must be a root of every
    // nonzero idempotent's characteristic polynomial.
    std::vector<std::vector<Complex>> deflated;
    std::vector<const IdempotentRecord*> nonzero;
    for (const IdempotentRecord& rec : s.idempotents) {
        if (rec.is_zero()) continue;
        Complex rem;
        std::vector<Complex> q = poly_deflate(rec.charpoly.coeffs, Complex(1.0, 0.0), &rem);
        double coeff_sum = 0.0;
        for (const Complex& c : rec.charpoly.coeffs) coeff_sum += std::abs(c);
        if (std::abs(rem) > 1e-7 * coeff_sum) {
            throw InconsistencyError(
                "idemm_syzygies: p_c(1) is not zero for a nonzero idempotent - 1 missing from the "
                "spectrum contradicts idempotency");
        }
        deflated.push_back(std::move(q));
        nonzero.push_back(&rec);
    }

    double first = 0.0;
    double second = 0.0;
    for (const Complex& t : t_samples) {
        Complex sum1 = 0.0;
        Complex sum2 = 0.0;
        for (size_t i = 0; i < nonzero.size(); ++i) {
            const Complex denom = half_value(*nonzero[i], "idemm_syzygies");
            sum1 += poly_eval(nonzero[i]->charpoly.coeffs, t) / denom;
            // q_c(1/2) = p_c(1/2) / (1/2 - 1) = -2 p_c(1/2)
            sum2 += poly_eval(deflated[i], t) / (denom * Complex(-2.0, 0.0));
        }
        Complex geom = 0.0;
        Complex tk = 1.0;
        for (int k = 0; k < n; ++k) {
            geom += tk;
            tk *= t;
        }
        const Complex tn = tk;
        first = std::max(first, std::abs(sum1 - two_n * (1.0 - tn)));
        second = std::max(second, std::abs(sum2 - (two_n / 2.0) * geom));
    }
    return {first, second};
}

std::pair<double, std::optional<double>> unital_syzygies(const IdempotentSet& s, const Vec& unit,
                                                         const std::vector<Complex>& s_samples) {
    require_generic_set(s, "unital_syzygies");
    const int n = s.algebra.dim();
    const double two_n = std::pow(2.0, n);
    const double pair_tol = 1e-6;

    // Partition Idm_0 into conjugate pairs {c, e-c}; the zero idempotent pairs
    // with the unit. One representative per pair, never the unit itself (its
    // pair is represented by zero).
    std::vector<const IdempotentRecord*> reps;
    std::vector<bool> used(s.idempotents.size(), false);
    auto is_unit = [&](const IdempotentRecord& rec) {
        return (rec.point - unit).norm() <= pair_tol * (1.0 + unit.norm());
    };
    for (size_t i = 0; i < s.idempotents.size(); ++i) {
        if (used[i]) continue;
        const Vec conj = unit - s.idempotents[i].point;
        bool paired = false;
        for (size_t j = 0; j < s.idempotents.size(); ++j) {
            if (j == i || used[j]) continue;
            if ((s.idempotents[j].point - conj).norm() <=
                pair_tol * (1.0 + conj.norm())) {
                used[i] = used[j] = true;
                reps.push_back(is_unit(s.idempotents[i]) ? &s.idempotents[j] : &s.idempotents[i]);
                paired = true;
                break;
            }
        }
        if (!paired) {
            throw InconsistencyError(
                "unital_syzygies: an idempotent has no conjugate partner e - c in the set");
        }
    }

    double p1 = 0.0;
    for (const Complex& sv : s_samples) {
        Complex sum = 0.0;
        for (const IdempotentRecord* rec : reps) {
            const Complex denom = half_value(*rec, "unital_syzygies");
            sum += (poly_eval(rec->charpoly.coeffs, Complex(0.5, 0.0) + sv) +
                    poly_eval(rec->charpoly.coeffs, Complex(0.5, 0.0) - sv)) /
                   denom;
        }
        p1 = std::max(p1, std::abs(sum - two_n));
    }

    std::optional<double> half41;
    if (n == 4) {
        // sigma(c) of each nontrivial representative is {0, 1, a, b}; strip
        // one 0 and one 1, sum 1/((1/2-a)(1/2-b)) over the 7 representatives.
        Complex sum = 0.0;
        int nontrivial = 0;
        for (const IdempotentRecord* rec : reps) {
            if (rec->is_zero()) continue;
            std::vector<Complex> vals = rec->spectrum.values();
            auto strip = [&vals](Complex v) {
                auto it = std::min_element(vals.begin(), vals.end(), [v](Complex a, Complex b) {
                    return std::abs(a - v) < std::abs(b - v);
                });
                vals.erase(it);
            };
            strip(Complex(0.0));
            strip(Complex(1.0));
            sum += 1.0 / ((Complex(0.5) - vals[0]) * (Complex(0.5) - vals[1]));
            ++nontrivial;
        }
        if (nontrivial != 7) {
            throw InconsistencyError("unital_syzygies: expected 7 nontrivial representatives at n=4");
        }
        half41 = std::abs(sum - Complex(4.0));
    }
    return {p1, half41};
}

Complex two_dim_syzygy(Complex l1, Complex l2, Complex l3) {
    return 4.0 * l1 * l2 * l3 - l1 - l2 - l3 + 1.0;
}

std::optional<Complex> two_dim_syzygy_reciprocal(Complex l1, Complex l2, Complex l3) {
    for (const Complex& l : {l1, l2, l3}) {
        if (std::abs(1.0 - 2.0 * l) < 1e-14) return std::nullopt;
    }
    return 1.0 / (1.0 - 2.0 * l1) + 1.0 / (1.0 - 2.0 * l2) + 1.0 / (1.0 - 2.0 * l3) - 1.0;
}

SyzygyReport verify_syzygies(const IdempotentSet& s, const std::vector<Complex>& t_samples) {
    SyzygyReport rep;
    rep.samples = t_samples;
    rep.principal_max_residual = principal_syzygy(s, t_samples);
    rep.derivative_residuals = derivative_syzygies(s);
    rep.vector_residual = vector_syzygy(s);
    std::tie(rep.idemm_max_residual, rep.idemm1_max_residual) = idemm_syzygies(s, t_samples);
    if (const auto unit = s.algebra.find_unit()) {
        auto [p1, half41] = unital_syzygies(s, *unit, t_samples);
        rep.unital = SyzygyReport::Unital{p1, half41};
    }
    return rep;
}

}  // namespace peirce
