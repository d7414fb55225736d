#pragma once

#include <optional>
#include <vector>

#include "peirce/solve.hpp"
#include "peirce/types.hpp"

namespace peirce {

/// Sparse polynomial map C^n -> C^s given as monomial terms; used for the
/// general vector syzygy.
struct PolyMap {
    struct Term {
        int component;              // 0..s-1
        std::vector<int> exponents; // size n
        Complex coeff;
    };
    int nvars = 0;
    int ncomponents = 1;
    std::vector<Term> terms;

    int total_degree() const;
    Vec eval(const Vec& x) const;
};

/// Default evaluation samples: 20 points on the unit circle plus {0, 1, 2, -1}.
std::vector<Complex> default_syzygy_samples();

struct SyzygyReport {
    double principal_max_residual = 0.0;
    std::vector<double> derivative_residuals;  // k = 1..n
    double vector_residual = 0.0;
    double idemm_max_residual = 0.0;
    double idemm1_max_residual = 0.0;
    struct Unital {
        double p1_max_residual = 0.0;
        std::optional<double> half41_residual;  // n = 4 only
    };
    std::optional<Unital> unital;
    std::vector<Complex> samples;
};

/// max_t |sum_{c in Idm_0} p_c(t)/p_c(1/2) - 2^n| over the samples.
double principal_syzygy(const IdempotentSet& s, const std::vector<Complex>& t_samples);

/// |sum_{c in Idm_0} p_c^(k)(1/2)/p_c(1/2)| for k = 1..n, from exact
/// polynomial differentiation of the characteristic coefficients.
std::vector<double> derivative_syzygies(const IdempotentSet& s);

/// Euclidean norm of sum_{c != 0} x_c / p_c(1/2).
double vector_syzygy(const IdempotentSet& s);

/// Norm of sum_{c in Idm_0} H(x_c)/p_c(1/2) for any polynomial map with
/// componentwise total degree <= n-1.
double general_syzygy(const IdempotentSet& s, const PolyMap& h);

/// Residuals of the two reduced identities: sum over nonzero idempotents of
/// p_c(t)/p_c(1/2) against 2^n (1 - t^n), and of q_c(t)/q_c(1/2) against
/// 2^(n-1) (1 + t + ... + t^(n-1)) with q_c = p_c / (t - 1) by exact
/// synthetic division.
std::pair<double, double> idemm_syzygies(const IdempotentSet& s,
                                         const std::vector<Complex>& t_samples);

/// Conjugate-pair syzygies of a unital generic algebra: the even-polynomial
/// identity over one representative per pair {c, e-c}, and for n = 4 the
/// single nontrivial eigenvalue syzygy sum 1/((1/2-a_i)(1/2-b_i)) = 4.
std::pair<double, std::optional<double>> unital_syzygies(const IdempotentSet& s, const Vec& unit,
                                                         const std::vector<Complex>& s_samples);

/// Value of 4 l1 l2 l3 - l1 - l2 - l3 + 1 (zero for the Peirce numbers of the
/// three nonzero idempotents of a generic 2D algebra).
Complex two_dim_syzygy(Complex l1, Complex l2, Complex l3);

/// Companion form 1/(1-2 l1) + 1/(1-2 l2) + 1/(1-2 l3) - 1; nullopt flags the
/// pole at l_i = 1/2.
std::optional<Complex> two_dim_syzygy_reciprocal(Complex l1, Complex l2, Complex l3);

/// Convenience: the full report (unital parts filled in when a unit exists).
SyzygyReport verify_syzygies(const IdempotentSet& s,
                             const std::vector<Complex>& t_samples = default_syzygy_samples());

}  // namespace peirce
