#pragma once

#include <string>
#include <utility>
#include <vector>

#include "peirce/algebra.hpp"
#include "peirce/types.hpp"

namespace peirce {

struct IdempotentSet;  // polysolve owns this type (solve.hpp)

constexpr double kClusterTol = 1e-6;
constexpr double kRankTolFactor = 1e-8;  // times the largest singular value

/// Peirce spectrum: clustered roots of the characteristic polynomial with
/// multiplicities summing to n. Sorted lexicographically by value.
struct Spectrum {
    struct Root {
        Complex value;
        int multiplicity;
    };
    std::vector<Root> roots;

    int total_multiplicity() const;
    /// Multiset of values, multiple roots repeated, sorted.
    std::vector<Complex> values() const;
    bool contains(Complex v, double tol = kClusterTol) const;
};

/// One refined solution point with all of its spectral data attached.
struct IdempotentRecord {
    Vec point;
    double residual = 0.0;               // |c^2 - c|
    CharPoly charpoly;
    Spectrum spectrum;
    std::vector<std::pair<Complex, int>> peirce_dims;  // (eigenvalue, dim ker(L_c - lambda I))
    bool semisimple = false;
    bool regular = false;                // 1/2 not in spectrum within cluster_tol
    bool is_real = false;
    double jacobian_min_singular_value = 0.0;  // sigma_min(2 L_c - I)
    int multiplicity_estimate = 1;       // path-endpoint cluster size
    bool extremal = false;               // set by the metrised extremal search

    bool is_zero(double tol = 1e-8) const { return point.norm() < tol; }
};

enum class GenericityKind {
    generic,
    nongeneric_half_in_spectrum,
    nongeneric_nilpotent,
    nongeneric_infinite_family,
    undetermined,
};

const char* to_string(GenericityKind k);

struct GenericityVerdict {
    GenericityKind kind = GenericityKind::undetermined;
    std::string evidence;
};

/// Peirce spectrum of an arbitrary element: roots of char_poly(A, x) via the
/// Aberth-Ehrlich pipeline, clustered at cluster_tol.
Spectrum spectrum_of(const Algebra& a, const Vec& x, double cluster_tol = kClusterTol);

/// Peirce dimensions n_c(lambda) = dim ker(L_c - lambda I) by SVD rank
/// thresholding, plus the semisimplicity flag (dimensions sum to n).
std::pair<std::vector<std::pair<Complex, int>>, bool> peirce_data(const Algebra& a, const Vec& c,
                                                                  const Spectrum& spectrum,
                                                                  double cluster_tol = kClusterTol);

/// Assemble the full record for a refined solution point.
IdempotentRecord make_idempotent_record(const Algebra& a, const Vec& point,
                                        double jacobian_min_sv, int multiplicity_estimate,
                                        double cluster_tol = kClusterTol);

/// Generic means the complexification carries the full Bezout count of 2^n
/// distinct idempotents; equivalently, no 2-nilpotents and no eigenvalue 1/2.
/// Requires solver exhaustiveness; failed paths force `undetermined`.
/// Non-generic kinds are assigned in the order: infinite family, nilpotent,
/// 1/2-in-spectrum.
GenericityVerdict classify_genericity(const IdempotentSet& s, double cluster_tol = kClusterTol);

/// Distinct Peirce numbers over all nonzero idempotents.
std::vector<Complex> algebra_spectrum(const IdempotentSet& s, double cluster_tol = kClusterTol);

struct ConstantSpectrumReport {
    bool constant = false;
    bool roots_of_unity_ok = false;  // meaningful only when constant
    std::string report;
    bool inconsistency = false;      // constant spectrum that is not the roots of unity
};

/// Do all nonzero idempotents share one spectrum? When they do, the shared
/// spectrum must be exactly the n-th roots of unity; any violation is
/// reported as a theory inconsistency. Precondition: the set is generic.
ConstantSpectrumReport constant_spectrum_check(const IdempotentSet& s,
                                               double cluster_tol = kClusterTol);

struct CommonEigenvalueReport {
    std::vector<Complex> common;     // common eigenvalues, the trivial 1 excluded
    bool verified = false;           // every common alpha satisfies alpha^n = 1
    std::string report;
    bool inconsistency = false;
};

/// Eigenvalues present in every nonzero idempotent's spectrum; in a generic
/// algebra any such value off the trivial 1 must be an n-th root of unity.
/// Precondition: generic.
CommonEigenvalueReport common_eigenvalue_check(const IdempotentSet& s,
                                               double cluster_tol = kClusterTol);

}  // namespace peirce
