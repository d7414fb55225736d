#pragma once

#include <cstdint>
#include <vector>

#include "peirce/algebra.hpp"
#include "peirce/spectral.hpp"
#include "peirce/types.hpp"

namespace peirce {

/// Knobs of the homotopy solver. The seed drives the gamma-trick constant,
/// the nilpotent chart, and the perturbed restarts used to detect infinite
/// families; identical seeds give bit-identical output.
struct SolveConfig {
    std::uint64_t seed = 0;
    double track_tol = 1e-10;
    double ds_init = 0.05;
    double ds_min = 1e-6;
    double ds_max = 0.2;
    double divergence_norm = 1e8;
    double dedup_tol = 1e-6;
    double refine_tol = 1e-12;
    int max_newton = 50;
    double cluster_tol = kClusterTol;  // forwarded to the spectral record builder

    void validate() const;
};

enum class PathStatus { converged, at_infinity, failed };

const char* to_string(PathStatus s);

struct PathEndpoint {
    PathStatus status = PathStatus::failed;
    Vec point;
    double residual = 0.0;
    double jacobian_min_singular_value = 0.0;
};

/// Full solver output: every idempotent of A_C (zero included), the
/// 2-nilpotent directions, and the path accounting.
struct IdempotentSet {
    Algebra algebra;
    std::vector<IdempotentRecord> idempotents;
    std::vector<Vec> nilpotent_directions;  // unit-norm projective representatives
    int paths_total = 0;                    // 2^n
    int paths_failed = 0;
    int paths_at_infinity = 0;
    bool exhaustive = false;                // no failed paths
    bool has_infinite_family = false;

    int nonzero_count() const;
    const IdempotentRecord* zero_record() const;
    const IdempotentRecord& record_nearest(const Vec& p) const;
};

/// All solutions of x^2 - x = 0 by total-degree homotopy continuation from
/// gamma * (x_i^2 - 1) with 2^n start points, Euler predictor + Newton
/// corrector with adaptive step, Newton endpoint refinement, lexicographic
/// deduplication, and endpoint classification. Diverging paths are classified
/// at_infinity and the 2-nilpotent directions recovered by the separate
/// homogeneous solve.
IdempotentSet solve_idempotents(const Algebra& a, const SolveConfig& cfg = {});

/// Newton iteration on f_A(x) = x^2 - x (Jacobian 2 L_x - I) until the
/// residual drops below refine_tol * (1 + |x|) or max_newton is hit.
PathEndpoint newton_refine(const Algebra& a, const Vec& x, const SolveConfig& cfg = {});

/// Unit-normalized distinct 2-nilpotent directions from the homogeneous
/// system x^2 = 0 solved on a random affine chart <a,x> = 1. A detected
/// positive-dimensional family is collapsed to a single witness direction.
std::vector<Vec> detect_nilpotents(const Algebra& a, const SolveConfig& cfg = {});

/// Closed-form enumeration of all idempotents and nilpotent directions of a
/// two-dimensional algebra (resultant elimination after a seeded random basis
/// change; the trichotomy of Prop pro:nil realized without continuation).
/// Independent oracle for the homotopy solver at n = 2.
IdempotentSet solve_2d_closed_form(const Algebra& a);

}  // namespace peirce
