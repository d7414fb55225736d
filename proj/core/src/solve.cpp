#include "peirce/solve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Dense>

#include "peirce/poly.hpp"

namespace peirce {

namespace {

constexpr std::uint64_t kGammaStream = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kFamilyStream = 0xbf58476d1ce4e5b9ULL;
constexpr std::uint64_t kChartStream = 0x94d049bb133111ebULL;
constexpr double kSingularSv = 1e-8;
constexpr double kEndgameStages[] = {0.95, 0.99, 0.999, 0.9999, 0.99999, 0.999999, 0.9999999};
constexpr int kMaxTrackSteps = 20000;
// Acceptance radius for the endgame: the refined point must lie this close
// (relative) to the tracked point, else the Newton jump left the path's cone.
constexpr double kEndgameLocality = 0.25;

double rel_dist(const Vec& a, const Vec& b) {
    return (a - b).norm() / (1.0 + std::max(a.norm(), b.norm()));
}

/// Minimal-norm Newton step; near-singular Jacobian directions below the
/// threshold are dropped so the iteration lands on positive-dimensional
/// solution sets instead of blowing up along them.
Vec min_norm_solve(const Mat& j, const Vec& rhs) {
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(j);
    cod.setThreshold(1e-14);
    return cod.solve(rhs);
}

double min_singular_value(const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues().minCoeff();
}

/// Square polynomial system with known total-degree start system; the two
/// instances are the idempotent system f_A and the charted nilpotent system.
struct TrackedSystem {
    std::function<Vec(const Vec&)> target;        // F(x)
    std::function<Mat(const Vec&)> target_jac;    // DF(x)
    std::function<Vec(const Vec&)> start;         // G(x)
    std::function<Mat(const Vec&)> start_jac;     // DG(x)
    int dim;
};

Vec homotopy_value(const TrackedSystem& sys, Complex gamma, const Vec& x, double s) {
    return (1.0 - s) * gamma * sys.start(x) + s * sys.target(x);
}

Mat homotopy_jac(const TrackedSystem& sys, Complex gamma, const Vec& x, double s) {
    return (1.0 - s) * gamma * sys.start_jac(x) + s * sys.target_jac(x);
}

Vec homotopy_ds(const TrackedSystem& sys, Complex gamma, const Vec& x) {
    return sys.target(x) - gamma * sys.start(x);
}

enum class TrackOutcome { reached, diverged, stalled };

/// Euler predictor + Newton corrector with adaptive step from s to s_stop.
TrackOutcome track_to(const TrackedSystem& sys, Complex gamma, const SolveConfig& cfg, Vec& x,
                      double& s, double s_stop) {
    double ds = std::min(cfg.ds_init, s_stop - s);
    int streak = 0;
    int steps = 0;
    while (s < s_stop - 1e-14) {
        if (++steps > kMaxTrackSteps) return TrackOutcome::stalled;
        ds = std::min(ds, s_stop - s);
        const double s_next = s + ds;

        Eigen::PartialPivLU<Mat> lu(homotopy_jac(sys, gamma, x, s));
        Vec x_pred = x - ds * lu.solve(homotopy_ds(sys, gamma, x));

        bool corrected = false;
        Vec x_corr = x_pred;
        for (int it = 0; it < 4; ++it) {
            const Vec h = homotopy_value(sys, gamma, x_corr, s_next);
            if (h.norm() < cfg.track_tol * (1.0 + x_corr.norm())) {
                corrected = true;
                break;
            }
            Eigen::PartialPivLU<Mat> lu2(homotopy_jac(sys, gamma, x_corr, s_next));
            const Vec dx = lu2.solve(h);
            if (!dx.allFinite()) break;
            x_corr -= dx;
        }
        if (corrected && homotopy_value(sys, gamma, x_corr, s_next).norm() <
                             cfg.track_tol * (1.0 + x_corr.norm())) {
            x = x_corr;
            s = s_next;
            if (++streak >= 4) {
                ds = std::min(ds * 1.5, cfg.ds_max);
                streak = 0;
            }
            if (x.norm() > cfg.divergence_norm) return TrackOutcome::diverged;
        } else {
            streak = 0;
            ds *= 0.5;
            // Absolute floor, relaxed near s = 1 where legitimate steps are a
            // fraction of the remaining interval.
            if (ds < cfg.ds_min && ds < 0.01 * (1.0 - s)) return TrackOutcome::stalled;
        }
    }
    return TrackOutcome::reached;
}

/// Newton refinement for a general tracked target (shared by the idempotent
/// and charted nilpotent systems). Iterates past the residual criterion until
/// the step stagnates: on a singular solution set the residual goes
/// quadratically in the distance, and stopping at the residual tolerance
/// alone would leave the point ~sqrt(tol) off the set.
PathEndpoint refine_target(const TrackedSystem& sys, const SolveConfig& cfg, Vec x) {
    PathEndpoint ep;
    double res = sys.target(x).norm();
    for (int it = 0; it < cfg.max_newton; ++it) {
        Vec dx = min_norm_solve(sys.target_jac(x), sys.target(x));
        if (!dx.allFinite()) break;
        const double cap = 0.5 * (1.0 + x.norm());
        if (dx.norm() > cap) dx *= cap / dx.norm();
        x -= dx;
        if (x.norm() > cfg.divergence_norm) break;
        res = sys.target(x).norm();
        if (res < cfg.refine_tol * (1.0 + x.norm()) && dx.norm() < 1e-13 * (1.0 + x.norm())) break;
    }
    ep.point = x;
    ep.residual = res;
    ep.jacobian_min_singular_value = min_singular_value(sys.target_jac(x));
    ep.status = (res < cfg.refine_tol * (1.0 + x.norm())) ? PathStatus::converged : PathStatus::failed;
    return ep;
}

/// Track one path all the way: the endgame switches to Newton on the target
/// at s = 0.95, accepting the refined point only if it stays local to the
/// tracked point; paths that keep jumping are tracked deeper, and sustained
/// norm growth past the last stage classifies the path as at infinity.
PathEndpoint run_path(const TrackedSystem& sys, Complex gamma, const SolveConfig& cfg,
                      const Vec& start_point) {
    Vec x = start_point;
    double s = 0.0;
    double first_norm = -1.0;
    // A regular endpoint is accepted only when two consecutive stages refine
    // to the same point: a single Newton jump at s = 0.95 can land in a
    // neighboring solution's basin and would silently merge two paths.
    // Singular endpoints (positive-dimensional families, multiple roots) are
    // taken on first contact; stage-to-stage agreement cannot be expected
    // while the tracked point still creeps along the solution set.
    Vec pending;
    bool has_pending = false;
    for (const double stage : kEndgameStages) {
        const TrackOutcome out = track_to(sys, gamma, cfg, x, s, stage);
        if (out == TrackOutcome::diverged) {
            PathEndpoint ep;
            ep.status = PathStatus::at_infinity;
            ep.point = x;
            ep.residual = sys.target(x).norm();
            return ep;
        }
        if (out == TrackOutcome::stalled) break;
        if (first_norm < 0.0) first_norm = x.norm();
        const PathEndpoint ep = refine_target(sys, cfg, x);
        if (ep.status == PathStatus::converged &&
            (ep.point - x).norm() <= kEndgameLocality * (1.0 + x.norm())) {
            if (ep.jacobian_min_singular_value < kSingularSv) return ep;
            if (has_pending &&
                (ep.point - pending).norm() <= cfg.dedup_tol * (1.0 + ep.point.norm())) {
                return ep;
            }
            pending = ep.point;
            has_pending = true;
        } else {
            has_pending = false;
        }
    }
    // Deep-stage endpoint: accept within a tight radius only (the path sits
    // within ~1e-6 of its solution here, so a distant basin jump is a lie).
    const PathEndpoint ep = refine_target(sys, cfg, x);
    if (ep.status == PathStatus::converged &&
        (ep.point - x).norm() <= 1e-2 * (1.0 + x.norm())) {
        return ep;
    }
    // No finite solution near the deep-tracked point; sustained norm growth
    // across the endgame stages is the signature of a path to infinity.
    PathEndpoint out_ep = ep;
    const double growth = first_norm > 0.0 ? x.norm() / std::max(first_norm, 1e-8) : 0.0;
    if (x.norm() > 1e4 || (x.norm() > 30.0 && growth > 10.0)) {
        out_ep.status = PathStatus::at_infinity;
        out_ep.point = x;
    } else {
        out_ep.status = PathStatus::failed;
    }
    return out_ep;
}

TrackedSystem idempotent_system(const Algebra& a) {
    const int n = a.dim();
    TrackedSystem sys;
    sys.dim = n;
    sys.target = [&a](const Vec& x) { return (a.square(x) - x).eval(); };
    sys.target_jac = [&a, n](const Vec& x) {
        return (2.0 * a.left_mult_matrix(x) - Mat::Identity(n, n)).eval();
    };
    sys.start = [n](const Vec& x) {
        Vec g(n);
        for (int i = 0; i < n; ++i) g[i] = x[i] * x[i] - 1.0;
        return g;
    };
    sys.start_jac = [n](const Vec& x) {
        Mat j = Mat::Zero(n, n);
        for (int i = 0; i < n; ++i) j(i, i) = 2.0 * x[i];
        return j;
    };
    return sys;
}

struct Cluster {
    Vec representative;
    double best_residual;
    double min_sv;
    int size;
};

std::vector<Cluster> dedup_endpoints(std::vector<PathEndpoint> finite, double dedup_tol) {
    std::sort(finite.begin(), finite.end(),
              [](const PathEndpoint& a, const PathEndpoint& b) { return lex_less(a.point, b.point); });
    const int m = static_cast<int>(finite.size());
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (rel_dist(finite[i].point, finite[j].point) <= dedup_tol) parent[find(i)] = find(j);
    std::vector<Cluster> out;
    std::vector<int> roots;
    for (int i = 0; i < m; ++i)
        if (find(i) == i) roots.push_back(i);
    for (int r : roots) {
        Cluster c;
        c.size = 0;
        c.best_residual = 1e300;
        c.min_sv = 0.0;
        for (int i = 0; i < m; ++i) {
            if (find(i) != r) continue;
            ++c.size;
            if (finite[i].residual < c.best_residual) {
                c.best_residual = finite[i].residual;
                c.representative = finite[i].point;
                c.min_sv = finite[i].jacobian_min_singular_value;
            }
        }
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const Cluster& a, const Cluster& b) { return lex_less(a.representative, b.representative); });
    return out;
}

/// A singular endpoint sits on a positive-dimensional solution set exactly
/// when a walker stepped along the Jacobian's null direction and refined
/// stays a step away (it moved along the set); an isolated multiple root
/// pulls every walker back to the center.
bool singular_family_test(const TrackedSystem& sys, const SolveConfig& cfg, const Vec& point,
                          Rng& rng, const std::function<Vec(const Vec&)>& project) {
    const int n = static_cast<int>(point.size());
    Eigen::JacobiSVD<Mat> svd(sys.target_jac(point), Eigen::ComputeFullV);
    const Vec tangent = svd.matrixV().col(n - 1);  // smallest singular direction

    std::vector<Vec> walks = {tangent, Complex(0, 1) * tangent, random_unit_vector(n, rng)};
    for (const Vec& dir : walks) {
        const double h = 1e-3 * (1.0 + point.norm());
        Vec start = point + h * dir;
        if (project) start = project(start);
        const PathEndpoint ep = refine_target(sys, cfg, start);
        if (ep.status != PathStatus::converged) continue;
        const double moved = (ep.point - point).norm();
        if (moved >= 0.25 * h && moved <= 20.0 * h) return true;
    }
    return false;
}

/// Phase-fix a unit vector so its largest-magnitude coordinate is real
/// positive (canonical projective representative).
Vec canonical_direction(Vec w) {
    w /= w.norm();
    int arg = 0;
    double best = 0.0;
    for (int i = 0; i < w.size(); ++i) {
        if (std::abs(w[i]) > best + 1e-12) {
            best = std::abs(w[i]);
            arg = i;
        }
    }
    const Complex phase = std::conj(w[arg]) / std::abs(w[arg]);
    return (phase * w).eval();
}

double projective_dist(const Vec& a, const Vec& b) {
    const double overlap = std::min(std::abs(a.dot(b)) / (a.norm() * b.norm()), 1.0);
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * overlap));
}

}  // namespace

void SolveConfig::validate() const {
    if (!(0.0 < ds_min && ds_min <= ds_init && ds_init <= ds_max && ds_max < 1.0)) {
        throw InputError("SolveConfig: need 0 < ds_min <= ds_init <= ds_max < 1");
    }
    if (track_tol <= 0 || dedup_tol <= 0 || refine_tol <= 0 || divergence_norm <= 0 ||
        cluster_tol <= 0) {
        throw InputError("SolveConfig: tolerances must be positive");
    }
    if (max_newton < 1) throw InputError("SolveConfig: max_newton must be positive");
}

const char* to_string(PathStatus s) {
    switch (s) {
        case PathStatus::converged: return "converged";
        case PathStatus::at_infinity: return "at_infinity";
        case PathStatus::failed: return "failed";
    }
    return "failed";
}

int IdempotentSet::nonzero_count() const {
    int count = 0;
    for (const IdempotentRecord& r : idempotents)
        if (!r.is_zero()) ++count;
    return count;
}

const IdempotentRecord* IdempotentSet::zero_record() const {
    for (const IdempotentRecord& r : idempotents)
        if (r.is_zero()) return &r;
    return nullptr;
}

const IdempotentRecord& IdempotentSet::record_nearest(const Vec& p) const {
    if (idempotents.empty()) throw Error("record_nearest on an empty idempotent set");
    size_t best = 0;
    double best_dist = 1e300;
    for (size_t i = 0; i < idempotents.size(); ++i) {
        const double d = (idempotents[i].point - p).norm();
        if (d < best_dist) {
            best_dist = d;
            best = i;
        }
    }
    return idempotents[best];
}

PathEndpoint newton_refine(const Algebra& a, const Vec& x, const SolveConfig& cfg) {
    cfg.validate();
    if (x.size() != a.dim()) throw InputError("newton_refine: dimension mismatch");
    if (!x.allFinite()) throw InputError("newton_refine: non-finite start point");
    return refine_target(idempotent_system(a), cfg, x);
}

IdempotentSet solve_idempotents(const Algebra& a, const SolveConfig& cfg) {
    cfg.validate();
    const int n = a.dim();
    const long total = 1L << n;

    IdempotentSet set;
    set.algebra = a;
    set.paths_total = static_cast<int>(total);

    Rng gamma_rng(cfg.seed ^ kGammaStream);
    const Complex gamma = unit_complex(gamma_rng);
    const TrackedSystem sys = idempotent_system(a);

    std::vector<PathEndpoint> finite;
    for (long mask = 0; mask < total; ++mask) {
        Vec start(n);
        for (int i = 0; i < n; ++i) start[i] = (mask >> i) & 1 ? Complex(-1.0) : Complex(1.0);
        PathEndpoint ep = run_path(sys, gamma, cfg, start);
        switch (ep.status) {
            case PathStatus::converged: finite.push_back(std::move(ep)); break;
            case PathStatus::at_infinity: ++set.paths_at_infinity; break;
            case PathStatus::failed: ++set.paths_failed; break;
        }
    }
    set.exhaustive = (set.paths_failed == 0);

    Rng family_rng(cfg.seed ^ kFamilyStream);
    for (const Cluster& cl : dedup_endpoints(std::move(finite), cfg.dedup_tol)) {
        set.idempotents.push_back(
            make_idempotent_record(a, cl.representative, cl.min_sv, cl.size, cfg.cluster_tol));
        if (cl.min_sv < kSingularSv &&
            singular_family_test(sys, cfg, cl.representative, family_rng, nullptr)) {
            set.has_infinite_family = true;
        }
    }

    set.nilpotent_directions = detect_nilpotents(a, cfg);
    return set;
}

std::vector<Vec> detect_nilpotents(const Algebra& a, const SolveConfig& cfg) {
    cfg.validate();
    const int n = a.dim();
    Rng rng(cfg.seed ^ kChartStream);

    struct Direction {
        Vec dir;
        bool in_family;
    };
    std::vector<Direction> found;

    for (int attempt = 0; attempt < 3; ++attempt) {
        // Random affine chart <chart, x> = 1 and random quadric mixer.
        Vec chart = random_unit_vector(n, rng);
        if (std::abs(chart[n - 1]) < 0.1) continue;  // degenerate chart, retry
        Mat mixer(n - 1, n);
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n; ++j) mixer(i, j) = gaussian_complex(rng);

        TrackedSystem sys;
        sys.dim = n;
        sys.target = [&a, chart, mixer, n](const Vec& x) {
            Vec f(n);
            f.head(n - 1) = mixer * a.square(x);
            f[n - 1] = chart.cwiseProduct(x).sum() - Complex(1.0);
            return f;
        };
        sys.target_jac = [&a, chart, mixer, n](const Vec& x) {
            Mat j(n, n);
            j.topRows(n - 1) = 2.0 * (mixer * a.left_mult_matrix(x));
            j.row(n - 1) = chart.transpose();
            return j;
        };
        sys.start = [chart, n](const Vec& x) {
            Vec g(n);
            for (int i = 0; i < n - 1; ++i) g[i] = x[i] * x[i] - 1.0;
            g[n - 1] = chart.cwiseProduct(x).sum() - Complex(1.0);
            return g;
        };
        sys.start_jac = [chart, n](const Vec& x) {
            Mat j = Mat::Zero(n, n);
            for (int i = 0; i < n - 1; ++i) j(i, i) = 2.0 * x[i];
            j.row(n - 1) = chart.transpose();
            return j;
        };

        const Complex gamma = unit_complex(rng);
        const long paths = 1L << (n - 1);
        std::vector<PathEndpoint> finite;
        int failed = 0;
        for (long mask = 0; mask < paths; ++mask) {
            Vec start(n);
            Complex partial = 0.0;
            for (int i = 0; i < n - 1; ++i) {
                start[i] = (mask >> i) & 1 ? Complex(-1.0) : Complex(1.0);
                partial += chart[i] * start[i];
            }
            start[n - 1] = (Complex(1.0) - partial) / chart[n - 1];
            PathEndpoint ep = run_path(sys, gamma, cfg, start);
            if (ep.status == PathStatus::converged) {
                finite.push_back(std::move(ep));
            } else if (ep.status == PathStatus::failed) {
                ++failed;
            }
        }
        if (failed * 2 > paths && attempt + 1 < 3) continue;  // chart looks bad, retry

        // Keep genuine nilpotents: the mixed system has spurious solutions
        // with mixer * x^2 = 0 but x^2 != 0.
        Rng family_rng(cfg.seed ^ kFamilyStream ^ 0x7u);
        auto rescale_to_chart = [chart](const Vec& x) {
            const Complex t = chart.cwiseProduct(x).sum();
            return (x / t).eval();
        };
        for (const PathEndpoint& ep : finite) {
            const double norm = ep.point.norm();
            if (a.square(ep.point).norm() > 1e-8 * (1.0 + norm) * (1.0 + norm)) continue;
            Direction d;
            d.dir = canonical_direction(ep.point);
            d.in_family = ep.jacobian_min_singular_value < kSingularSv &&
                          singular_family_test(sys, cfg, ep.point, family_rng, rescale_to_chart);
            found.push_back(std::move(d));
        }
        break;
    }

    // Dedup projectively.
    std::sort(found.begin(), found.end(),
              [](const Direction& a, const Direction& b) { return lex_less(a.dir, b.dir); });
    std::vector<Direction> distinct;
    for (const Direction& d : found) {
        bool dup = false;
        for (Direction& w : distinct) {
            if (projective_dist(w.dir, d.dir) <= cfg.dedup_tol) {
                dup = true;
                w.in_family = w.in_family || d.in_family;
            }
        }
        if (!dup) distinct.push_back(d);
    }

    // Group members of one positive-dimensional family and emit a single
    // witness per group. Two directions whose blend is again 2-nilpotent lie
    // on a common linear family; the tangent-walk flag covers curved ones.
    const int m = static_cast<int>(distinct.size());
    std::vector<int> comp(m);
    for (int i = 0; i < m; ++i) comp[i] = i;
    std::function<int(int)> find = [&](int i) {
        while (comp[i] != i) i = comp[i] = comp[comp[i]];
        return i;
    };
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const Vec blend = distinct[i].dir + 0.5 * distinct[j].dir;
            if (a.square(blend).norm() <= 1e-10 * (1.0 + blend.norm()) * (1.0 + blend.norm())) {
                comp[find(i)] = find(j);
            }
        }
    }
    std::vector<Vec> out;
    for (int root = 0; root < m; ++root) {
        if (find(root) != root) continue;
        std::vector<int> members;
        bool family = false;
        for (int i = 0; i < m; ++i) {
            if (find(i) == root) {
                members.push_back(i);
                family = family || distinct[i].in_family;
            }
        }
        family = family || members.size() > 1;
        if (family) {
            out.push_back(distinct[members.front()].dir);  // single witness
        } else {
            for (int i : members) out.push_back(distinct[i].dir);
        }
    }
    std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) { return lex_less(a, b); });
    return out;
}

IdempotentSet solve_2d_closed_form(const Algebra& a) {
    if (a.dim() != 2) throw InputError("solve_2d_closed_form requires a 2-dimensional algebra");
    const SolveConfig cfg{};
    Rng rng(0x5EED2DULL);

    IdempotentSet set;
    set.algebra = a;
    set.paths_total = 4;
    set.exhaustive = true;

    for (int attempt = 0; attempt < 3; ++attempt) {
        // Random basis change puts the quadratics in general position (leading
        // y-coefficients nonzero, no two solutions sharing an x-coordinate).
        Mat t(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) t(i, j) = gaussian_complex(rng);
        if (std::abs(t.determinant()) < 0.1) continue;
        const Mat tinv = t.inverse();

        // Structure constants in the new basis.
        Complex s[2][2][2];
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                const Vec prod = tinv * a.multiply(t.col(i), t.col(j));
                s[i][j][0] = prod[0];
                s[i][j][1] = prod[1];
            }
        }
        // F1 = A x^2 + B xy + C y^2 - x,  F2 = D x^2 + E xy + F y^2 - y.
        const Complex ca = s[0][0][0], cb = s[0][1][0] + s[1][0][0], cc = s[1][1][0];
        const Complex cd = s[0][0][1], ce = s[0][1][1] + s[1][0][1], cf = s[1][1][1];
        if (std::abs(cc) < 1e-3 || std::abs(cf) < 1e-3) continue;

        // Resultant in y: coefficients of F1, F2 as quadratics in y are
        // polynomials in x.
        using Poly = std::vector<Complex>;
        const Poly p2{cc}, p1{Complex(0.0), cb}, p0{Complex(0.0), Complex(-1.0), ca};
        const Poly q2{cf}, q1{Complex(-1.0), ce}, q0{Complex(0.0), Complex(0.0), cd};
        const Poly m02 = poly_add(poly_mul(p2, q0), poly_scale(poly_mul(p0, q2), -1.0));
        const Poly m12 = poly_add(poly_mul(p2, q1), poly_scale(poly_mul(p1, q2), -1.0));
        const Poly m01 = poly_add(poly_mul(p1, q0), poly_scale(poly_mul(p0, q1), -1.0));
        Poly res = poly_add(poly_mul(m02, m02), poly_scale(poly_mul(m12, m01), -1.0));

        double res_scale = 0.0;
        for (const Complex& z : res) res_scale = std::max(res_scale, std::abs(z));
        if (res_scale == 0.0) {
            // Identically zero resultant: a positive-dimensional idempotent
            // family. Witness points only.
            set.has_infinite_family = true;
            break;
        }
        // Dropped leading coefficients are solutions at infinity; those are
        // the nilpotent directions, recovered below from the homogeneous part.
        while (res.size() > 1 && std::abs(res.back()) <= 1e-10 * res_scale) res.pop_back();
        set.paths_at_infinity = 4 - static_cast<int>(res.size() - 1);

        std::vector<Vec> solutions;
        if (res.size() > 1) {
            for (const Complex& xr : poly_roots(res)) {
                // y from the y^2-free combination cf*F1 - cc*F2.
                const Complex denom = cf * cb * xr - cc * (ce * xr - 1.0);
                std::vector<Complex> ys;
                if (std::abs(denom) > 1e-8) {
                    ys.push_back(-(cf * (ca * xr * xr - xr) - cc * cd * xr * xr) / denom);
                } else {
                    // Two solutions share this x; fall back to the quadratic.
                    const Complex disc = std::sqrt(cb * cb * xr * xr - 4.0 * cc * (ca * xr * xr - xr));
                    ys.push_back((-cb * xr + disc) / (2.0 * cc));
                    ys.push_back((-cb * xr - disc) / (2.0 * cc));
                }
                for (const Complex& yr : ys) {
                    Vec cand(2);
                    cand << xr, yr;
                    const Vec back = t * cand;
                    const PathEndpoint polished = newton_refine(a, back, cfg);
                    if (polished.status == PathStatus::converged) solutions.push_back(polished.point);
                }
            }
        }
        std::vector<PathEndpoint> eps;
        for (const Vec& sol : solutions) {
            PathEndpoint ep;
            ep.status = PathStatus::converged;
            ep.point = sol;
            ep.residual = (a.square(sol) - sol).norm();
            ep.jacobian_min_singular_value =
                min_singular_value(2.0 * a.left_mult_matrix(sol) - Mat::Identity(2, 2));
            eps.push_back(std::move(ep));
        }
        for (const Cluster& cl : dedup_endpoints(std::move(eps), cfg.dedup_tol)) {
            set.idempotents.push_back(make_idempotent_record(a, cl.representative, cl.min_sv, 1));
        }

        // Nilpotent directions: common projective roots of the homogeneous
        // quadratic parts.
        std::vector<Complex> ts;
        {
            const Complex disc = std::sqrt(cb * cb - 4.0 * cc * ca);
            ts.push_back((-cb + disc) / (2.0 * cc));
            ts.push_back((-cb - disc) / (2.0 * cc));
        }
        std::vector<Vec> dirs;
        for (const Complex& tr : ts) {
            const Complex other = cd + ce * tr + cf * tr * tr;
            if (std::abs(other) > 1e-8 * (1.0 + std::abs(tr)) * (1.0 + std::abs(tr))) continue;
            Vec d(2);
            d << Complex(1.0), tr;
            Vec back = canonical_direction(t * d);
            bool dup = false;
            for (const Vec& w : dirs) {
                if (projective_dist(w, back) <= cfg.dedup_tol) dup = true;
            }
            if (!dup) dirs.push_back(std::move(back));
        }
        std::sort(dirs.begin(), dirs.end(),
                  [](const Vec& a, const Vec& b) { return lex_less(a, b); });
        set.nilpotent_directions = std::move(dirs);
        return set;
    }

    // Degenerate-resultant path: deliver witnesses found by refinement from a
    // seeded net; classification data (the family flag) is already set.
    std::vector<PathEndpoint> eps;
    for (int i = 0; i < 8; ++i) {
        const PathEndpoint ep = newton_refine(a, random_unit_vector(2, rng), cfg);
        if (ep.status == PathStatus::converged) eps.push_back(ep);
    }
    for (const Cluster& cl : dedup_endpoints(std::move(eps), cfg.dedup_tol)) {
        set.idempotents.push_back(make_idempotent_record(a, cl.representative, cl.min_sv, 1));
    }
    return set;
}

}  // namespace peirce
