#include "peirce/metrised.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include <Eigen/Dense>

#include <json.hpp>

#include "peirce/solve.hpp"

namespace peirce {

namespace {

std::array<std::array<int, 3>, 6> permutations3(int i, int j, int k) {
    return {{{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}}};
}

}  // namespace

CubicForm::CubicForm(int dim, std::vector<Complex> tri) : n_(dim), tri_(std::move(tri)) {
    if (n_ < 1 || n_ > kMaxDim) throw InputError("cubic form dimension out of range");
    if (tri_.size() != static_cast<size_t>(n_) * n_ * n_) {
        throw InputError("cubic form tensor has wrong size");
    }
    // Full symmetrization with a hard error on real asymmetry.
    for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) {
            for (int k = j; k < n_; ++k) {
                Complex sum = 0.0;
                double lo = 1e300, hi = 0.0;
                for (const auto& p : permutations3(i, j, k)) {
                    const Complex v = tri_[(static_cast<size_t>(p[0]) * n_ + p[1]) * n_ + p[2]];
                    sum += v;
                    lo = std::min(lo, std::abs(v));
                    hi = std::max(hi, std::abs(v));
                }
                const Complex avg = sum / 6.0;
                double max_dev = 0.0;
                for (const auto& p : permutations3(i, j, k)) {
                    const Complex v = tri_[(static_cast<size_t>(p[0]) * n_ + p[1]) * n_ + p[2]];
                    max_dev = std::max(max_dev, std::abs(v - avg));
                }
                if (max_dev > 1e-12) {
                    throw InputError("cubic form tensor is not symmetric (asymmetry above 1e-12)");
                }
                for (const auto& p : permutations3(i, j, k)) {
                    tri_[(static_cast<size_t>(p[0]) * n_ + p[1]) * n_ + p[2]] = avg;
                }
            }
        }
    }
}

CubicForm::CubicForm(int dim) : CubicForm(dim, std::vector<Complex>(static_cast<size_t>(dim) * dim * dim, Complex(0.0))) {}

void CubicForm::add_monomial(int i, int j, int k, Complex coeff) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_ || k < 0 || k >= n_) {
        throw InputError("add_monomial: index out of range");
    }
    // Distinct ordered arrangements of (i,j,k); the tensor entry per slot is
    // 6 * coeff / (number of arrangements), i.e. the third partial derivative.
    std::vector<std::array<int, 3>> distinct;
    for (const auto& p : permutations3(i, j, k)) {
        if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
    }
    const Complex v = 6.0 * coeff / static_cast<double>(distinct.size());
    for (const auto& p : distinct) {
        tri_[(static_cast<size_t>(p[0]) * n_ + p[1]) * n_ + p[2]] += v;
    }
}

Complex CubicForm::eval(const Vec& x) const {
    if (x.size() != n_) throw InputError("cubic form: dimension mismatch");
    Complex acc = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) acc += tri(i, j, k) * x[i] * x[j] * x[k];
    return acc / 6.0;
}

Vec CubicForm::gradient(const Vec& x) const {
    if (x.size() != n_) throw InputError("cubic form: dimension mismatch");
    Vec g = Vec::Zero(n_);
    for (int k = 0; k < n_; ++k) {
        Complex acc = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) acc += tri(i, j, k) * x[i] * x[j];
        g[k] = acc / 2.0;
    }
    return g;
}

bool CubicForm::is_real(double tol) const {
    for (const Complex& z : tri_) {
        if (std::abs(z.imag()) > tol) return false;
    }
    return true;
}

bool CubicForm::is_zero(double tol) const {
    for (const Complex& z : tri_) {
        if (std::abs(z) > tol) return false;
    }
    return true;
}

InnerProduct::InnerProduct(Mat b) : b_(std::move(b)) {
    if (b_.rows() != b_.cols() || b_.rows() < 1) throw InputError("inner product matrix must be square");
    if ((b_ - b_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw InputError("inner product matrix must be symmetric");
    }
    if (std::abs(b_.determinant()) <= 1e-12) {
        throw InputError("inner product matrix is singular");
    }
    euclidean_ = (b_ - Mat::Identity(b_.rows(), b_.cols())).cwiseAbs().maxCoeff() == 0.0;
}

InnerProduct InnerProduct::euclidean(int dim) { return InnerProduct(Mat::Identity(dim, dim)); }

Algebra algebra_from_cubic(const CubicForm& u, const InnerProduct& b, std::string label) {
    const int n = u.dim();
    if (b.dim() != n) throw InputError("algebra_from_cubic: dimension mismatch");
    Eigen::PartialPivLU<Mat> lu(b.matrix());
    std::vector<Complex> t(static_cast<size_t>(n) * n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Vec rhs(n);
            for (int k = 0; k < n; ++k) rhs[k] = u.tri(i, j, k);
            const Vec col = lu.solve(rhs);
            for (int k = 0; k < n; ++k) t[(static_cast<size_t>(i) * n + j) * n + k] = col[k];
        }
    }
    return Algebra(n, std::move(t), std::move(label));
}

CubicForm cubic_from_algebra(const Algebra& a, const InnerProduct& b) {
    const MetrisedCheck check = metrised_check(a, b);
    if (!check.ok) {
        throw InputError("cubic_from_algebra: the form does not associate with the multiplication");
    }
    const int n = a.dim();
    std::vector<Complex> tri(static_cast<size_t>(n) * n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Vec prod(n);
            for (int k = 0; k < n; ++k) prod[k] = a.c(i, j, k);
            const Vec paired = b.matrix().transpose() * prod;
            for (int k = 0; k < n; ++k) tri[(static_cast<size_t>(i) * n + j) * n + k] = paired[k];
        }
    }
    return CubicForm(n, std::move(tri));
}

MetrisedCheck metrised_check(const Algebra& a, const InnerProduct& b, double tol) {
    const int n = a.dim();
    if (b.dim() != n) throw InputError("metrised_check: dimension mismatch");
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Vec ei = Vec::Zero(n);
        ei[i] = 1.0;
        for (int j = 0; j < n; ++j) {
            Vec ej = Vec::Zero(n);
            ej[j] = 1.0;
            const Vec eij = a.multiply(ei, ej);
            for (int k = 0; k < n; ++k) {
                Vec ek = Vec::Zero(n);
                ek[k] = 1.0;
                const Complex lhs = b.pair(eij, ek);
                const Complex rhs = b.pair(ei, a.multiply(ej, ek));
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
    }
    return {worst < tol, worst};
}

namespace {

RVec real_square(const CubicForm& u, const RVec& x) {
    const int n = u.dim();
    RVec out = RVec::Zero(n);
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc += u.tri(i, j, k).real() * x[i] * x[j];
        out[k] = acc;
    }
    return out;
}

double objective(const CubicForm& u, const RVec& x) {
    return real_square(u, x).dot(x) / std::pow(x.norm(), 3);
}

}  // namespace

RVec extremal_objective_gradient(const CubicForm& u, const RVec& x) {
    const RVec x2 = real_square(u, x);
    const double nx = x.norm();
    return 3.0 * (x2 * nx * nx - x2.dot(x) * x) / std::pow(nx, 5);
}

Eigen::MatrixXd extremal_objective_hessian(const CubicForm& u, const RVec& x) {
    const int n = u.dim();
    const RVec x2 = real_square(u, x);
    const double nx = x.norm();
    const double c = x2.dot(x);
    Eigen::MatrixXd l(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int i = 0; i < n; ++i) acc += u.tri(i, j, k).real() * x[i];
            l(k, j) = acc;
        }
    Eigen::MatrixXd h =
        2.0 * std::pow(nx, 4) * l - c * nx * nx * Eigen::MatrixXd::Identity(n, n) -
        3.0 * nx * nx * (x * x2.transpose() + x2 * x.transpose()) + 5.0 * c * x * x.transpose();
    return 3.0 * h / std::pow(nx, 7);
}

ExtremalResult extremal_idempotent(const CubicForm& u, int starts, std::uint64_t seed) {
    const int n = u.dim();
    if (!u.is_real(1e-10)) {
        throw InputError("extremal_idempotent: the cubic form must be real (Euclidean setting)");
    }
    if (u.is_zero(1e-14)) {
        throw InputError("extremal_idempotent: zero cubic form has no extremal idempotent");
    }
    if (starts < 1) throw InputError("extremal_idempotent: need at least one start");

    Rng rng(seed ^ 0xC5B1Cull);
    std::normal_distribution<double> gauss(0.0, 1.0);

    RVec best_point;
    double best_value = -1e300;
    for (int s = 0; s < starts; ++s) {
        RVec x(n);
        for (int i = 0; i < n; ++i) x[i] = gauss(rng);
        if (x.norm() < 1e-12) x.setOnes();
        x /= x.norm();

        double fx = objective(u, x);
        for (int iter = 0; iter < 200; ++iter) {
            const RVec g = extremal_objective_gradient(u, x);
            if (g.norm() < 1e-13) break;
            // Armijo backtracking along the projected ascent direction.
            double step = 1.0;
            bool moved = false;
            for (int bt = 0; bt < 40; ++bt) {
                RVec cand = x + step * g;
                cand /= cand.norm();
                const double fc = objective(u, cand);
                if (fc >= fx + 1e-4 * step * g.squaredNorm()) {
                    x = cand;
                    fx = fc;
                    moved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) break;
        }
        if (fx > best_value + 1e-14 ||
            (std::abs(fx - best_value) <= 1e-14 &&
             (best_point.size() == 0 || std::lexicographical_compare(x.data(), x.data() + n,
                                                                     best_point.data(),
                                                                     best_point.data() + n)))) {
            best_value = fx;
            best_point = x;
        }
    }
    if (best_value <= 0.0) {
        throw Error("extremal_idempotent: all starts gave a nonpositive maximum; retry with more starts");
    }

    // c = y / k with k = <y^2, y> at the best unit maximizer y.
    const double k = real_square(u, best_point).dot(best_point);
    Vec c(n);
    for (int i = 0; i < n; ++i) c[i] = best_point[i] / k;

    const Algebra a = algebra_from_cubic(u, InnerProduct::euclidean(n));
    SolveConfig cfg;
    cfg.seed = seed;
    const PathEndpoint refined = newton_refine(a, c, cfg);
    if (refined.status != PathStatus::converged) {
        throw Error("extremal_idempotent: Newton refinement of the rescaled maximizer failed");
    }

    ExtremalResult res;
    res.record = make_idempotent_record(a, refined.point, refined.jacobian_min_singular_value, 1);
    res.record.extremal = true;
    res.f_value = best_value;
    res.starts_used = starts;

    // Extremality forces sigma(c) \ {1} into (-inf, 1/2] with 1 simple.
    int ones = 0;
    for (const Spectrum::Root& r : res.record.spectrum.roots) {
        if (std::abs(r.value - 1.0) <= kClusterTol) {
            ones += r.multiplicity;
            continue;
        }
        if (r.value.real() > 0.5 + 1e-8) {
            throw InconsistencyError(
                "extremal_idempotent: an eigenvalue off 1 exceeds 1/2, contradicting the extremal "
                "spectral bound");
        }
    }
    if (ones != 1) {
        throw InconsistencyError("extremal_idempotent: 1 is not a simple eigenvalue of L_c");
    }
    return res;
}

double fusion_check(const Algebra& a, const InnerProduct& b, const IdempotentRecord& c,
                    double cluster_tol) {
    const MetrisedCheck check = metrised_check(a, b);
    if (!check.ok) throw InputError("fusion_check: the algebra is not metrised by the given form");
    if (!c.spectrum.contains(Complex(0.5, 0.0), cluster_tol)) {
        throw InputError("fusion_check: 1/2 is not in the Peirce spectrum of this idempotent");
    }
    const int n = a.dim();
    const Mat shifted = a.left_mult_matrix(c.point) - 0.5 * Mat::Identity(n, n);
    Eigen::JacobiSVD<Mat> svd(shifted, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double rank_tol = kRankTolFactor * std::max(sv.maxCoeff(), 1.5);
    std::vector<Vec> basis;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv[i] <= rank_tol) basis.push_back(svd.matrixV().col(i));
    }
    if (basis.empty()) throw InputError("fusion_check: numerical kernel of L_c - I/2 is empty");
    double worst = 0.0;
    for (const Vec& za : basis) {
        for (const Vec& zb : basis) {
            const Vec prod = a.multiply(za, zb);
            for (const Vec& zd : basis) {
                worst = std::max(worst, std::abs(b.pair(prod, zd)));
            }
        }
    }
    return worst;
}

namespace {

CubicForm cubic_from_parsed(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim")) throw InputError("cubic JSON must be an object with a \"dim\" field");
    const int n = j.at("dim").get<int>();
    if (n < 1 || n > kMaxDim) throw InputError("cubic JSON: dim out of range");
    std::vector<Complex> tri(static_cast<size_t>(n) * n * n, Complex(0.0));
    std::vector<bool> seen(tri.size(), false);
    if (j.contains("tri")) {
        for (const auto& entry : j.at("tri")) {
            if (!entry.is_array() || entry.size() != 5) {
                throw InputError("cubic JSON: tri entries must be [i, j, k, re, im]");
            }
            const int i = entry[0].get<int>();
            const int jj = entry[1].get<int>();
            const int k = entry[2].get<int>();
            if (i < 0 || i >= n || jj < 0 || jj >= n || k < 0 || k >= n) {
                throw InputError("cubic JSON: index out of range");
            }
            const size_t idx = (static_cast<size_t>(i) * n + jj) * n + k;
            if (seen[idx]) throw InputError("cubic JSON: duplicate tri entry");
            seen[idx] = true;
            tri[idx] = Complex(entry[3].get<double>(), entry[4].get<double>());
        }
    }
    return CubicForm(n, std::move(tri));
}

}  // namespace

CubicForm cubic_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return cubic_from_parsed(j);
}

CubicForm cubic_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return cubic_from_json(ss.str());
}

std::string cubic_to_json(const CubicForm& u) {
    const int n = u.dim();
    std::ostringstream out;
    out.precision(17);
    out << "{\"dim\": " << n << ", \"tri\": [";
    bool first = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Complex& z = u.tri(i, j, k);
                if (z == 0.0) continue;
                if (!first) out << ", ";
                first = false;
                out << '[' << i << ", " << j << ", " << k << ", " << z.real() << ", " << z.imag()
                    << ']';
            }
    out << "]}";
    return out.str();
}

}  // namespace peirce
