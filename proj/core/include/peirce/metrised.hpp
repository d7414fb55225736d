#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "peirce/algebra.hpp"
#include "peirce/spectral.hpp"
#include "peirce/types.hpp"

namespace peirce {

/// Cubic form u(x) = (1/6) sum u3[i][j][k] x_i x_j x_k with u3 fully
/// symmetric (u3[i][j][k] = u(e_i, e_j, e_k), the full linearization).
class CubicForm {
  public:
    CubicForm(int dim, std::vector<Complex> tri);

    /// Zero form of the given dimension.
    explicit CubicForm(int dim);

    int dim() const { return n_; }
    const Complex& tri(int i, int j, int k) const { return tri_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
    const std::vector<Complex>& tensor() const { return tri_; }

    /// Add the monomial coeff * x_i x_j x_k (indices in any order, repeats
    /// allowed) to the form, updating the full symmetric tensor.
    void add_monomial(int i, int j, int k, Complex coeff);

    Complex eval(const Vec& x) const;
    Vec gradient(const Vec& x) const;

    bool is_real(double tol = 1e-12) const;
    bool is_zero(double tol = 0.0) const;

  private:
    int n_;
    std::vector<Complex> tri_;
};

/// Nonsingular symmetric bilinear form <x,y> = x^T B y.
class InnerProduct {
  public:
    explicit InnerProduct(Mat b);
    static InnerProduct euclidean(int dim);

    int dim() const { return static_cast<int>(b_.rows()); }
    const Mat& matrix() const { return b_; }
    bool is_euclidean() const { return euclidean_; }

    Complex pair(const Vec& x, const Vec& y) const { return x.cwiseProduct(b_ * y).sum(); }

  private:
    Mat b_;
    bool euclidean_;
};

/// The metrised algebra V(u): structure tensor c[i][j][.] = B^{-1} u3[i][j][.],
/// the unique commutative multiplication with <xy, z> = u(x,y,z).
Algebra algebra_from_cubic(const CubicForm& u, const InnerProduct& b, std::string label = {});

/// Inverse direction: u3[i][j][k] = <e_i e_j, e_k>_B. Requires the form to
/// associate with the multiplication (metrised_check passes).
CubicForm cubic_from_algebra(const Algebra& a, const InnerProduct& b);

struct MetrisedCheck {
    bool ok = false;
    double max_violation = 0.0;
};

/// max over basis triples of |<e_i e_j, e_k> - <e_i, e_j e_k>|; passes below
/// 1e-10.
MetrisedCheck metrised_check(const Algebra& a, const InnerProduct& b, double tol = 1e-10);

/// Analytic gradient of f(x) = <x^2, x>/|x|^3 for a real Euclidean cubic.
RVec extremal_objective_gradient(const CubicForm& u, const RVec& x);

/// Analytic Hessian of f (the |x|^7-denominator operator form).
Eigen::MatrixXd extremal_objective_hessian(const CubicForm& u, const RVec& x);

struct ExtremalResult {
    IdempotentRecord record;
    double f_value = 0.0;   // <y^2, y> at the best unit maximizer y
    int starts_used = 0;
};

/// Maximize <x^2,x>/|x|^3 over the unit sphere by multistart projected
/// gradient ascent with Armijo backtracking; the best maximizer y rescaled by
/// c = y/<y^2,y> and Newton-refined is an idempotent of minimal norm whose
/// spectrum off the simple eigenvalue 1 lies in (-inf, 1/2].
ExtremalResult extremal_idempotent(const CubicForm& u, int starts = 32, std::uint64_t seed = 0);

/// max over a basis {z_a} of the numerical kernel of L_c - 1/2 I of
/// |<z_a z_b, z_d>_B|; the fusion rule A_c(1/2) A_c(1/2) subset A_c(1/2)^perp
/// makes this vanish for extremal idempotents.
double fusion_check(const Algebra& a, const InnerProduct& b, const IdempotentRecord& c,
                    double cluster_tol = kClusterTol);

/// Cubic form JSON: {"dim": n, "tri": [[i, j, k, re, im], ...]}.
CubicForm cubic_from_json(const std::string& text);
CubicForm cubic_from_json_file(const std::string& path);
std::string cubic_to_json(const CubicForm& u);

}  // namespace peirce
