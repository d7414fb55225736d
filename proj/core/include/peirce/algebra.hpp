#pragma once

#include <optional>
#include <string>
#include <vector>

#include "peirce/types.hpp"

namespace peirce {

/// Coefficients of the monic characteristic polynomial
/// p(t) = det(tI - L_x), stored in ascending order, coeffs.size() == n+1,
/// coeffs.back() == 1. Note p(t) = (-1)^n chi_x(t) relative to the convention
/// chi_x(t) = det(L_x - tI); all spectral identities in this library use
/// ratios p_c(t)/p_c(1/2), which the global sign cancels out of.
struct CharPoly {
    std::vector<Complex> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// A finite-dimensional commutative algebra over C given by structure
/// constants: e_i e_j = sum_k c[i][j][k] e_k. The tensor is symmetrized in
/// (i,j) at construction; asymmetry beyond 1e-12 is a hard error rather than
/// silently averaged away.
///
/// Immutable after construction; all member operations are pure.
class Algebra {
  public:
    /// The 1-dimensional zero algebra; placeholder state for containers.
    Algebra() : n_(1), tensor_(1, Complex(0.0)) {}

    Algebra(int dim, std::vector<Complex> tensor, std::string label = {});

    int dim() const { return n_; }
    const std::string& label() const { return label_; }

    const Complex& c(int i, int j, int k) const { return tensor_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
    const std::vector<Complex>& tensor() const { return tensor_; }

    /// Product of two elements, sum_{i,j} x_i y_j c[i][j][.].
    Vec multiply(const Vec& x, const Vec& y) const;

    /// Convenience square x*x (the quadratic map Psi_A).
    Vec square(const Vec& x) const { return multiply(x, x); }

    /// Matrix of the multiplication operator L_x (L_x y = xy); equals half the
    /// Jacobian of Psi_A at x.
    Mat left_mult_matrix(const Vec& x) const;

    /// Monic characteristic polynomial det(tI - L_x) by the Faddeev-LeVerrier
    /// trace recursion (exact in exact arithmetic).
    CharPoly char_poly(const Vec& x) const;

    /// Two-sided unit if one exists: e with e*e_i = e_i for every basis
    /// vector, solved as a least-squares system and accepted below unit_tol.
    std::optional<Vec> find_unit(double unit_tol = 1e-10) const;

    /// Conjugate idempotent e - c in a unital algebra. Checks that e is the
    /// unit and that c is an idempotent (residual below tol).
    Vec conjugate_idempotent(const Vec& e, const Vec& c, double tol = 1e-8) const;

  private:
    void check_element(const Vec& x) const;

    int n_;
    std::vector<Complex> tensor_;
    std::string label_;
};

/// Block-diagonal sum; dim = dim A + dim B.
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// Parse the JSON algebra format
///   {"dim": n, "tensor": [[i, j, k, re, im], ...], "label": str}
/// Omitted entries are zero; duplicate (i,j,k) entries are an error; the
/// result must satisfy the commutativity invariant after symmetrization.
Algebra algebra_from_json(const std::string& text);
Algebra algebra_from_json_file(const std::string& path);

/// Emit the same format (all nonzero entries, both index orders, sorted).
std::string algebra_to_json(const Algebra& a);

}  // namespace peirce
