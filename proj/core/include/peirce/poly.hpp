#pragma once

#include <vector>

#include "peirce/algebra.hpp"
#include "peirce/types.hpp"

namespace peirce {

/// Horner evaluation of an ascending-order coefficient list.
Complex poly_eval(const std::vector<Complex>& coeffs, Complex t);

/// Ascending coefficients of the derivative.
std::vector<Complex> poly_derivative(const std::vector<Complex>& coeffs);

/// Exact k-th derivative evaluated at t (differentiate coefficients, then
/// Horner).
Complex poly_derivative_eval(const std::vector<Complex>& coeffs, int k, Complex t);

/// Synthetic division by (t - root). Returns the quotient (degree one less)
/// and stores the remainder p(root) in *remainder when non-null.
std::vector<Complex> poly_deflate(const std::vector<Complex>& coeffs, Complex root,
                                  Complex* remainder = nullptr);

std::vector<Complex> poly_mul(const std::vector<Complex>& a, const std::vector<Complex>& b);
std::vector<Complex> poly_add(const std::vector<Complex>& a, const std::vector<Complex>& b);
std::vector<Complex> poly_scale(const std::vector<Complex>& a, Complex s);

/// All complex roots of a polynomial by Aberth-Ehrlich simultaneous
/// iteration, seeded on a circle, with multiplicity-aware Newton polishing
/// (a cluster of m nearby iterates is refined against p^(m-1) and the merge
/// kept only if the backward error of p^(j), j < m, validates it). Falls back
/// to companion-matrix eigenvalues if the iteration stalls.
///
/// Returns exactly degree(p) roots, multiple roots repeated, sorted
/// lexicographically.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs);

}  // namespace peirce
