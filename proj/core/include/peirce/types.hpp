#pragma once

#include <complex>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace peirce {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using Rng = std::mt19937_64;

/// Base class of all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Violated precondition or malformed input (CLI exit code 1).
struct InputError : Error {
    using Error::Error;
};

/// A mathematical identity that should hold failed to hold (CLI exit code 2).
struct InconsistencyError : Error {
    using Error::Error;
};

constexpr int kMaxDim = 12;

/// Strict lexicographic order on coordinate vectors, (re, im) per entry.
/// Gives the deterministic merge/report order used throughout the solver.
inline bool lex_less(const Vec& a, const Vec& b) {
    const Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return a.size() < b.size();
}

inline bool lex_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

/// Uniformly distributed point on the complex unit circle.
inline Complex unit_complex(Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double theta = 2.0 * M_PI * u(rng);
    return {std::cos(theta), std::sin(theta)};
}

/// Standard complex Gaussian (independent N(0,1) real and imaginary parts).
inline Complex gaussian_complex(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double re = g(rng);
    const double im = g(rng);
    return {re, im};
}

inline Vec random_unit_vector(int n, Rng& rng) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = gaussian_complex(rng);
    const double norm = v.norm();
    if (norm == 0.0) {
        v.setZero();
        v[0] = 1.0;
        return v;
    }
    return v / norm;
}

}  // namespace peirce
