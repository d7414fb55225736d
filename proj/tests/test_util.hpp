#pragma once

#include <algorithm>
#include <vector>

#include <doctest.h>

#include "peirce/algebra.hpp"
#include "peirce/solve.hpp"
#include "peirce/spectral.hpp"

namespace peirce::test {

inline Vec make_vec(std::initializer_list<Complex> vals) {
    Vec v(static_cast<Eigen::Index>(vals.size()));
    Eigen::Index i = 0;
    for (const Complex& z : vals) v[i++] = z;
    return v;
}

/// i.i.d. complex Gaussian structure tensor, symmetrized by construction.
inline Algebra random_algebra(int n, Rng& rng) {
    std::vector<Complex> t(static_cast<size_t>(n) * n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const Complex z = gaussian_complex(rng);
                t[(static_cast<size_t>(i) * n + j) * n + k] = z;
                t[(static_cast<size_t>(j) * n + i) * n + k] = z;
            }
        }
    }
    return Algebra(n, std::move(t), "random");
}

inline Vec random_vec(int n, Rng& rng) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = gaussian_complex(rng);
    return v;
}

/// Multiset match within tol.
inline bool multiset_match(std::vector<Complex> a, std::vector<Complex> b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const Complex& x : a) {
        bool hit = false;
        for (size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && std::abs(x - b[j]) <= tol) {
                used[j] = true;
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

/// Do the two point sets coincide within tol (relative)?
inline bool point_sets_match(const std::vector<Vec>& a, const std::vector<Vec>& b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const Vec& x : a) {
        bool hit = false;
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            if ((x - b[j]).norm() <= tol * (1.0 + x.norm())) {
                used[j] = true;
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

inline std::vector<Vec> points_of(const IdempotentSet& s) {
    std::vector<Vec> out;
    for (const IdempotentRecord& r : s.idempotents) out.push_back(r.point);
    return out;
}

/// The non-1 Peirce number of a nonzero idempotent of a 2D algebra.
inline Complex off_one_eigenvalue(const IdempotentRecord& rec) {
    std::vector<Complex> vals = rec.spectrum.values();
    REQUIRE(vals.size() == 2);
    // drop the root closest to 1
    if (std::abs(vals[0] - 1.0) <= std::abs(vals[1] - 1.0)) return vals[1];
    return vals[0];
}

}  // namespace peirce::test
