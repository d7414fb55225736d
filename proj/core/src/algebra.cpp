#include "peirce/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <Eigen/Dense>

#include <json.hpp>

namespace peirce {

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Algebra::Algebra(int dim, std::vector<Complex> tensor, std::string label)
    : n_(dim), tensor_(std::move(tensor)), label_(std::move(label)) {
    if (n_ < 1) throw InputError("algebra dimension must be positive");
    if (n_ > kMaxDim) throw InputError("algebra dimension exceeds the supported maximum of 12");
    const size_t expected = static_cast<size_t>(n_) * n_ * n_;
    if (tensor_.size() != expected) throw InputError("structure tensor has wrong size");
    for (const Complex& z : tensor_) {
        if (!finite(z)) throw InputError("structure tensor contains non-finite entries");
    }
    // Symmetrize in (i,j); silent symmetrization would hide user bugs, so
    // asymmetry beyond 1e-12 is rejected.
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            for (int k = 0; k < n_; ++k) {
                Complex& a = tensor_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
                Complex& b = tensor_[(static_cast<size_t>(j) * n_ + i) * n_ + k];
                if (std::abs(a - b) > 1e-12) {
                    throw InputError("structure tensor is not commutative: c[" + std::to_string(i) +
                                     "][" + std::to_string(j) + "][" + std::to_string(k) +
                                     "] differs from its transpose by more than 1e-12");
                }
                const Complex avg = (a + b) / 2.0;
                a = avg;
                b = avg;
            }
        }
    }
}

void Algebra::check_element(const Vec& x) const {
    if (x.size() != n_) throw InputError("element dimension does not match the algebra");
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
    check_element(x);
    check_element(y);
    Vec out = Vec::Zero(n_);
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0.0) continue;
        for (int j = 0; j < n_; ++j) {
            const Complex xy = x[i] * y[j];
            if (xy == 0.0) continue;
            const size_t base = (static_cast<size_t>(i) * n_ + j) * n_;
            for (int k = 0; k < n_; ++k) out[k] += xy * tensor_[base + k];
        }
    }
    return out;
}

Mat Algebra::left_mult_matrix(const Vec& x) const {
    check_element(x);
    Mat m = Mat::Zero(n_, n_);
    // column j of L_x holds the coordinates of x * e_j
    for (int j = 0; j < n_; ++j) {
        for (int i = 0; i < n_; ++i) {
            if (x[i] == 0.0) continue;
            const size_t base = (static_cast<size_t>(i) * n_ + j) * n_;
            for (int k = 0; k < n_; ++k) m(k, j) += x[i] * tensor_[base + k];
        }
    }
    return m;
}

CharPoly Algebra::char_poly(const Vec& x) const {
    const Mat l = left_mult_matrix(x);
    // Faddeev-LeVerrier trace recursion: the symmetric functions of the
    // spectrum come out of successive traces, exactly in exact arithmetic.
    std::vector<Complex> a(static_cast<size_t>(n_) + 1);
    a[n_] = 1.0;
    Mat acc = Mat::Identity(n_, n_);
    for (int k = 1; k <= n_; ++k) {
        acc = l * acc;
        a[n_ - k] = -acc.trace() / static_cast<double>(k);
        acc += a[n_ - k] * Mat::Identity(n_, n_);
    }
    return CharPoly{std::move(a)};
}

std::optional<Vec> Algebra::find_unit(double unit_tol) const {
    // e * e_j = e_j for all j: n^2 equations in the n coordinates of e.
    Mat sys(n_ * n_, n_);
    Vec rhs = Vec::Zero(n_ * n_);
    for (int j = 0; j < n_; ++j) {
        for (int k = 0; k < n_; ++k) {
            for (int i = 0; i < n_; ++i) sys(j * n_ + k, i) = c(i, j, k);
        }
        rhs[j * n_ + j] = 1.0;
    }
    const Vec e = sys.colPivHouseholderQr().solve(rhs);
    const double residual = (sys * e - rhs).cwiseAbs().maxCoeff();
    if (residual < unit_tol) return e;
    return std::nullopt;
}

Vec Algebra::conjugate_idempotent(const Vec& e, const Vec& cIdem, double tol) const {
    check_element(e);
    check_element(cIdem);
    for (int j = 0; j < n_; ++j) {
        Vec basis = Vec::Zero(n_);
        basis[j] = 1.0;
        if ((multiply(e, basis) - basis).norm() > tol) {
            throw InputError("conjugate_idempotent: e is not the unit of the algebra");
        }
    }
    if ((square(cIdem) - cIdem).norm() > tol * (1.0 + cIdem.norm())) {
        throw InputError("conjugate_idempotent: c is not an idempotent");
    }
    return e - cIdem;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
    const int na = a.dim();
    const int nb = b.dim();
    const int n = na + nb;
    std::vector<Complex> t(static_cast<size_t>(n) * n * n, Complex(0.0));
    auto at = [&](int i, int j, int k) -> Complex& {
        return t[(static_cast<size_t>(i) * n + j) * n + k];
    };
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < na; ++k) at(i, j, k) = a.c(i, j, k);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < nb; ++k) at(na + i, na + j, na + k) = b.c(i, j, k);
    std::string label;
    if (!a.label().empty() || !b.label().empty()) label = a.label() + " + " + b.label();
    return Algebra(n, std::move(t), std::move(label));
}

namespace {

Algebra algebra_from_parsed(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim")) throw InputError("algebra JSON must be an object with a \"dim\" field");
    const int n = j.at("dim").get<int>();
    if (n < 1 || n > kMaxDim) throw InputError("algebra JSON: dim out of range");
    std::vector<Complex> t(static_cast<size_t>(n) * n * n, Complex(0.0));
    std::vector<bool> seen(t.size(), false);
    if (j.contains("tensor")) {
        for (const auto& entry : j.at("tensor")) {
            if (!entry.is_array() || entry.size() != 5) {
                throw InputError("algebra JSON: tensor entries must be [i, j, k, re, im]");
            }
            const int i = entry[0].get<int>();
            const int jj = entry[1].get<int>();
            const int k = entry[2].get<int>();
            if (i < 0 || i >= n || jj < 0 || jj >= n || k < 0 || k >= n) {
                throw InputError("algebra JSON: tensor index out of range");
            }
            const size_t idx = (static_cast<size_t>(i) * n + jj) * n + k;
            if (seen[idx]) throw InputError("algebra JSON: duplicate tensor entry");
            seen[idx] = true;
            t[idx] = Complex(entry[3].get<double>(), entry[4].get<double>());
        }
    }
    std::string label = j.value("label", std::string{});
    return Algebra(n, std::move(t), std::move(label));
}

}  // namespace

Algebra algebra_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return algebra_from_parsed(j);
}

Algebra algebra_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return algebra_from_json(ss.str());
}

std::string algebra_to_json(const Algebra& a) {
    const int n = a.dim();
    std::ostringstream out;
    out.precision(17);
    out << "{\"dim\": " << n << ", \"tensor\": [";
    bool first = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const Complex& z = a.c(i, j, k);
                if (z == 0.0) continue;
                if (!first) out << ", ";
                first = false;
                out << '[' << i << ", " << j << ", " << k << ", " << z.real() << ", " << z.imag()
                    << ']';
            }
        }
    }
    out << "]";
    if (!a.label().empty()) {
        out << ", \"label\": " << nlohmann::json(a.label()).dump();
    }
    out << "}";
    return out.str();
}

}  // namespace peirce
