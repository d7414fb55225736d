#pragma once

#include <optional>
#include <string>
#include <vector>

#include "peirce/algebra.hpp"
#include "peirce/metrised.hpp"
#include "peirce/spectral.hpp"
#include "peirce/types.hpp"

namespace peirce {

/// Published expectations attached to a catalog algebra, used as test
/// fixtures by the verification suites.
struct CatalogExpected {
    std::optional<int> idempotent_count;       // including the zero idempotent
    std::optional<int> nilpotent_count;
    std::vector<std::vector<Complex>> spectra; // expected nonzero-idempotent spectra (multisets)
    std::optional<GenericityKind> genericity;
    bool infinite_family = false;
};

struct CatalogEntry {
    std::string name;
    std::vector<std::pair<std::string, Complex>> params;
    Algebra algebra;
    std::optional<CatalogExpected> expected;
};

/// Matsuo algebra 3C_alpha: e_i e_j = (alpha/2)(e_i + e_j - e_k).
Algebra matsuo_3c(Complex alpha);
CatalogEntry matsuo_3c_entry(Complex alpha);

/// Generalized Matsuo 3C_{alpha,eps}:
/// e_i e_j = (alpha/2)(e_i + e_j) + ((eps - alpha)/2) e_k.
Algebra generalized_matsuo(Complex alpha, Complex eps);
CatalogEntry generalized_matsuo_entry(Complex alpha, Complex eps);

/// 2D algebra on idempotent basis with c1 c2 = l2 c1 + l1 c2, so that
/// sigma(c1) = {1, l1} and sigma(c2) = {1, l2}.
Algebra two_dim_from_pair(Complex l1, Complex l2);
CatalogEntry two_dim_from_pair_entry(Complex l1, Complex l2);

/// e1^2 = e1, e2^2 = -e1, e1 e2 = -e2; four idempotents, constant nonzero
/// spectrum {1, -1}.
Algebra constant_spectrum_2d();
CatalogEntry constant_spectrum_2d_entry();

/// The 3D algebra whose eight idempotents all carry the cube roots of unity
/// as spectrum (cyclic table c_i c_j = alpha c_i + beta c_j + gamma c_k).
/// The sign pairing of alpha, beta is fixed by verifying the published
/// idempotents c4..c7 at construction.
Algebra constant_spectrum_3d();
CatalogEntry constant_spectrum_3d_entry();
/// The four published non-basis idempotents of constant_spectrum_3d.
std::vector<Vec> constant_spectrum_3d_extra_idempotents();

/// Cubic forms of the catalog; the algebras are derived through
/// algebra_from_cubic with the Euclidean form.
CubicForm cubic_form_u1(int n);
CubicForm cubic_form_u1_eps(Complex eps);
CubicForm cubic_form_u2();
CubicForm cubic_form_circle(double k);  // requires k != 0 and 4k^2 != 2

Algebra cubic_u1(int n);
CatalogEntry cubic_u1_entry(int n);
Algebra cubic_u1_eps(Complex eps);
CatalogEntry cubic_u1_eps_entry(Complex eps);
Algebra cubic_u2();
CatalogEntry cubic_u2_entry();
Algebra cubic_circle(double k);
CatalogEntry cubic_circle_entry(double k);

/// CLI-facing registry.
struct CatalogParamSpec {
    std::string flag;     // e.g. "alpha"
    double default_value;
};
struct CatalogDescriptor {
    std::string name;
    std::string summary;
    std::vector<CatalogParamSpec> params;
    bool has_cubic_form;  // entry can also be built as a cubic form
};

const std::vector<CatalogDescriptor>& catalog_descriptors();

/// Build a catalog entry by name with (real) CLI parameter values; throws
/// InputError on unknown names or out-of-domain parameters.
CatalogEntry catalog_build(const std::string& name,
                           const std::vector<std::pair<std::string, double>>& params);

/// The cubic form behind a cubic catalog entry (InputError for non-cubic names).
CubicForm catalog_cubic(const std::string& name,
                        const std::vector<std::pair<std::string, double>>& params);

}  // namespace peirce
