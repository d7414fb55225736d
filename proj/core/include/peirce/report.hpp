#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "peirce/catalog.hpp"
#include "peirce/metrised.hpp"
#include "peirce/solve.hpp"
#include "peirce/spectral.hpp"
#include "peirce/syzygy.hpp"

namespace peirce {

inline constexpr const char* kToolName = "peirce";
inline constexpr const char* kToolVersion = "0.1.0";

struct AnalyzeOptions {
    SolveConfig solve;
    bool run_metrised = false;                  // check against the Euclidean form
    std::optional<Mat> inner_product;           // explicit B overrides
    std::vector<Complex> syzygy_samples = default_syzygy_samples();
};

/// Everything one run of the pipeline produces. Inconsistencies collect
/// theory violations (a generic verdict with a failing syzygy, a root-of-unity
/// violation); the CLI maps a nonempty list to exit code 2.
struct AnalysisReport {
    std::string algebra_label;
    int dim = 0;
    std::uint64_t seed = 0;
    IdempotentSet set;
    GenericityVerdict verdict;
    std::vector<Complex> spectrum;              // algebra spectrum
    std::optional<SyzygyReport> syzygies;       // when generic
    std::optional<ConstantSpectrumReport> constant_spectrum;   // when generic
    std::optional<CommonEigenvalueReport> common_eigenvalues;  // when generic
    std::optional<Vec> unit;
    std::vector<std::pair<int, int>> conjugate_pairs;  // record indices, unit paired with 0
    std::optional<MetrisedCheck> metrised;
    std::vector<std::string> inconsistencies;
};

/// solve -> spectral -> syzygies (if generic) -> metrised checks.
AnalysisReport analyze(const Algebra& a, const AnalyzeOptions& opts = {});

/// 0 clean, 2 when the pipeline ran but found a theory inconsistency.
int report_exit_code(const AnalysisReport& r);

/// Deterministic JSON with every floating value printed to 17 significant
/// digits (round-trip exact).
std::string report_to_json(const AnalysisReport& r);

/// Human-readable summary.
std::string report_to_text(const AnalysisReport& r);

/// Extremal-search report for the CLI (f-value, idempotent, spectrum, the
/// 1/2 bound, fusion value when 1/2 is in the spectrum).
std::string extremal_to_json(const CubicForm& u, const ExtremalResult& res);

}  // namespace peirce
