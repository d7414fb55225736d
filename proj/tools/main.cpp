#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "peirce/report.hpp"

namespace {

using namespace peirce;

struct CommonFlags {
    std::uint64_t seed = 0;
    double track_tol = SolveConfig{}.track_tol;
    double dedup_tol = SolveConfig{}.dedup_tol;
    double cluster_tol = kClusterTol;
    double refine_tol = SolveConfig{}.refine_tol;
    std::string format = "json";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--seed", flags.seed, "random seed (reports are byte-identical per seed)");
    cmd->add_option("--track-tol", flags.track_tol, "path corrector tolerance");
    cmd->add_option("--dedup-tol", flags.dedup_tol, "solution deduplication tolerance");
    cmd->add_option("--cluster-tol", flags.cluster_tol, "eigenvalue clustering tolerance");
    cmd->add_option("--refine-tol", flags.refine_tol, "Newton refinement tolerance");
    cmd->add_option("--format", flags.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", flags.out_path, "write the report to a file instead of stdout");
}

SolveConfig make_config(const CommonFlags& flags) {
    SolveConfig cfg;
    cfg.seed = flags.seed;
    cfg.track_tol = flags.track_tol;
    cfg.dedup_tol = flags.dedup_tol;
    cfg.cluster_tol = flags.cluster_tol;
    cfg.refine_tol = flags.refine_tol;
    return cfg;
}

void emit(const CommonFlags& flags, const std::string& payload) {
    if (flags.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(flags.out_path, std::ios::binary);
        if (!out) throw InputError("cannot write to " + flags.out_path);
        out << payload;
    }
}

struct CatalogParamFlags {
    std::optional<double> alpha, eps, k, n, lambda1, lambda2;

    std::vector<std::pair<std::string, double>> given() const {
        std::vector<std::pair<std::string, double>> out;
        if (alpha) out.emplace_back("alpha", *alpha);
        if (eps) out.emplace_back("eps", *eps);
        if (k) out.emplace_back("k", *k);
        if (n) out.emplace_back("n", *n);
        if (lambda1) out.emplace_back("lambda1", *lambda1);
        if (lambda2) out.emplace_back("lambda2", *lambda2);
        return out;
    }
};

void add_catalog_params(CLI::App* cmd, CatalogParamFlags& p) {
    cmd->add_option("--alpha", p.alpha, "catalog parameter alpha");
    cmd->add_option("--eps", p.eps, "catalog parameter eps");
    cmd->add_option("--k", p.k, "catalog parameter k");
    cmd->add_option("--n", p.n, "catalog parameter n");
    cmd->add_option("--lambda1", p.lambda1, "catalog parameter lambda1");
    cmd->add_option("--lambda2", p.lambda2, "catalog parameter lambda2");
}

Mat parse_inner_product(const std::string& path, int dim) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open inner product file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed inner product JSON: ") + e.what());
    }
    const auto& rows = j.at("matrix");
    const int n = static_cast<int>(rows.size());
    if (n != dim) throw InputError("inner product dimension does not match the algebra");
    Mat b(n, n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const auto& cell = rows[i][k];
            if (cell.is_array()) {
                b(i, k) = Complex(cell[0].get<double>(), cell[1].get<double>());
            } else {
                b(i, k) = Complex(cell.get<double>(), 0.0);
            }
        }
    }
    return b;
}

int run(int argc, char** argv) {
    CLI::App app{"idempotents, Peirce spectra, and spectral syzygies of commutative nonassociative algebras"};
    app.require_subcommand(1);

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "run the full solve/spectral/syzygy pipeline");
    std::string input_path;
    std::string catalog_name;
    CatalogParamFlags analyze_params;
    CommonFlags analyze_flags;
    bool metrised_flag = false;
    std::string inner_product_path;
    analyze_cmd->add_option("input", input_path, "algebra JSON file");
    analyze_cmd->add_option("--catalog", catalog_name, "analyze a catalog algebra instead of a file");
    add_catalog_params(analyze_cmd, analyze_params);
    add_common(analyze_cmd, analyze_flags);
    analyze_cmd->add_flag("--metrised", metrised_flag,
                          "also check association against the Euclidean form");
    analyze_cmd->add_option("--inner-product", inner_product_path,
                            "JSON file with the bilinear form to check against");

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "list or build the named example algebras");
    auto* list_cmd = catalog_cmd->add_subcommand("list", "print catalog names and parameters");
    auto* build_cmd = catalog_cmd->add_subcommand("build", "emit a catalog algebra as JSON");
    std::string build_name;
    CatalogParamFlags build_params;
    CommonFlags build_flags;
    build_cmd->add_option("name", build_name, "catalog name")->required();
    add_catalog_params(build_cmd, build_params);
    build_cmd->add_option("--out", build_flags.out_path, "write to a file instead of stdout");
    catalog_cmd->require_subcommand(1);

    // extremal
    auto* extremal_cmd =
        app.add_subcommand("extremal", "extremal idempotent of a real Euclidean cubic form");
    std::string cubic_path;
    std::string extremal_catalog;
    CatalogParamFlags extremal_params;
    CommonFlags extremal_flags;
    int starts = 32;
    extremal_cmd->add_option("input", cubic_path, "cubic form JSON file");
    extremal_cmd->add_option("--catalog", extremal_catalog, "use a catalog cubic form");
    add_catalog_params(extremal_cmd, extremal_params);
    extremal_cmd->add_option("--starts", starts, "number of multistart ascent runs");
    add_common(extremal_cmd, extremal_flags);

    CLI11_PARSE(app, argc, argv);

    if (analyze_cmd->parsed()) {
        Algebra a = [&]() {
            if (!catalog_name.empty()) return catalog_build(catalog_name, analyze_params.given()).algebra;
            if (input_path.empty()) throw InputError("analyze: give an input file or --catalog");
            return algebra_from_json_file(input_path);
        }();
        AnalyzeOptions opts;
        opts.solve = make_config(analyze_flags);
        opts.run_metrised = metrised_flag;
        if (!inner_product_path.empty()) opts.inner_product = parse_inner_product(inner_product_path, a.dim());
        const AnalysisReport rep = analyze(a, opts);
        emit(analyze_flags, analyze_flags.format == "text" ? report_to_text(rep) : report_to_json(rep));
        return report_exit_code(rep);
    }

    if (list_cmd->parsed()) {
        for (const CatalogDescriptor& d : catalog_descriptors()) {
            std::cout << d.name;
            for (const CatalogParamSpec& p : d.params) {
                std::cout << " --" << p.flag << " (default " << p.default_value << ")";
            }
            std::cout << "  : " << d.summary << (d.has_cubic_form ? " [cubic]" : "") << "\n";
        }
        return 0;
    }

    if (build_cmd->parsed()) {
        const CatalogEntry entry = catalog_build(build_name, build_params.given());
        emit(build_flags, algebra_to_json(entry.algebra) + "\n");
        return 0;
    }

    if (extremal_cmd->parsed()) {
        const CubicForm u = [&]() {
            if (!extremal_catalog.empty()) return catalog_cubic(extremal_catalog, extremal_params.given());
            if (cubic_path.empty()) throw InputError("extremal: give a cubic JSON file or --catalog");
            return cubic_from_json_file(cubic_path);
        }();
        const ExtremalResult res = extremal_idempotent(u, starts, extremal_flags.seed);
        emit(extremal_flags, extremal_to_json(u, res));
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const peirce::InconsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const peirce::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
