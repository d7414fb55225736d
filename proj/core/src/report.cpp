#include "peirce/report.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace peirce {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json complex_json(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json vec_json(const Vec& v) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(complex_json(v[i]));
    return arr;
}

ordered_json record_json(const IdempotentRecord& rec) {
    ordered_json j;
    j["point"] = vec_json(rec.point);
    j["residual"] = rec.residual;
    j["charpoly"] = vec_json(Eigen::Map<const Vec>(rec.charpoly.coeffs.data(),
                                                   static_cast<Eigen::Index>(rec.charpoly.coeffs.size())));
    ordered_json spec = ordered_json::array();
    for (const Spectrum::Root& r : rec.spectrum.roots) {
        spec.push_back({{"value", complex_json(r.value)}, {"multiplicity", r.multiplicity}});
    }
    j["spectrum"] = std::move(spec);
    ordered_json dims = ordered_json::array();
    for (const auto& [val, d] : rec.peirce_dims) {
        dims.push_back({{"eigenvalue", complex_json(val)}, {"dimension", d}});
    }
    j["peirce_dims"] = std::move(dims);
    j["semisimple"] = rec.semisimple;
    j["regular"] = rec.regular;
    j["is_real"] = rec.is_real;
    j["jacobian_min_singular_value"] = rec.jacobian_min_singular_value;
    j["multiplicity_estimate"] = rec.multiplicity_estimate;
    if (rec.extremal) j["extremal"] = true;
    return j;
}

/// JSON writer with every float at 17 significant digits so emitted reports
/// are round-trip exact and byte-stable.
void dump17(const ordered_json& j, std::string& out) {
    switch (j.type()) {
        case ordered_json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += ordered_json(it.key()).dump();
                out += ':';
                dump17(it.value(), out);
            }
            out += '}';
            break;
        }
        case ordered_json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& el : j) {
                if (!first) out += ',';
                first = false;
                dump17(el, out);
            }
            out += ']';
            break;
        }
        case ordered_json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
            } else {
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.17g", v);
                out += buf;
            }
            break;
        }
        default:
            out += j.dump();
            break;
    }
}

ordered_json build_report_json(const AnalysisReport& r) {
    ordered_json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["algebra"] = {{"label", r.algebra_label}, {"dim", r.dim}};
    j["solver"] = {{"seed", r.seed},
                   {"paths_total", r.set.paths_total},
                   {"paths_failed", r.set.paths_failed},
                   {"paths_at_infinity", r.set.paths_at_infinity},
                   {"exhaustive", r.set.exhaustive},
                   {"has_infinite_family", r.set.has_infinite_family}};
    ordered_json idems = ordered_json::array();
    for (const IdempotentRecord& rec : r.set.idempotents) idems.push_back(record_json(rec));
    j["idempotents"] = std::move(idems);
    ordered_json nils = ordered_json::array();
    for (const Vec& d : r.set.nilpotent_directions) nils.push_back(vec_json(d));
    j["nilpotent_directions"] = std::move(nils);
    j["genericity"] = {{"kind", to_string(r.verdict.kind)}, {"evidence", r.verdict.evidence}};
    ordered_json spec = ordered_json::array();
    for (const Complex& z : r.spectrum) spec.push_back(complex_json(z));
    j["algebra_spectrum"] = std::move(spec);
    if (r.unit) {
        ordered_json u;
        u["unit"] = vec_json(*r.unit);
        ordered_json pairs = ordered_json::array();
        for (const auto& [a, b] : r.conjugate_pairs) pairs.push_back(ordered_json::array({a, b}));
        u["conjugate_pairs"] = std::move(pairs);
        j["unital"] = std::move(u);
    } else {
        j["unital"] = nullptr;
    }
    if (r.syzygies) {
        ordered_json s;
        s["principal_max_residual"] = r.syzygies->principal_max_residual;
        s["derivative_residuals"] = r.syzygies->derivative_residuals;
        s["vector_residual"] = r.syzygies->vector_residual;
        s["idemm_max_residual"] = r.syzygies->idemm_max_residual;
        s["idemm1_max_residual"] = r.syzygies->idemm1_max_residual;
        if (r.syzygies->unital) {
            ordered_json u;
            u["p1_max_residual"] = r.syzygies->unital->p1_max_residual;
            if (r.syzygies->unital->half41_residual) {
                u["half41_residual"] = *r.syzygies->unital->half41_residual;
            } else {
                u["half41_residual"] = nullptr;
            }
            s["unital"] = std::move(u);
        } else {
            s["unital"] = nullptr;
        }
        ordered_json samples = ordered_json::array();
        for (const Complex& t : r.syzygies->samples) samples.push_back(complex_json(t));
        s["samples"] = std::move(samples);
        j["syzygies"] = std::move(s);
    } else {
        j["syzygies"] = nullptr;
    }
    if (r.constant_spectrum) {
        j["constant_spectrum"] = {{"constant", r.constant_spectrum->constant},
                                  {"roots_of_unity_ok", r.constant_spectrum->roots_of_unity_ok},
                                  {"report", r.constant_spectrum->report}};
    } else {
        j["constant_spectrum"] = nullptr;
    }
    if (r.common_eigenvalues) {
        ordered_json vals = ordered_json::array();
        for (const Complex& z : r.common_eigenvalues->common) vals.push_back(complex_json(z));
        j["common_eigenvalues"] = {{"values", std::move(vals)},
                                   {"verified", r.common_eigenvalues->verified},
                                   {"report", r.common_eigenvalues->report}};
    } else {
        j["common_eigenvalues"] = nullptr;
    }
    if (r.metrised) {
        j["metrised"] = {{"ok", r.metrised->ok}, {"max_violation", r.metrised->max_violation}};
    } else {
        j["metrised"] = nullptr;
    }
    j["inconsistencies"] = r.inconsistencies;
    return j;
}

}  // namespace

AnalysisReport analyze(const Algebra& a, const AnalyzeOptions& opts) {
    AnalysisReport rep;
    rep.algebra_label = a.label();
    rep.dim = a.dim();
    rep.seed = opts.solve.seed;
    rep.set = solve_idempotents(a, opts.solve);
    rep.verdict = classify_genericity(rep.set, opts.solve.cluster_tol);
    rep.spectrum = algebra_spectrum(rep.set, opts.solve.cluster_tol);
    rep.unit = a.find_unit();
    if (rep.unit) {
        // Pair each record index with its conjugate partner's index.
        const auto& recs = rep.set.idempotents;
        std::vector<bool> used(recs.size(), false);
        for (size_t i = 0; i < recs.size(); ++i) {
            if (used[i]) continue;
            const Vec conj = *rep.unit - recs[i].point;
            for (size_t j = 0; j < recs.size(); ++j) {
                if (j == i || used[j]) continue;
                if ((recs[j].point - conj).norm() <= 1e-6 * (1.0 + conj.norm())) {
                    used[i] = used[j] = true;
                    rep.conjugate_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
                    break;
                }
            }
        }
    }
    if (rep.verdict.kind == GenericityKind::generic) {
        try {
            rep.syzygies = verify_syzygies(rep.set, opts.syzygy_samples);
            const SyzygyReport& s = *rep.syzygies;
            double worst = std::max({s.principal_max_residual, s.vector_residual,
                                     s.idemm_max_residual, s.idemm1_max_residual});
            for (double d : s.derivative_residuals) worst = std::max(worst, d);
            if (s.unital) {
                worst = std::max(worst, s.unital->p1_max_residual);
                if (s.unital->half41_residual) worst = std::max(worst, *s.unital->half41_residual);
            }
            if (worst > 1e-6) {
                std::ostringstream msg;
                msg << "generic verdict but a syzygy residual reaches " << worst;
                rep.inconsistencies.push_back(msg.str());
            }
        } catch (const InconsistencyError& e) {
            rep.inconsistencies.push_back(e.what());
        }
        rep.constant_spectrum = constant_spectrum_check(rep.set, opts.solve.cluster_tol);
        if (rep.constant_spectrum->inconsistency) {
            rep.inconsistencies.push_back("constant spectrum check: " + rep.constant_spectrum->report);
        }
        rep.common_eigenvalues = common_eigenvalue_check(rep.set, opts.solve.cluster_tol);
        if (rep.common_eigenvalues->inconsistency) {
            rep.inconsistencies.push_back("common eigenvalue check: " + rep.common_eigenvalues->report);
        }
    }
    if (rep.verdict.kind == GenericityKind::undetermined && rep.set.exhaustive) {
        // Exhaustive solve that still defies classification contradicts the
        // genericity dichotomy.
        rep.inconsistencies.push_back("classification: " + rep.verdict.evidence);
    }
    if (opts.run_metrised || opts.inner_product) {
        const InnerProduct b = opts.inner_product ? InnerProduct(*opts.inner_product)
                                                  : InnerProduct::euclidean(a.dim());
        rep.metrised = metrised_check(a, b);
    }
    return rep;
}

int report_exit_code(const AnalysisReport& r) { return r.inconsistencies.empty() ? 0 : 2; }

std::string report_to_json(const AnalysisReport& r) {
    std::string out;
    dump17(build_report_json(r), out);
    out += '\n';
    return out;
}

namespace {

std::string complex_text(const Complex& z) {
    std::ostringstream ss;
    ss.precision(12);
    if (std::abs(z.imag()) < 1e-12) {
        ss << z.real();
    } else {
        ss << z.real() << (z.imag() >= 0 ? "+" : "") << z.imag() << "i";
    }
    return ss.str();
}

}  // namespace

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << kToolName << ' ' << kToolVersion << " analysis of '" << r.algebra_label << "' (dim "
        << r.dim << ", seed " << r.seed << ")\n";
    out << "paths: " << r.set.paths_total << " total, " << r.set.paths_failed << " failed, "
        << r.set.paths_at_infinity << " at infinity\n";
    out << "idempotents (" << r.set.idempotents.size() << "):\n";
    for (const IdempotentRecord& rec : r.set.idempotents) {
        out << "  [";
        for (int i = 0; i < rec.point.size(); ++i) {
            if (i) out << ", ";
            out << complex_text(rec.point[i]);
        }
        out << "]  spectrum {";
        for (size_t i = 0; i < rec.spectrum.roots.size(); ++i) {
            const auto& root = rec.spectrum.roots[i];
            if (i) out << ", ";
            out << complex_text(root.value);
            if (root.multiplicity > 1) out << "^" << root.multiplicity;
        }
        out << "}  residual " << rec.residual << (rec.regular ? "" : "  [1/2 in spectrum]")
            << (rec.is_real ? "" : "  [complex]") << "\n";
    }
    out << "nilpotent directions: " << r.set.nilpotent_directions.size() << "\n";
    for (const Vec& d : r.set.nilpotent_directions) {
        out << "  [";
        for (int i = 0; i < d.size(); ++i) {
            if (i) out << ", ";
            out << complex_text(d[i]);
        }
        out << "]\n";
    }
    out << "genericity: " << to_string(r.verdict.kind) << " (" << r.verdict.evidence << ")\n";
    out << "algebra spectrum: {";
    for (size_t i = 0; i < r.spectrum.size(); ++i) {
        if (i) out << ", ";
        out << complex_text(r.spectrum[i]);
    }
    out << "}\n";
    if (r.unit) {
        out << "unit: [";
        for (int i = 0; i < r.unit->size(); ++i) {
            if (i) out << ", ";
            out << complex_text((*r.unit)[i]);
        }
        out << "], " << r.conjugate_pairs.size() << " conjugate pairs\n";
    }
    if (r.syzygies) {
        out << "syzygy residuals: principal " << r.syzygies->principal_max_residual << ", vector "
            << r.syzygies->vector_residual << ", idemm " << r.syzygies->idemm_max_residual
            << ", idemm1 " << r.syzygies->idemm1_max_residual << "\n";
        out << "  derivative residuals:";
        for (double d : r.syzygies->derivative_residuals) out << ' ' << d;
        out << "\n";
        if (r.syzygies->unital) {
            out << "  unital P1 " << r.syzygies->unital->p1_max_residual;
            if (r.syzygies->unital->half41_residual) {
                out << ", half41 " << *r.syzygies->unital->half41_residual;
            }
            out << "\n";
        }
    }
    if (r.constant_spectrum) out << "constant spectrum: " << r.constant_spectrum->report << "\n";
    if (r.common_eigenvalues) out << "common eigenvalues: " << r.common_eigenvalues->report << "\n";
    if (r.metrised) {
        out << "metrised check: " << (r.metrised->ok ? "pass" : "FAIL") << " (max violation "
            << r.metrised->max_violation << ")\n";
    }
    if (!r.inconsistencies.empty()) {
        out << "INCONSISTENCIES:\n";
        for (const std::string& s : r.inconsistencies) out << "  " << s << "\n";
    }
    return out.str();
}

std::string extremal_to_json(const CubicForm& u, const ExtremalResult& res) {
    ordered_json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["cubic_dim"] = u.dim();
    j["f_value"] = res.f_value;
    j["starts"] = res.starts_used;
    j["idempotent"] = record_json(res.record);
    double max_off_one = -1e300;
    bool half_in_spectrum = false;
    for (const Spectrum::Root& r : res.record.spectrum.roots) {
        if (std::abs(r.value - 1.0) <= kClusterTol) continue;
        max_off_one = std::max(max_off_one, r.value.real());
        if (std::abs(r.value - 0.5) <= kClusterTol) half_in_spectrum = true;
    }
    j["max_re_spectrum_off_one"] = max_off_one;
    j["half_bound_ok"] = max_off_one <= 0.5 + 1e-8;
    if (half_in_spectrum) {
        const Algebra a = algebra_from_cubic(u, InnerProduct::euclidean(u.dim()));
        j["fusion_violation"] =
            fusion_check(a, InnerProduct::euclidean(u.dim()), res.record);
    } else {
        j["fusion_violation"] = nullptr;
    }
    std::string out;
    dump17(j, out);
    out += '\n';
    return out;
}

}  // namespace peirce
