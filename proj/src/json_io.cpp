#include "nilgeo/json_io.hpp"

#include <cstdio>

#include "nilgeo/errors.hpp"

namespace nilgeo {

std::string float_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

Rational rational_field(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    throw ParseError(where + ": expected a rational string like \"p/q\"");
}

int int_field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw ParseError(where + ": missing integer field \"" + key + "\"");
    return obj[key].get<int>();
}

}  // namespace

InputDocument parse_input_document(const Json& doc) {
    if (!doc.is_object()) throw ParseError("document root must be a JSON object");
    const Json& alg = doc.contains("algebra") ? doc["algebra"] : doc;
    if (!alg.contains("dim")) throw ParseError("algebra: missing \"dim\"");
    if (!alg["dim"].is_number_integer() || alg["dim"].get<int>() < 1)
        throw ParseError("algebra.dim: expected a positive integer");
    std::size_t dim = alg["dim"].get<std::size_t>();
    std::vector<BracketTerm> brackets;
    if (alg.contains("brackets")) {
        if (!alg["brackets"].is_array()) throw ParseError("algebra.brackets: expected array");
        std::size_t n = 0;
        for (const auto& b : alg["brackets"]) {
            std::string where = "algebra.brackets[" + std::to_string(n++) + "]";
            BracketTerm t;
            t.i = int_field(b, "i", where);
            t.j = int_field(b, "j", where);
            if (!b.contains("coeffs") || !b["coeffs"].is_object())
                throw ParseError(where + ": missing object field \"coeffs\"");
            for (const auto& [k, v] : b["coeffs"].items()) {
                int kk = 0;
                try {
                    kk = std::stoi(k);
                } catch (...) {
                    throw ParseError(where + ".coeffs: key \"" + k + "\" is not an index");
                }
                t.coeffs[kk] = rational_field(v, where + ".coeffs[\"" + k + "\"]");
            }
            brackets.push_back(std::move(t));
        }
    }
    LieAlgebra algebra(dim, brackets);  // validates antisymmetry + Jacobi

    if (!doc.contains("omega")) throw ParseError("missing \"omega\" fragment");
    const Json& om = doc["omega"];
    if (!om.is_array()) throw ParseError("omega: expected an array of {i, j, value}");
    std::vector<FormTerm> terms;
    std::size_t n = 0;
    for (const auto& t : om) {
        std::string where = "omega[" + std::to_string(n++) + "]";
        FormTerm ft;
        ft.i = int_field(t, "i", where);
        ft.j = int_field(t, "j", where);
        if (!t.contains("value")) throw ParseError(where + ": missing \"value\"");
        ft.value = rational_field(t["value"], where + ".value");
        terms.push_back(std::move(ft));
    }
    TwoForm omega = TwoForm::from_terms(dim, terms);

    std::optional<Acs> acs;
    if (doc.contains("J")) {
        const Json& jm = doc["J"];
        if (!jm.is_array() || jm.size() != dim)
            throw ParseError("J: expected a " + std::to_string(dim) + "-row matrix");
        Matrix m(dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
            if (!jm[r].is_array() || jm[r].size() != dim)
                throw ParseError("J[" + std::to_string(r) + "]: expected " +
                                 std::to_string(dim) + " entries");
            for (std::size_t c = 0; c < dim; ++c)
                m(r, c) = rational_field(jm[r][c], "J[" + std::to_string(r) + "][" +
                                                      std::to_string(c) + "]");
        }
        acs = Acs(std::move(m));
    }

    ParamAssignment params;
    if (doc.contains("params")) {
        if (!doc["params"].is_object()) throw ParseError("params: expected an object");
        for (const auto& [k, v] : doc["params"].items())
            params[k] = rational_field(v, "params." + k);
    }
    return InputDocument{std::move(algebra), std::move(omega), std::move(acs),
                         std::move(params)};
}

Json algebra_to_json(const LieAlgebra& l) {
    Json out;
    out["dim"] = l.dim();
    Json brackets = Json::array();
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
            Json coeffs = Json::object();
            for (std::size_t k = 0; k < l.dim(); ++k)
                if (!l.c(k, i, j).is_zero())
                    coeffs[std::to_string(k + 1)] = l.c(k, i, j).str();
            if (!coeffs.empty()) {
                Json b;
                b["i"] = i + 1;
                b["j"] = j + 1;
                b["coeffs"] = coeffs;
                brackets.push_back(b);
            }
        }
    out["brackets"] = brackets;
    return out;
}

Json omega_to_json(const TwoForm& w) {
    Json terms = Json::array();
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = i + 1; j < w.dim(); ++j)
            if (!w(i, j).is_zero()) {
                Json t;
                t["i"] = i + 1;
                t["j"] = j + 1;
                t["value"] = w(i, j).str();
                terms.push_back(t);
            }
    return terms;
}

Json jmatrix_to_json(const Matrix& j) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < j.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < j.cols(); ++c) row.push_back(j(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

Json params_to_json(const ParamAssignment& p) {
    Json out = Json::object();
    for (const auto& [k, v] : p) out[k] = v.str();
    return out;
}

Json curvature_report_to_json(const CurvatureReport& rep) {
    std::size_t n = rep.ricci_tensor.rows();
    Json out;
    out["format_version"] = kFormatVersion;
    Json gamma = Json::array();
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!rep.connection.gamma(m, i, j).is_zero()) {
                    Json g;
                    g["n"] = m + 1;
                    g["i"] = i + 1;
                    g["j"] = j + 1;
                    g["value"] = rep.connection.gamma(m, i, j).str();
                    gamma.push_back(g);
                }
    out["gamma"] = gamma;
    Json rnz = Json::array();
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!rep.riemann_tensor(s, i, j, k).is_zero()) {
                        Json r;
                        r["s"] = s + 1;
                        r["i"] = i + 1;
                        r["j"] = j + 1;
                        r["k"] = k + 1;
                        r["value"] = rep.riemann_tensor(s, i, j, k).str();
                        rnz.push_back(r);
                    }
    out["riemann_nonzero"] = rnz;
    Json ric = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(rep.ricci_tensor(i, j).str());
        ric.push_back(row);
    }
    out["ricci"] = ric;
    out["scalar"] = rep.scalar.str();
    out["RR"] = rep.scalar_square.str();
    out["hermitian_ricci"] = rep.hermitian_ricci;
    out["signature"] = Json::array({rep.signature.positive, rep.signature.negative,
                                    rep.signature.null});
    return out;
}

Json report_to_json(const Report& rep) {
    Json out;
    out["entry"] = rep.entry;
    out["params"] = params_to_json(rep.params);
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json j;
        j["name"] = c.name;
        j["status"] = to_string(c.status);
        if (c.residual) j["residual"] = *c.residual;
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(j);
    }
    out["checks"] = checks;
    return out;
}

Json run_result_to_json(const RunResult& run, std::size_t samples, std::uint64_t seed) {
    Json out;
    out["format_version"] = kFormatVersion;
    out["suite_version"] = kCheckSuiteVersion;
    out["check_names"] = check_names();
    out["samples"] = samples;
    out["seed"] = seed;
    Json reports = Json::array();
    for (const auto& r : run.reports) reports.push_back(report_to_json(r));
    out["reports"] = reports;
    Json per = Json::object();
    for (const auto& [name, counts] : run.summary.per_check) {
        Json c;
        c["pass"] = counts[0];
        c["fail"] = counts[1];
        c["inconclusive"] = counts[2];
        per[name] = c;
    }
    Json sum;
    sum["entries"] = run.summary.entries;
    sum["reports"] = run.summary.reports;
    sum["checks_passed"] = run.summary.passed;
    sum["checks_failed"] = run.summary.failed;
    sum["checks_inconclusive"] = run.summary.inconclusive;
    sum["per_check"] = per;
    out["summary"] = sum;
    return out;
}

namespace {

Json float_matrix_to_json(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(float_str(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

Json solve_result_to_json(const SolveResult& sr) {
    Json out;
    out["format_version"] = kFormatVersion;
    out["converged"] = sr.converged;
    out["iterations"] = sr.iterations;
    out["restarts_used"] = sr.restarts_used;
    out["residual_norm"] = float_str(sr.residual_norm);
    out["j_square_residual"] = float_str(sr.residuals.j_square);
    out["compat_residual"] = float_str(sr.residuals.compat);
    out["J"] = float_matrix_to_json(sr.j);
    return out;
}

Json probe_report_to_json(const ProbeReport& rep, double tolerance) {
    Json out;
    out["format_version"] = kFormatVersion;
    out["probe"] = "param_independence";
    out["tolerance"] = float_str(tolerance);
    Json assigns = Json::array();
    for (const auto& a : rep.assignments) {
        Json ja;
        Json cells = Json::array();
        for (const auto& [rc, v] : a.cells) {
            Json c;
            c["r"] = rc.first + 1;
            c["c"] = rc.second + 1;
            c["value"] = float_str(v);
            cells.push_back(c);
        }
        ja["cells"] = cells;
        ja["feasible"] = a.feasible;
        ja["off_hypothesis"] = a.off_hypothesis;
        ja["j_square_residual"] = float_str(a.residuals.j_square);
        ja["compat_residual"] = float_str(a.residuals.compat);
        assigns.push_back(ja);
    }
    out["assignments"] = assigns;
    out["max_gamma_deviation"] = float_str(rep.max_gamma_deviation);
    out["max_riemann_deviation"] = float_str(rep.max_riemann_deviation);
    out["max_ricci_deviation"] = float_str(rep.max_ricci_deviation);
    out["all_feasible"] = rep.all_feasible;
    out["lemma_confirmed"] = rep.lemma_confirmed;
    if (!rep.note.empty()) out["note"] = rep.note;
    return out;
}

Json zero_curvature_report_to_json(const ZeroCurvatureReport& rep, double tolerance) {
    Json out;
    out["format_version"] = kFormatVersion;
    out["probe"] = "zero_curvature";
    out["tolerance"] = float_str(tolerance);
    out["trials"] = rep.trials;
    out["converged"] = rep.converged;
    out["max_abs_riemann"] = float_str(rep.max_abs_riemann);
    out["passed"] = rep.passed;
    return out;
}

Json entry_to_json(const CatalogEntry& e) {
    Json out;
    out["format_version"] = kFormatVersion;
    out["id"] = e.id;
    out["summary"] = e.summary;
    out["dim"] = e.dim;
    Json brackets = Json::array();
    for (const auto& b : e.brackets) {
        Json jb;
        jb["i"] = b.i;
        jb["j"] = b.j;
        Json coeffs = Json::object();
        for (const auto& [k, v] : b.coeffs) coeffs[std::to_string(k)] = v.str();
        jb["coeffs"] = coeffs;
        brackets.push_back(jb);
    }
    out["brackets"] = brackets;
    out["omega"] = e.omega_display;
    Json params = Json::array();
    for (const auto& s : e.params) {
        Json jp;
        jp["name"] = s.name;
        jp["constraint"] = constraint_display(s);
        params.push_back(jp);
    }
    out["params"] = params;
    // a concrete instance at the first seeded sample, for machine consumers
    auto sample = sample_params(e.id, 1, 42).front();
    Instance inst = instantiate(e, sample);
    Json ex;
    ex["params"] = params_to_json(inst.params);
    ex["omega"] = omega_to_json(inst.omega);
    ex["J"] = jmatrix_to_json(inst.acs.matrix());
    out["example"] = ex;
    Json chain = Json::array();
    for (const auto& idx : e.invariant_chain) chain.push_back(idx);
    out["invariant_chain"] = chain;
    if (!e.notes.empty()) out["notes"] = e.notes;
    return out;
}

}  // namespace nilgeo
