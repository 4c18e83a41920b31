#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilgeo/json_io.hpp"

namespace py = pybind11;
using namespace nilgeo;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null:
            return py::none();
        case Json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case Json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float:
            return py::float_(j.get<double>());
        case Json::value_t::string:
            return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
            return out;
        }
        default:
            return py::none();
    }
}

ParamAssignment params_from_dict(const py::dict& d) {
    ParamAssignment p;
    for (const auto& item : d) {
        std::string key = py::cast<std::string>(item.first);
        if (py::isinstance<py::int_>(item.second))
            p[key] = Rational(static_cast<long>(py::cast<long long>(item.second)));
        else
            p[key] = Rational::parse(py::cast<std::string>(item.second));
    }
    return p;
}

}  // namespace

PYBIND11_MODULE(nilgeopy, m) {
    m.doc() = "exact curvature engine for six-dimensional nilpotent symplectic Lie groups";

    m.def("list_entries", []() {
        py::list out;
        for (const auto& e : catalog_entries()) out.append(py::make_tuple(e.id, e.summary));
        return out;
    });

    m.def(
        "show_entry",
        [](const std::string& id) { return json_to_py(entry_to_json(catalog_entry(id))); },
        py::arg("id"));

    m.def(
        "sample_params",
        [](const std::string& id, std::size_t count, std::uint64_t seed) {
            py::list out;
            for (const auto& p : sample_params(id, count, seed))
                out.append(json_to_py(params_to_json(p)));
            return out;
        },
        py::arg("id"), py::arg("count"), py::arg("seed"));

    m.def(
        "instantiate",
        [](const std::string& id, const py::dict& params) {
            Instance inst = instantiate(id, params_from_dict(params));
            Json out;
            out["params"] = params_to_json(inst.params);
            out["algebra"] = algebra_to_json(inst.algebra);
            out["omega"] = omega_to_json(inst.omega);
            out["J"] = jmatrix_to_json(inst.acs.matrix());
            out["metric"] = jmatrix_to_json(inst.metric.matrix());
            const auto& s = inst.metric.signature();
            out["signature"] = Json::array({s.positive, s.negative, s.null});
            return json_to_py(out);
        },
        py::arg("id"), py::arg("params"));

    m.def(
        "expected_ricci",
        [](const std::string& id, const py::dict& params) {
            return json_to_py(jmatrix_to_json(expected_ricci(id, params_from_dict(params))));
        },
        py::arg("id"), py::arg("params"));

    m.def(
        "curvature_report",
        [](const std::string& id, const py::dict& params) {
            Instance inst = instantiate(id, params_from_dict(params));
            CurvatureReport rep = compute_report(inst.algebra, inst.omega, inst.acs);
            return json_to_py(curvature_report_to_json(rep));
        },
        py::arg("id"), py::arg("params"),
        "full exact curvature report for a catalog structure");

    m.def(
        "curvature_report_for_document",
        [](const std::string& document_json) {
            InputDocument doc = parse_input_document(Json::parse(document_json));
            if (!doc.acs) throw ParseError("document must carry a \"J\" fragment");
            CurvatureReport rep = compute_report(doc.algebra, doc.omega, *doc.acs);
            return json_to_py(curvature_report_to_json(rep));
        },
        py::arg("document_json"),
        "curvature report for a user-supplied JSON structure document");

    m.def(
        "run_suite",
        [](const std::string& id, std::size_t samples, std::uint64_t seed) {
            RunResult run;
            run.reports = run_suite(id, samples, seed);
            run.summary = summarize(run.reports, 1);
            return json_to_py(run_result_to_json(run, samples, seed));
        },
        py::arg("id"), py::arg("samples") = 20, py::arg("seed") = 42);

    m.def(
        "run_all",
        [](std::size_t samples, std::uint64_t seed) {
            RunResult run = run_all(samples, seed);
            return json_to_py(run_result_to_json(run, samples, seed));
        },
        py::arg("samples") = 20, py::arg("seed") = 42);

    m.def(
        "solve_compatible_acs",
        [](const std::string& id, std::uint64_t seed, double tol) {
            const auto& e = catalog_entry(id);
            auto params = sample_params(id, 1, 42).front();
            auto inst = instantiate(e, params);
            SolveOptions opts;
            opts.seed = seed;
            opts.tolerance = tol;
            opts.initial = to_float(inst.acs.matrix());
            SolveResult sr = solve_compatible_acs(to_float(inst.omega.matrix()),
                                                  PatternSpec::for_entry(e, params), opts);
            return json_to_py(solve_result_to_json(sr));
        },
        py::arg("id"), py::arg("seed") = 0, py::arg("tolerance") = 1e-10);

    m.def(
        "zero_curvature_probe",
        [](std::size_t trials, std::uint64_t seed, double tol) {
            LieAlgebra ab = LieAlgebra::abelian(6);
            TwoForm w = TwoForm::from_terms(6, {{1, 2, 1}, {3, 4, 1}, {5, 6, 1}});
            return json_to_py(
                zero_curvature_report_to_json(zero_curvature_probe(ab, w, trials, seed, tol),
                                              tol));
        },
        py::arg("trials") = 20, py::arg("seed") = 0, py::arg("tolerance") = 1e-9);

    m.def(
        "param_independence_probe",
        [](const std::string& id, const py::dict& params,
           const std::vector<std::map<std::pair<std::size_t, std::size_t>, double>>& assigns,
           double tol) {
            std::vector<std::map<std::pair<std::size_t, std::size_t>, double>> shifted;
            for (const auto& a : assigns) {
                std::map<std::pair<std::size_t, std::size_t>, double> m2;
                for (const auto& [rc, v] : a) {
                    if (rc.first < 1 || rc.second < 1)
                        throw Error("probe cells are 1-based (row, col)");
                    m2[{rc.first - 1, rc.second - 1}] = v;
                }
                shifted.push_back(m2);
            }
            auto rep = param_independence_probe(catalog_entry(id), params_from_dict(params),
                                                shifted, tol);
            return json_to_py(probe_report_to_json(rep, tol));
        },
        py::arg("id"), py::arg("params"), py::arg("assignments"),
        py::arg("tolerance") = 1e-8,
        "vary center-row entries; assignments are lists of {(row, col): value} with "
        "1-based cells");

    py::register_exception<ConstraintError>(m, "ConstraintError");
    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<ValidationError>(m, "ValidationError");
}
