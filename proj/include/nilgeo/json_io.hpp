#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "nilgeo/catalog.hpp"
#include "nilgeo/curvature.hpp"
#include "nilgeo/solver.hpp"
#include "nilgeo/verify.hpp"

namespace nilgeo {

/// Insertion-ordered JSON keeps serialized reports byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Parsed user-supplied structure document: the shared algebra / omega / J
/// fragments plus an optional parameter map. Fragments may be nested under
/// their own keys or supplied flat.
struct InputDocument {
    LieAlgebra algebra;
    TwoForm omega;
    std::optional<Acs> acs;
    ParamAssignment params;
};

/// Throws ParseError / ValidationError with the offending field named.
InputDocument parse_input_document(const Json& doc);

Json algebra_to_json(const LieAlgebra& l);
Json omega_to_json(const TwoForm& w);
Json jmatrix_to_json(const Matrix& j);
Json params_to_json(const ParamAssignment& p);

Json curvature_report_to_json(const CurvatureReport& rep);

Json report_to_json(const Report& rep);
Json run_result_to_json(const RunResult& run, std::size_t samples, std::uint64_t seed);

Json solve_result_to_json(const SolveResult& sr);
Json probe_report_to_json(const ProbeReport& rep, double tolerance);
Json zero_curvature_report_to_json(const ZeroCurvatureReport& rep, double tolerance);

Json entry_to_json(const CatalogEntry& e);

/// Floats serialized with 17 significant digits.
std::string float_str(double v);

}  // namespace nilgeo
