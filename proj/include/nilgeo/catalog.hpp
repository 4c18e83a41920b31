#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilgeo/acs.hpp"
#include "nilgeo/curvature.hpp"
#include "nilgeo/forms.hpp"
#include "nilgeo/liealg.hpp"

namespace nilgeo {

/// Parameter values by name; rationals only.
using ParamAssignment = std::map<std::string, Rational>;

enum class ParamKind { Free, NonZero, NotZeroOne, OpenUnitInterval };

struct ParamSpec {
    std::string name;
    ParamKind kind = ParamKind::Free;
    /// When set, the parameter is bound (Hermitian relation or default scale):
    /// sample_params derives it instead of sampling, and instantiate fills it
    /// in when absent.
    std::function<Rational(const ParamAssignment&)> derive;
    std::string derive_display;  // human-readable form of the relation
};

std::string constraint_display(const ParamSpec& spec);

enum class RicciSupport { Block2x2, Single11, Unstated };

struct Decomposition {
    std::vector<int> a, b, c;  // 1-based coordinate indices
};

/// One catalog structure: a symplectic nilpotent algebra with its canonical
/// compatible almost complex structure family and the closed-form Ricci data.
struct CatalogEntry {
    std::string id;
    std::string summary;
    std::size_t dim = 6;
    std::vector<BracketTerm> brackets;
    std::function<std::vector<FormTerm>(const ParamAssignment&)> omega_terms;
    std::string omega_display;  // symbolic one-line rendering of the family
    std::function<Matrix(const ParamAssignment&)> jay;
    std::vector<ParamSpec> params;
    /// Expected Ricci matrix as a closed form; absent when no form is stated.
    std::function<Matrix(const ParamAssignment&)> expected_ricci_fn;
    RicciSupport ricci_support = RicciSupport::Block2x2;
    /// Expected outcome of the Hermitian-Ricci test on derived samples;
    /// nullopt when unstated.
    std::optional<bool> hermitian_expected;
    /// Increasing J-invariant ideals as 1-based coordinate index lists
    /// (dims 2 and 4 where both exist).
    std::vector<std::vector<int>> invariant_chain;
    /// J-invariant ideal inside the center, when one exists.
    std::optional<std::vector<int>> central_ideal;
    std::optional<Decomposition> decomposition_abc;
    bool expect_definite_metric = false;  // signature (n,0,0) instead of indefinite
    std::string notes;
};

/// A fully instantiated and validated structure.
struct Instance {
    LieAlgebra algebra;
    TwoForm omega;
    Acs acs;
    Metric metric;
    ParamAssignment params;  // completed (derived entries filled in)
};

/// All entries in catalog order:
/// G1, G1.riem, G2, G3, G4, G5.1-G5.4, G6, G7.1, G7.2, G8, G9, G19, G20, G22.
const std::vector<CatalogEntry>& catalog_entries();

/// Lookup by id; throws Error for unknown ids.
const CatalogEntry& catalog_entry(const std::string& id);
bool catalog_has(const std::string& id);

/// Fills derived parameters, validates constraints (ConstraintError with the
/// violated constraint named), rejects unknown names.
ParamAssignment complete_params(const CatalogEntry& e, const ParamAssignment& given);

/// Builds and validates the full structure; throws ValidationError /
/// ConstraintError on any failure.
Instance instantiate(const std::string& id, const ParamAssignment& params);
Instance instantiate(const CatalogEntry& e, const ParamAssignment& params);

/// The stated closed-form Ricci tensor; throws Error when the entry has none.
Matrix expected_ricci(const std::string& id, const ParamAssignment& params);

/// Deterministic admissible samples: numerators and denominators bounded by
/// 16, constraints respected, bound parameters derived.
std::vector<ParamAssignment> sample_params(const std::string& id, std::size_t count,
                                           std::uint64_t seed);

/// Subspace helpers for the stored index lists.
Subspace chain_subspace(const CatalogEntry& e, const std::vector<int>& indices);

}  // namespace nilgeo
