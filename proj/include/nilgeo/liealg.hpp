#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilgeo/matrix.hpp"
#include "nilgeo/tensor.hpp"

namespace nilgeo {

/// One nonzero bracket [e_i, e_j] = sum_k coeffs[k] e_k, 1-based, i < j.
struct BracketTerm {
    int i = 0;
    int j = 0;
    std::map<int, Rational> coeffs;
};

struct JacobiViolation {
    int i, j, k;          // 1-based basis triple
    std::vector<Rational> residual;  // components of the Jacobi sum
};

/// All basis triples violating the Jacobi identity for the given structure
/// tensor C(k,i,j) (empty means valid).
std::vector<JacobiViolation> jacobi_violations(const Tensor3& c);

struct NilpotencyData {
    std::size_t nilpotency_class = 0;
    std::vector<std::size_t> type_sequence;  // dims of the ascending series
    bool is_filiform = false;
};

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k C(k,i,j) e_k. Construction validates antisymmetry and
/// the Jacobi identity; immutable afterwards.
class LieAlgebra {
public:
    LieAlgebra(std::size_t dim, const std::vector<BracketTerm>& brackets);

    static LieAlgebra abelian(std::size_t dim);
    /// Bypasses validation; used by fault-injection fixtures.
    static LieAlgebra unchecked(std::size_t dim, Tensor3 constants);

    std::size_t dim() const { return dim_; }
    /// 0-based structure constant C^k_{ij}.
    const Rational& c(std::size_t k, std::size_t i, std::size_t j) const {
        return c_(k, i, j);
    }
    const Tensor3& constants() const { return c_; }

    std::vector<Rational> bracket(const std::vector<Rational>& x,
                                  const std::vector<Rational>& y) const;
    /// Matrix of ad(e_j): column i holds [e_i, e_j]... see implementation.
    Matrix ad_of_basis(std::size_t j) const;

    bool is_abelian() const { return c_.is_zero(); }
    bool is_nilpotent() const;

    /// C^0 g = g, C^{k+1} g = [g, C^k g]; returned until the zero term.
    std::vector<Subspace> descending_series() const;
    /// g_1 = Z, g_k = {X : [X, g] in g_{k-1}}; returned until it stabilizes
    /// (reaching g iff nilpotent). Throws ValidationError when it stalls below g.
    std::vector<Subspace> ascending_series() const;
    Subspace center() const;
    /// D^0 = g, D^{k+1} = [D^k, D^k]; returned until the zero term.
    std::vector<Subspace> derived_series() const;
    NilpotencyData nilpotency_data() const;

    /// Span of [g, W].
    Subspace bracket_with_algebra(const Subspace& w) const;

private:
    explicit LieAlgebra(std::size_t dim) : dim_(dim), c_(dim) {}
    void validate() const;

    std::size_t dim_;
    Tensor3 c_;  // C(k,i,j)
};

}  // namespace nilgeo
