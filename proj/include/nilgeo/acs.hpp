#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilgeo/forms.hpp"
#include "nilgeo/liealg.hpp"
#include "nilgeo/matrix.hpp"
#include "nilgeo/tensor.hpp"

namespace nilgeo {

/// Almost complex structure as a matrix with column action
/// J(e_i) = sum_k J(k,i) e_k. Exact domain; the solver keeps its own float
/// mirror.
class Acs {
public:
    explicit Acs(Matrix j);

    std::size_t dim() const { return j_.rows(); }
    const Matrix& matrix() const { return j_; }

    std::vector<Rational> apply(const std::vector<Rational>& x) const { return j_.apply(x); }

private:
    Matrix j_;
};

/// J*J + I; zero iff J is a valid almost complex structure.
Matrix check_acs(const Acs& j);

/// Residual of the compatibility condition omega(JX, Y) + omega(X, JY) = 0,
/// as the matrix J^T Omega + Omega J (entry (i,j) is the value on (e_i, e_j)).
Matrix check_compatible(const TwoForm& w, const Acs& j);

/// Pseudo-Riemannian metric with its Sylvester signature.
class Metric {
public:
    explicit Metric(Matrix g);
    std::size_t dim() const { return g_.rows(); }
    const Matrix& matrix() const { return g_; }
    const Signature& signature() const { return sig_; }
    const Matrix& inverse() const { return ginv_; }
    Rational value(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

private:
    Matrix g_;
    Matrix ginv_;
    Signature sig_;
};

/// g(X, Y) = omega(X, JY); throws ValidationError("symmetric") when J is not
/// compatible and SingularError when degenerate.
Metric associated_metric(const TwoForm& w, const Acs& j);

/// J W = W.
bool j_invariant(const Acs& j, const Subspace& w);

/// Ascending J-adapted series a_l = {X : [X,g] and [JX,g] both in a_{l-1}},
/// returned until stabilization (last term repeated never).
std::vector<Subspace> acs_ascending_series(const LieAlgebra& l, const Acs& j);

struct AcsClassification {
    bool nilpotent = false;
    bool almost_nilpotent = false;
    std::string failure_reason;  // set when a supplied chain is rejected
};

/// `chain` (optional) lists ideals of dims 2, 4, ..., dim-2; the full algebra
/// as final term is implied and may be included or omitted.
AcsClassification classify_acs(const LieAlgebra& l, const Acs& j,
                               const std::optional<std::vector<Subspace>>& chain);

/// Nijenhuis tensor N(e_i, e_j) = [Je_i, Je_j] - J[Je_i, e_j] - J[e_i, Je_j]
/// - [e_i, e_j], components N(k, i, j); zero iff J is integrable.
Tensor3 nijenhuis(const LieAlgebra& l, const Acs& j);

}  // namespace nilgeo
