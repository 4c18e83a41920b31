#include "nilgeo/acs.hpp"

#include "nilgeo/errors.hpp"

namespace nilgeo {

Acs::Acs(Matrix j) : j_(std::move(j)) {
    if (!j_.is_square()) throw DimensionError("almost complex structure matrix must be square");
}

Matrix check_acs(const Acs& j) {
    return j.matrix() * j.matrix() + Matrix::identity(j.dim());
}

Matrix check_compatible(const TwoForm& w, const Acs& j) {
    if (w.dim() != j.dim()) throw DimensionError("form/J dimension mismatch");
    return j.matrix().transpose() * w.matrix() + w.matrix() * j.matrix();
}

Metric::Metric(Matrix g) : g_(std::move(g)) {
    if (!g_.is_symmetric())
        throw ValidationError("symmetric", "metric matrix must be symmetric");
    if (g_.det().is_zero()) throw SingularError("metric is degenerate");
    ginv_ = g_.inverse();
    sig_ = g_.signature();
}

Rational Metric::value(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    if (x.size() != dim() || y.size() != dim())
        throw DimensionError("metric operand length mismatch");
    Rational v;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (!g_(i, j).is_zero() && !y[j].is_zero()) v += x[i] * g_(i, j) * y[j];
    }
    return v;
}

Metric associated_metric(const TwoForm& w, const Acs& j) {
    if (w.dim() != j.dim()) throw DimensionError("form/J dimension mismatch");
    Matrix g = w.matrix() * j.matrix();  // g_ij = omega(e_i, J e_j)
    if (!g.is_symmetric())
        throw ValidationError("symmetric",
                              "associated bilinear form is not symmetric (J incompatible)");
    return Metric(std::move(g));
}

bool j_invariant(const Acs& j, const Subspace& w) {
    if (j.dim() != w.ambient_dim()) throw DimensionError("J/subspace dimension mismatch");
    for (std::size_t r = 0; r < w.dim(); ++r)
        if (!w.contains(j.apply(w.basis_vector(r)))) return false;
    return true;
}

std::vector<Subspace> acs_ascending_series(const LieAlgebra& l, const Acs& j) {
    if (l.dim() != j.dim()) throw DimensionError("algebra/J dimension mismatch");
    std::size_t n = l.dim();
    std::vector<Matrix> mj(n, Matrix(n, n));  // (M_j)_{k i} = C^k_{ij}: [X, e_j] = M_j x
    for (std::size_t jj = 0; jj < n; ++jj)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) mj[jj](k, i) = l.c(k, i, jj);
    std::vector<Subspace> series;
    Subspace prev(n);
    while (true) {
        Matrix v = kernel_basis(prev.basis()).basis();
        Matrix stacked(2 * n * v.rows(), n);
        for (std::size_t jj = 0; jj < n; ++jj) {
            Matrix vm = v * mj[jj];
            Matrix vmj = vm * j.matrix();  // constraint on [JX, e_j]
            for (std::size_t r = 0; r < vm.rows(); ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    stacked((2 * jj) * v.rows() + r, c) = vm(r, c);
                    stacked((2 * jj + 1) * v.rows() + r, c) = vmj(r, c);
                }
        }
        Subspace next = kernel_basis(stacked);
        if (next == prev) return series;
        series.push_back(next);
        if (next.dim() == n) return series;
        prev = next;
    }
}

namespace {

bool is_ideal(const LieAlgebra& l, const Subspace& w) {
    return w.contains(l.bracket_with_algebra(w));
}

}  // namespace

AcsClassification classify_acs(const LieAlgebra& l, const Acs& j,
                               const std::optional<std::vector<Subspace>>& chain) {
    AcsClassification out;
    auto series = acs_ascending_series(l, j);
    out.nilpotent = !series.empty() && series.back().dim() == l.dim();
    if (!chain) return out;

    std::size_t n = l.dim();
    std::vector<Subspace> terms = *chain;
    if (!terms.empty() && terms.back().dim() == n) terms.pop_back();  // drop implied g
    if (terms.size() != n / 2 - 1) {
        out.failure_reason = "chain must have terms of dims 2, 4, ..., dim-2";
        return out;
    }
    Subspace prev(n);
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const Subspace& b = terms[t];
        if (b.dim() != 2 * (t + 1)) {
            out.failure_reason = "chain term has wrong dimension";
            return out;
        }
        if (!b.contains(prev)) {
            out.failure_reason = "chain terms are not nested";
            return out;
        }
        if (!is_ideal(l, b)) {
            out.failure_reason = "chain term is not an ideal";
            return out;
        }
        if (!j_invariant(j, b)) {
            out.failure_reason = "chain term is not J-invariant";
            return out;
        }
        prev = b;
    }
    out.almost_nilpotent = true;
    return out;
}

Tensor3 nijenhuis(const LieAlgebra& l, const Acs& j) {
    if (l.dim() != j.dim()) throw DimensionError("algebra/J dimension mismatch");
    std::size_t n = l.dim();
    Tensor3 t(n);
    std::vector<std::vector<Rational>> je(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> ei(n);
        ei[i] = 1;
        je[i] = j.apply(ei);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<Rational> ea(n), eb(n);
            ea[a] = 1;
            eb[b] = 1;
            auto term1 = l.bracket(je[a], je[b]);
            auto term2 = j.apply(l.bracket(je[a], eb));
            auto term3 = j.apply(l.bracket(ea, je[b]));
            auto term4 = l.bracket(ea, eb);
            for (std::size_t k = 0; k < n; ++k) {
                Rational v = term1[k] - term2[k] - term3[k] - term4[k];
                t(k, a, b) = v;
                t(k, b, a) = -v;
            }
        }
    return t;
}

}  // namespace nilgeo
