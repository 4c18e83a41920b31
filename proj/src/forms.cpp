#include "nilgeo/forms.hpp"

#include "nilgeo/errors.hpp"

namespace nilgeo {

TwoForm::TwoForm(Matrix m) : m_(std::move(m)) {
    if (!m_.is_antisymmetric())
        throw ValidationError("antisymmetry", "2-form matrix must be antisymmetric");
}

TwoForm TwoForm::from_terms(std::size_t dim, const std::vector<FormTerm>& terms) {
    Matrix m(dim, dim);
    for (const auto& t : terms) {
        if (t.i < 1 || t.j < 1 || static_cast<std::size_t>(t.i) > dim ||
            static_cast<std::size_t>(t.j) > dim)
            throw ValidationError("index_range", "form term index out of range");
        if (t.i >= t.j)
            throw ValidationError("antisymmetry", "list form terms with i < j");
        m(t.i - 1, t.j - 1) += t.value;
        m(t.j - 1, t.i - 1) -= t.value;
    }
    return TwoForm(std::move(m));
}

Rational TwoForm::value(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    if (x.size() != dim() || y.size() != dim())
        throw DimensionError("2-form operand length mismatch");
    Rational v;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (!m_(i, j).is_zero() && !y[j].is_zero()) v += x[i] * m_(i, j) * y[j];
    }
    return v;
}

ThreeForm::ThreeForm(Tensor3 t) : t_(std::move(t)) {
    std::size_t n = t_.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (t_(i, j, k) != -t_(j, i, k) || t_(i, j, k) != -t_(i, k, j))
                    throw ValidationError("antisymmetry", "3-form values must be antisymmetric");
            }
}

ThreeForm ce_differential(const LieAlgebra& l, const TwoForm& w) {
    if (l.dim() != w.dim()) throw DimensionError("algebra/form dimension mismatch");
    std::size_t n = l.dim();
    Tensor3 d(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Rational v;
                for (std::size_t p = 0; p < n; ++p) {
                    v += l.c(p, i, j) * w(p, k);
                    v -= l.c(p, i, k) * w(p, j);
                    v += l.c(p, j, k) * w(p, i);
                }
                // fill all six permutations
                d(i, j, k) = v;
                d(j, k, i) = v;
                d(k, i, j) = v;
                d(j, i, k) = -v;
                d(i, k, j) = -v;
                d(k, j, i) = -v;
            }
    return ThreeForm(std::move(d));
}

bool is_symplectic(const LieAlgebra& l, const TwoForm& w) {
    if (l.dim() != w.dim()) return false;
    if (w.is_degenerate()) return false;
    return ce_differential(l, w).is_zero();
}

bool is_isotropic(const TwoForm& w, const Subspace& sub) {
    if (w.dim() != sub.ambient_dim()) throw DimensionError("form/subspace dimension mismatch");
    for (std::size_t a = 0; a < sub.dim(); ++a)
        for (std::size_t b = a + 1; b < sub.dim(); ++b)
            if (!w.value(sub.basis_vector(a), sub.basis_vector(b)).is_zero()) return false;
    return true;
}

bool are_dual(const TwoForm& w, const Subspace& u, const Subspace& v) {
    if (w.dim() != u.ambient_dim() || w.dim() != v.ambient_dim())
        throw DimensionError("form/subspace dimension mismatch");
    Matrix pairing(u.dim(), v.dim());
    for (std::size_t a = 0; a < u.dim(); ++a)
        for (std::size_t b = 0; b < v.dim(); ++b)
            pairing(a, b) = w.value(u.basis_vector(a), v.basis_vector(b));
    std::size_t r = pairing.rank();
    return r == u.dim() && r == v.dim();
}

bool omega_orthogonal(const TwoForm& w, const Subspace& u, const Subspace& v) {
    if (w.dim() != u.ambient_dim() || w.dim() != v.ambient_dim())
        throw DimensionError("form/subspace dimension mismatch");
    for (std::size_t a = 0; a < u.dim(); ++a)
        for (std::size_t b = 0; b < v.dim(); ++b)
            if (!w.value(u.basis_vector(a), v.basis_vector(b)).is_zero()) return false;
    return true;
}

}  // namespace nilgeo
