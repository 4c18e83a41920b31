#include "nilgeo/liealg.hpp"

#include <set>
#include <sstream>

#include "nilgeo/errors.hpp"

namespace nilgeo {

std::vector<JacobiViolation> jacobi_violations(const Tensor3& c) {
    std::size_t n = c.dim();
    std::vector<JacobiViolation> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                std::vector<Rational> res(n);
                bool bad = false;
                for (std::size_t s = 0; s < n; ++s) {
                    Rational v;
                    for (std::size_t p = 0; p < n; ++p) {
                        v += c(p, i, j) * c(s, p, k);
                        v += c(p, j, k) * c(s, p, i);
                        v += c(p, k, i) * c(s, p, j);
                    }
                    if (!v.is_zero()) bad = true;
                    res[s] = v;
                }
                if (bad)
                    out.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1),
                                   static_cast<int>(k + 1), std::move(res)});
            }
    return out;
}

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<BracketTerm>& brackets)
    : dim_(dim), c_(dim) {
    std::set<std::pair<int, int>> seen;
    for (const auto& b : brackets) {
        if (b.i < 1 || b.j < 1 || static_cast<std::size_t>(b.i) > dim ||
            static_cast<std::size_t>(b.j) > dim)
            throw ValidationError("index_range", "bracket index out of range");
        if (b.i == b.j)
            throw ValidationError("antisymmetry", "bracket [e_i, e_i] must vanish");
        if (b.i > b.j)
            throw ValidationError("bracket_order", "list brackets with i < j");
        if (!seen.insert({b.i, b.j}).second)
            throw ValidationError("bracket_order", "duplicate bracket entry");
        for (const auto& [k, v] : b.coeffs) {
            if (k < 1 || static_cast<std::size_t>(k) > dim)
                throw ValidationError("index_range", "bracket coefficient index out of range");
            c_(k - 1, b.i - 1, b.j - 1) = v;
            c_(k - 1, b.j - 1, b.i - 1) = -v;
        }
    }
    validate();
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim); }

LieAlgebra LieAlgebra::unchecked(std::size_t dim, Tensor3 constants) {
    LieAlgebra l(dim);
    l.c_ = std::move(constants);
    return l;
}

void LieAlgebra::validate() const {
    auto bad = jacobi_violations(c_);
    if (!bad.empty()) {
        std::ostringstream os;
        os << "Jacobi identity fails at " << bad.size() << " basis triple(s); first: ("
           << bad[0].i << "," << bad[0].j << "," << bad[0].k << ")";
        throw ValidationError("jacobi", os.str());
    }
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& x,
                                          const std::vector<Rational>& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw DimensionError("bracket operand length mismatch");
    std::vector<Rational> z(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!c_(k, i, j).is_zero()) z[k] += f * c_(k, i, j);
        }
    }
    return z;
}

Matrix LieAlgebra::ad_of_basis(std::size_t j) const {
    // ad(e_j): x -> [e_j, x]; column i is [e_j, e_i]
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) m(k, i) = c_(k, j, i);
    return m;
}

Subspace LieAlgebra::bracket_with_algebra(const Subspace& w) const {
    std::vector<std::vector<Rational>> spans;
    for (std::size_t i = 0; i < dim_; ++i) {
        std::vector<Rational> ei(dim_);
        ei[i] = 1;
        for (std::size_t r = 0; r < w.dim(); ++r)
            spans.push_back(bracket(ei, w.basis_vector(r)));
    }
    return Subspace::span_of(dim_, spans);
}

std::vector<Subspace> LieAlgebra::descending_series() const {
    std::vector<Subspace> series{Subspace::full(dim_)};
    while (!series.back().is_zero()) {
        Subspace next = bracket_with_algebra(series.back());
        if (next == series.back())
            throw ValidationError("nilpotent", "descending central series stabilizes above zero");
        series.push_back(next);
    }
    return series;
}

std::vector<Subspace> LieAlgebra::ascending_series() const {
    // g_k = {X : [X, e_j] in g_{k-1} for all j}. With V the constraint matrix
    // of g_{k-1} (rows annihilate it) and M_j the matrix (M_j)_{k i} = C^k_{ij},
    // g_k is the kernel of the stacked V * M_j.
    std::vector<Subspace> series;
    Subspace prev(dim_);  // g_0 = 0
    std::vector<Matrix> mj(dim_, Matrix(dim_, dim_));
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
            for (std::size_t i = 0; i < dim_; ++i) mj[j](k, i) = c_(k, i, j);
    while (true) {
        Matrix v = kernel_basis(prev.basis()).basis();  // constraints of prev
        Matrix stacked(dim_ * v.rows(), dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Matrix vm = v * mj[j];
            for (std::size_t r = 0; r < vm.rows(); ++r)
                for (std::size_t c2 = 0; c2 < dim_; ++c2)
                    stacked(j * v.rows() + r, c2) = vm(r, c2);
        }
        Subspace next = kernel_basis(stacked);
        if (next == prev) {
            if (prev.dim() != dim_)
                throw ValidationError(
                    "nilpotent", "ascending central series stabilizes below the algebra");
            return series;
        }
        series.push_back(next);
        if (next.dim() == dim_) return series;
        prev = next;
    }
}

Subspace LieAlgebra::center() const {
    Matrix stacked(dim_ * dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
            for (std::size_t i = 0; i < dim_; ++i) stacked(j * dim_ + k, i) = c_(k, i, j);
    return kernel_basis(stacked);
}

std::vector<Subspace> LieAlgebra::derived_series() const {
    std::vector<Subspace> series{Subspace::full(dim_)};
    while (!series.back().is_zero()) {
        const Subspace& d = series.back();
        std::vector<std::vector<Rational>> spans;
        for (std::size_t a = 0; a < d.dim(); ++a)
            for (std::size_t b = a + 1; b < d.dim(); ++b)
                spans.push_back(bracket(d.basis_vector(a), d.basis_vector(b)));
        Subspace next = Subspace::span_of(dim_, spans);
        if (next == series.back())
            throw ValidationError("solvable", "derived series stabilizes above zero");
        series.push_back(next);
    }
    return series;
}

bool LieAlgebra::is_nilpotent() const {
    Subspace cur = Subspace::full(dim_);
    while (!cur.is_zero()) {
        Subspace next = bracket_with_algebra(cur);
        if (next == cur) return false;
        cur = next;
    }
    return true;
}

NilpotencyData LieAlgebra::nilpotency_data() const {
    if (!is_nilpotent())
        throw ValidationError("nilpotent", "algebra is not nilpotent");
    NilpotencyData nd;
    nd.nilpotency_class = descending_series().size() - 1;
    for (const auto& s : ascending_series()) nd.type_sequence.push_back(s.dim());
    // maximal class for the dimension: type (1, 2, ..., dim-2, dim)
    nd.is_filiform = true;
    if (nd.type_sequence.size() != (dim_ >= 2 ? dim_ - 1 : 1)) nd.is_filiform = false;
    if (nd.is_filiform) {
        for (std::size_t k = 0; k + 1 < nd.type_sequence.size(); ++k)
            if (nd.type_sequence[k] != k + 1) nd.is_filiform = false;
        if (!nd.type_sequence.empty() && nd.type_sequence.back() != dim_)
            nd.is_filiform = false;
    }
    return nd;
}

}  // namespace nilgeo
