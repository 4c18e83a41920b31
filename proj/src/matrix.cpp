#include "nilgeo/matrix.hpp"

#include <ostream>
#include <sstream>

#include "nilgeo/errors.hpp"

namespace nilgeo {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw DimensionError("matrix entry count does not match rows x cols");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionError("ragged row list");
        std::size_t j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in +");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in -");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix shape mismatch in *");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator*(const Rational& s, Matrix m) {
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) *= s;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& x) const {
    if (x.size() != cols_) throw DimensionError("vector length mismatch in apply");
    std::vector<Rational> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
    return y;
}

bool Matrix::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool Matrix::is_antisymmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

Rational Matrix::max_abs() const {
    Rational m = 0;
    for (const auto& v : e_)
        if (abs(v) > m) m = abs(v);
    return m;
}

Rational Matrix::det() const {
    if (!is_square()) throw DimensionError("determinant of non-square matrix");
    Matrix a = *this;
    std::size_t n = rows_;
    Rational d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k).is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a(piv, j), a(k, j));
            d = -d;
        }
        d *= a(k, k);
        Rational inv = a(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            Rational f = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw DimensionError("inverse of non-square matrix");
    std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k).is_zero()) ++piv;
        if (piv == n) throw SingularError("matrix is singular (det = 0)");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(k, j));
                std::swap(inv(piv, j), inv(k, j));
            }
        Rational f = a(k, k).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) *= f;
            inv(k, j) *= f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            Rational g = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= g * a(k, j);
                inv(i, j) -= g * inv(k, j);
            }
        }
    }
    return inv;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivot_cols) const {
    Matrix a = *this;
    std::size_t lead = 0;
    if (pivot_cols) pivot_cols->clear();
    for (std::size_t r = 0; r < rows_ && lead < cols_; ++r) {
        std::size_t i = r;
        while (i < rows_ && a(i, lead).is_zero()) ++i;
        if (i == rows_) {
            ++lead;
            --r;
            continue;
        }
        if (i != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(a(i, j), a(r, j));
        Rational f = a(r, lead).inverse();
        for (std::size_t j = 0; j < cols_; ++j) a(r, j) *= f;
        for (std::size_t k = 0; k < rows_; ++k) {
            if (k == r || a(k, lead).is_zero()) continue;
            Rational g = a(k, lead);
            for (std::size_t j = 0; j < cols_; ++j) a(k, j) -= g * a(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(lead);
        ++lead;
    }
    return a;
}

std::size_t Matrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

Signature Matrix::signature() const {
    if (!is_symmetric())
        throw ValidationError("symmetric", "signature of a non-symmetric matrix");
    Matrix a = *this;
    std::size_t n = rows_;
    auto add_row_col = [&](std::size_t dst, std::size_t src, const Rational& f) {
        // a <- E a E^T with E = I + f * e_dst e_src^T  (symmetric congruence)
        for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
        for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
    };
    auto swap_row_col = [&](std::size_t p, std::size_t q) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(q, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
    };
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t d = k + 1;
            while (d < n && a(d, d).is_zero()) ++d;
            if (d < n) {
                swap_row_col(k, d);
            } else {
                // all-zero diagonal: pull in a hyperbolic pair if one exists
                bool found = false;
                for (std::size_t i = k; i < n && !found; ++i)
                    for (std::size_t j = i + 1; j < n && !found; ++j)
                        if (!a(i, j).is_zero()) {
                            add_row_col(i, j, 1);  // makes a(i,i) = 2 a(i,j) != 0
                            if (i != k) swap_row_col(k, i);
                            found = true;
                        }
                if (!found) {
                    sig.null += n - k;
                    return sig;
                }
            }
        }
        Rational inv = a(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            add_row_col(i, k, -a(i, k) * inv);
        }
        if (a(k, k).sign() > 0)
            ++sig.positive;
        else
            ++sig.negative;
    }
    return sig;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span_of_rows(const Matrix& spanning_rows) {
    Subspace s(spanning_rows.cols());
    Matrix r = spanning_rows.rref();
    std::size_t nz = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (!r(i, j).is_zero()) {
                zero = false;
                break;
            }
        if (!zero) ++nz;
    }
    Matrix b(nz, r.cols());
    std::size_t k = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (!r(i, j).is_zero()) {
                zero = false;
                break;
            }
        if (zero) continue;
        for (std::size_t j = 0; j < r.cols(); ++j) b(k, j) = r(i, j);
        ++k;
    }
    s.basis_ = b;
    return s;
}

Subspace Subspace::span_of(std::size_t ambient_dim,
                           const std::vector<std::vector<Rational>>& vectors) {
    Matrix m(vectors.size(), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient_dim)
            throw DimensionError("spanning vector length mismatch");
        for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
    }
    return span_of_rows(m);
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<int>& idx) {
    Matrix m(idx.size(), ambient_dim);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 1 || static_cast<std::size_t>(idx[i]) > ambient_dim)
            throw DimensionError("coordinate index out of range");
        m(i, idx[i] - 1) = 1;
    }
    return span_of_rows(m);
}

Subspace Subspace::full(std::size_t ambient_dim) {
    return span_of_rows(Matrix::identity(ambient_dim));
}

std::vector<Rational> Subspace::basis_vector(std::size_t i) const {
    std::vector<Rational> v(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) v[j] = basis_(i, j);
    return v;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw DimensionError("vector/subspace dimension mismatch");
    // reduce v against the RREF basis; contained iff the residue vanishes
    std::vector<Rational> r = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < ambient_ && basis_(i, lead).is_zero()) ++lead;
        if (lead == ambient_) continue;
        if (r[lead].is_zero()) continue;
        Rational f = r[lead];  // RREF pivots are 1
        for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_(i, j);
    }
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw DimensionError("ambient dimension mismatch");
    Matrix m(a.dim() + b.dim(), a.ambient_);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient_; ++j) m(i, j) = a.basis_(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.ambient_; ++j) m(a.dim() + i, j) = b.basis_(i, j);
    return Subspace::span_of_rows(m);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw DimensionError("ambient dimension mismatch");
    // rowspace(A) = { x : K_A x = 0 } with K_A a kernel basis of A; stack both
    // constraint sets and take the kernel.
    Subspace ka = kernel_basis(a.basis());
    Subspace kb = kernel_basis(b.basis());
    Matrix c(ka.dim() + kb.dim(), a.ambient_);
    for (std::size_t i = 0; i < ka.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient_; ++j) c(i, j) = ka.basis()(i, j);
    for (std::size_t i = 0; i < kb.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient_; ++j) c(ka.dim() + i, j) = kb.basis()(i, j);
    return kernel_basis(c);
}

Subspace kernel_basis(const Matrix& m) {
    std::vector<std::size_t> piv;
    Matrix r = m.rref(&piv);
    std::size_t n = m.cols();
    std::vector<bool> is_piv(n, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span_of(n, basis);
}

}  // namespace nilgeo
