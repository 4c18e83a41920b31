#pragma once

#include <cstddef>
#include <initializer_list>
#include <tuple>
#include <vector>

#include "nilgeo/rational.hpp"

namespace nilgeo {

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t null = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
    bool is_definite() const { return negative == 0 && null == 0; }
    bool is_indefinite() const { return positive > 0 && negative > 0; }
};

/// Dense matrix over exact rationals, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /// Row-major construction from nested lists, mostly for tests.
    static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Matrix transpose() const;
    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::vector<Rational> apply(const std::vector<Rational>& x) const;  // M * x

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_antisymmetric() const;
    Rational max_abs() const;

    Rational det() const;                 // throws DimensionError if non-square
    Matrix inverse() const;               // throws SingularError on det = 0
    std::size_t rank() const;
    /// Reduced row echelon form; pivot columns appended if requested.
    Matrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
    /// Sylvester signature of a symmetric matrix via exact congruence
    /// diagonalization. Throws ValidationError on non-symmetric input.
    Signature signature() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> e_;
};

/// Linear subspace of Q^n in canonical form: basis rows are the nonzero rows
/// of a reduced row echelon form, so equal subspaces compare equal syntactically.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    /// Canonicalizes the row span of `spanning_rows`.
    static Subspace span_of_rows(const Matrix& spanning_rows);
    static Subspace span_of(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& vectors);
    /// Coordinate subspace spanned by 1-based basis indices.
    static Subspace coordinate(std::size_t ambient_dim, const std::vector<int>& indices_1based);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const Matrix& basis() const { return basis_; }
    std::vector<Rational> basis_vector(std::size_t i) const;

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;
    friend bool operator==(const Subspace& a, const Subspace& b);

    friend Subspace sum(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);

private:
    std::size_t ambient_;
    Matrix basis_;
};

/// Exact null space {x : M x = 0} in canonical form; dim = cols - rank.
Subspace kernel_basis(const Matrix& m);

}  // namespace nilgeo
