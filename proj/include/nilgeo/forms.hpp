#pragma once

#include <vector>

#include "nilgeo/liealg.hpp"
#include "nilgeo/matrix.hpp"
#include "nilgeo/tensor.hpp"

namespace nilgeo {

/// One wedge term c * e^i ^ e^j of a 2-form, 1-based, i < j.
struct FormTerm {
    int i = 0;
    int j = 0;
    Rational value;
};

/// Antisymmetric bilinear form on the algebra, omega_ij = omega(e_i, e_j).
class TwoForm {
public:
    explicit TwoForm(Matrix m);
    static TwoForm from_terms(std::size_t dim, const std::vector<FormTerm>& terms);

    std::size_t dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    Rational value(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
    bool is_degenerate() const { return m_.det().is_zero(); }

    friend TwoForm operator*(const Rational& s, const TwoForm& w) {
        return TwoForm(s * w.m_);
    }
    friend TwoForm operator+(const TwoForm& a, const TwoForm& b) {
        return TwoForm(a.m_ + b.m_);
    }

private:
    Matrix m_;
};

/// Fully antisymmetric rank-3 values d(i,j,k); stores the dense cube.
class ThreeForm {
public:
    explicit ThreeForm(Tensor3 t);
    std::size_t dim() const { return t_.dim(); }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return t_(i, j, k);
    }
    bool is_zero() const { return t_.is_zero(); }
    const Tensor3& tensor() const { return t_; }

private:
    Tensor3 t_;
};

/// Chevalley-Eilenberg differential
/// d omega(X,Y,Z) = omega([X,Y],Z) - omega([X,Z],Y) + omega([Y,Z],X).
ThreeForm ce_differential(const LieAlgebra& l, const TwoForm& w);

/// Closed and nondegenerate.
bool is_symplectic(const LieAlgebra& l, const TwoForm& w);

/// omega vanishes on W x W.
bool is_isotropic(const TwoForm& w, const Subspace& sub);

/// Each side pairs nontrivially against the other: the pairing matrix
/// omega(u_a, v_b) has rank equal to dim U and to dim V.
bool are_dual(const TwoForm& w, const Subspace& u, const Subspace& v);

/// omega(u, v) = 0 for all u in U, v in V.
bool omega_orthogonal(const TwoForm& w, const Subspace& u, const Subspace& v);

}  // namespace nilgeo
