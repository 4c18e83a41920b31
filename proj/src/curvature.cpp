#include "nilgeo/curvature.hpp"

#include "nilgeo/errors.hpp"

namespace nilgeo {

std::vector<Rational> Connection::covariant_derivative(const std::vector<Rational>& x,
                                                       const std::vector<Rational>& y) const {
    std::size_t n = dim();
    if (x.size() != n || y.size() != n)
        throw DimensionError("covariant derivative operand length mismatch");
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!gamma_(k, i, j).is_zero()) out[k] += f * gamma_(k, i, j);
        }
    }
    return out;
}

Connection levi_civita(const LieAlgebra& l, const Metric& g) {
    std::size_t n = l.dim();
    if (g.dim() != n) throw DimensionError("algebra/metric dimension mismatch");
    const Matrix& gm = g.matrix();
    const Matrix& gi = g.inverse();
    Tensor3 gamma(n);
    Rational half(1, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // rhs_k = sum_p (g_pk C^p_ij + g_pj C^p_ki + g_ip C^p_kj)
            std::vector<Rational> rhs(n);
            for (std::size_t k = 0; k < n; ++k) {
                Rational v;
                for (std::size_t p = 0; p < n; ++p) {
                    if (!l.c(p, i, j).is_zero()) v += gm(p, k) * l.c(p, i, j);
                    if (!l.c(p, k, i).is_zero()) v += gm(p, j) * l.c(p, k, i);
                    if (!l.c(p, k, j).is_zero()) v += gm(i, p) * l.c(p, k, j);
                }
                rhs[k] = v;
            }
            for (std::size_t m = 0; m < n; ++m) {
                Rational v;
                for (std::size_t k = 0; k < n; ++k)
                    if (!rhs[k].is_zero()) v += gi(k, m) * rhs[k];
                gamma(m, i, j) = half * v;
            }
        }
    return Connection(std::move(gamma));
}

Tensor4 riemann(const LieAlgebra& l, const Connection& conn) {
    std::size_t n = conn.dim();
    if (l.dim() != n) throw DimensionError("algebra/connection dimension mismatch");
    Tensor4 r(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Rational v;
                    for (std::size_t p = 0; p < n; ++p) {
                        if (!conn.gamma(p, j, k).is_zero())
                            v += conn.gamma(s, i, p) * conn.gamma(p, j, k);
                        if (!conn.gamma(p, i, k).is_zero())
                            v -= conn.gamma(s, j, p) * conn.gamma(p, i, k);
                        if (!l.c(p, i, j).is_zero()) v -= l.c(p, i, j) * conn.gamma(s, p, k);
                    }
                    r(s, i, j, k) = v;
                }
    return r;
}

Matrix ricci(const Tensor4& r) {
    std::size_t n = r.dim();
    Matrix ric(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Rational v;
            for (std::size_t s = 0; s < n; ++s) v += r(s, s, j, k);
            ric(j, k) = v;
        }
    return ric;
}

Rational scalar_curvature(const Metric& g, const Matrix& ric) {
    std::size_t n = g.dim();
    if (ric.rows() != n || ric.cols() != n)
        throw DimensionError("metric/ricci dimension mismatch");
    Rational s;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (!ric(j, k).is_zero()) s += g.inverse()(j, k) * ric(j, k);
    return s;
}

Rational curvature_scalar_square(const Metric& g, const Tensor4& r) {
    std::size_t n = g.dim();
    if (r.dim() != n) throw DimensionError("metric/curvature dimension mismatch");
    const Matrix& gm = g.matrix();
    const Matrix& gi = g.inverse();
    // lower the upper index: R_ijkl = g_ls R^s_ijk
    Tensor4 low(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l2 = 0; l2 < n; ++l2) {
                    Rational v;
                    for (std::size_t s = 0; s < n; ++s)
                        if (!r(s, i, j, k).is_zero()) v += gm(l2, s) * r(s, i, j, k);
                    low(i, j, k, l2) = v;
                }
    // raise indices one at a time
    Tensor4 up = low;
    for (int axis = 0; axis < 4; ++axis) {
        Tensor4 next(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t d = 0; d < n; ++d) {
                        std::size_t idx[4] = {a, b, c, d};
                        Rational v;
                        for (std::size_t m = 0; m < n; ++m) {
                            std::size_t src[4] = {a, b, c, d};
                            src[axis] = m;
                            const Rational& t = up(src[0], src[1], src[2], src[3]);
                            if (!t.is_zero()) v += gi(m, idx[axis]) * t;
                        }
                        next(a, b, c, d) = v;
                    }
        up = next;
    }
    Rational total;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    if (!low(a, b, c, d).is_zero()) total += low(a, b, c, d) * up(a, b, c, d);
    return total;
}

bool ricci_hermitian(const Matrix& ric, const Acs& j) {
    if (ric.rows() != j.dim()) throw DimensionError("ricci/J dimension mismatch");
    return j.matrix().transpose() * ric * j.matrix() == ric;
}

namespace {

std::vector<std::vector<Rational>> basis_vectors(const Subspace& s) {
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(s.basis_vector(i));
    return out;
}

}  // namespace

DecompositionReport nabla_subspace_checks(const LieAlgebra& l, const TwoForm& w,
                                          const Acs& j, const Metric& g,
                                          const Subspace& a, const Subspace& b,
                                          const Subspace& c) {
    std::size_t n = l.dim();
    DecompositionReport rep;
    Subspace bc = sum(b, c);
    Subspace abc = sum(a, bc);
    Subspace c1 = l.bracket_with_algebra(Subspace::full(n));

    auto hyp = [&](const std::string& name, bool ok, const std::string& detail = "") {
        rep.hypotheses.push_back({name, ok, detail});
    };
    hyp("direct_sum", a.dim() + b.dim() + c.dim() == n && abc.dim() == n);
    hyp("A_isotropic", is_isotropic(w, a));
    hyp("C_isotropic", is_isotropic(w, c));
    hyp("A_C_dual", are_dual(w, a, c));
    {
        Matrix pb(b.dim(), b.dim());
        for (std::size_t p = 0; p < b.dim(); ++p)
            for (std::size_t q = 0; q < b.dim(); ++q)
                pb(p, q) = w.value(b.basis_vector(p), b.basis_vector(q));
        hyp("omega_nondegenerate_on_B", pb.rank() == b.dim());
    }
    hyp("omega_B_C_zero", omega_orthogonal(w, b, c));
    hyp("BC_equals_C1g", bc == c1);
    {
        bool abel = true;
        auto bcv = basis_vectors(bc);
        for (std::size_t p = 0; p < bcv.size() && abel; ++p)
            for (std::size_t q = p + 1; q < bcv.size() && abel; ++q) {
                auto z = l.bracket(bcv[p], bcv[q]);
                for (const auto& x : z)
                    if (!x.is_zero()) {
                        abel = false;
                        break;
                    }
            }
        hyp("BC_abelian", abel);
    }
    hyp("BC_ideal", bc.contains(l.bracket_with_algebra(bc)));
    hyp("BC_J_invariant", j_invariant(j, bc));
    hyp("C_ideal", c.contains(l.bracket_with_algebra(c)));
    hyp("C_J_invariant", j_invariant(j, c));
    rep.hypotheses_hold = true;
    for (const auto& h : rep.hypotheses)
        if (!h.holds) rep.hypotheses_hold = false;

    Connection conn = levi_civita(l, g);
    auto nabla = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        return conn.covariant_derivative(x, y);
    };
    auto in = [&](const Subspace& s, const std::vector<Rational>& v) { return s.contains(v); };
    auto all_basis = basis_vectors(Subspace::full(n));
    auto bcv = basis_vectors(bc);
    auto cv = basis_vectors(c);

    auto clause = [&](const std::string& name, bool ok, const std::string& detail = "") {
        rep.nabla_clauses.push_back({name, ok, detail});
    };
    {
        bool ok = true;
        for (const auto& x : bcv)
            for (const auto& y : cv)
                if (!g.value(x, y).is_zero()) ok = false;
        clause("g_BC_C_zero", ok);
    }
    {
        bool ok = true;
        for (const auto& x : all_basis)
            for (const auto& y : bcv)
                if (!in(bc, nabla(x, y)) || !in(bc, nabla(y, x))) ok = false;
        clause("nabla_into_BC", ok);
    }
    {
        bool ok = true;
        for (const auto& x : all_basis)
            for (const auto& y : cv)
                if (!in(c, nabla(x, y)) || !in(c, nabla(y, x))) ok = false;
        clause("nabla_into_C", ok);
    }
    {
        bool ok = true;
        for (const auto& x : bcv)
            for (const auto& y : bcv) {
                auto xy = nabla(x, y);
                auto yx = nabla(y, x);
                if (xy != yx || !in(c, xy)) ok = false;
            }
        clause("nabla_BC_BC_symmetric_into_C", ok);
    }
    {
        bool ok = true;
        for (const auto& x : bcv)
            for (const auto& y : cv) {
                for (const auto& v : nabla(x, y))
                    if (!v.is_zero()) ok = false;
                for (const auto& v : nabla(y, x))
                    if (!v.is_zero()) ok = false;
            }
        clause("nabla_BC_C_zero", ok);
    }

    Tensor4 r = riemann(l, conn);
    auto rvec = [&](const std::vector<Rational>& x, const std::vector<Rational>& y,
                    const std::vector<Rational>& z) {
        std::vector<Rational> out(n);
        for (std::size_t s = 0; s < n; ++s) {
            Rational v;
            for (std::size_t i = 0; i < n; ++i) {
                if (x[i].is_zero()) continue;
                for (std::size_t jj = 0; jj < n; ++jj) {
                    if (y[jj].is_zero()) continue;
                    for (std::size_t k = 0; k < n; ++k)
                        if (!z[k].is_zero() && !r(s, i, jj, k).is_zero())
                            v += x[i] * y[jj] * z[k] * r(s, i, jj, k);
                }
            }
            out[s] = v;
        }
        return out;
    };
    auto rclause = [&](const std::string& name, bool ok) {
        rep.r_clauses.push_back({name, ok, ""});
    };
    {
        // classify each basis vector: 0 = in A-part, 1 = in BC only, 2 = in C
        auto cls = [&](const std::vector<Rational>& v) {
            if (in(c, v)) return 2;
            if (in(bc, v)) return 1;
            return 0;
        };
        bool ok1 = true, ok2 = true, ok3 = true, ok3_literal = true;
        for (const auto& x : all_basis)
            for (const auto& y : all_basis)
                for (const auto& z : all_basis) {
                    int nbc = (cls(x) >= 1) + (cls(y) >= 1) + (cls(z) >= 1);
                    int nc = (cls(x) == 2) + (cls(y) == 2) + (cls(z) == 2);
                    auto v = rvec(x, y, z);
                    bool zero = true;
                    for (const auto& t : v)
                        if (!t.is_zero()) zero = false;
                    if (nbc >= 1 && !in(bc, v)) ok1 = false;
                    if (nbc >= 2 && !in(c, v)) ok2 = false;
                    if (nc >= 1 && nbc >= 2 && !zero) ok3 = false;
                    if (nc >= 1 && !zero) ok3_literal = false;
                }
        rclause("R_one_in_BC_lands_in_BC", ok1);
        rclause("R_two_in_BC_lands_in_C", ok2);
        rclause("R_C_with_BC_vanishes", ok3);
        rep.literal_one_in_c = {"R_one_in_C_vanishes", ok3_literal, ""};
    }
    {
        Matrix ric = ricci(r);
        bool ok = true;
        for (const auto& x : all_basis)
            for (const auto& y : bcv) {
                Rational v;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q)
                        if (!x[p].is_zero() && !y[q].is_zero()) v += x[p] * y[q] * ric(p, q);
                if (!v.is_zero()) ok = false;
            }
        rep.ricci_clause = {"ricci_vanishes_on_BC", ok, ""};
    }

    rep.conclusions_hold = rep.ricci_clause.holds;
    for (const auto& cl : rep.nabla_clauses)
        if (!cl.holds) rep.conclusions_hold = false;
    for (const auto& cl : rep.r_clauses)
        if (!cl.holds) rep.conclusions_hold = false;
    return rep;
}

CurvatureReport compute_report(const LieAlgebra& l, const TwoForm& w, const Acs& j) {
    if (l.dim() != w.dim() || l.dim() != j.dim())
        throw DimensionError("algebra/form/J dimension mismatch");
    if (!check_acs(j).is_zero())
        throw ValidationError("acs_square", "J^2 = -I fails");
    if (!check_compatible(w, j).is_zero())
        throw ValidationError("compatibility", "omega(JX,Y) + omega(X,JY) = 0 fails");
    Metric g = associated_metric(w, j);
    Connection conn = levi_civita(l, g);
    Tensor4 r = riemann(l, conn);
    Matrix ric = ricci(r);
    Rational s = scalar_curvature(g, ric);
    Rational rr = curvature_scalar_square(g, r);
    bool herm = ricci_hermitian(ric, j);
    Signature sig = g.signature();
    return CurvatureReport{Connection(conn), std::move(r), std::move(ric),
                           std::move(s), std::move(rr), herm, sig};
}

}  // namespace nilgeo
