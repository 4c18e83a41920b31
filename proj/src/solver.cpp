#include "nilgeo/solver.hpp"

#include <cmath>

#include "nilgeo/errors.hpp"

namespace nilgeo {

namespace {

// SplitMix64, same stream family as the sampler.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [-2, 2]
    double uniform_sym2() {
        double u = static_cast<double>(next() >> 11) * 0x1.0p-53;  // [0,1)
        return 4.0 * u - 2.0;
    }
};

}  // namespace

PatternSpec::PatternSpec(std::size_t dim)
    : dim_(dim), state_(dim * dim, CellState::Free), value_(dim * dim, 0.0) {}

void PatternSpec::set_zero(std::size_t r, std::size_t c) {
    state_[r * dim_ + c] = CellState::Zero;
    value_[r * dim_ + c] = 0.0;
}

void PatternSpec::set_fixed(std::size_t r, std::size_t c, double v) {
    state_[r * dim_ + c] = CellState::Fixed;
    value_[r * dim_ + c] = v;
}

void PatternSpec::set_free(std::size_t r, std::size_t c) {
    state_[r * dim_ + c] = CellState::Free;
    value_[r * dim_ + c] = 0.0;
}

PatternSpec PatternSpec::for_entry(const CatalogEntry& e, const ParamAssignment& params) {
    ParamAssignment p = complete_params(e, params);
    Matrix j = e.jay(p);
    PatternSpec spec(e.dim);
    for (std::size_t r = 0; r < e.dim; ++r)
        for (std::size_t c = 0; c < e.dim; ++c)
            if (j(r, c).is_zero()) spec.set_zero(r, c);
    return spec;
}

PatternSpec PatternSpec::structural(const CatalogEntry& e) {
    PatternSpec spec(e.dim);
    for (const auto& idx : e.invariant_chain) {
        std::vector<bool> inside(e.dim, false);
        for (int i : idx) inside[i - 1] = true;
        for (std::size_t c = 0; c < e.dim; ++c) {
            if (!inside[c]) continue;
            for (std::size_t r = 0; r < e.dim; ++r)
                if (!inside[r]) spec.set_zero(r, c);
        }
    }
    return spec;
}

std::vector<std::pair<std::size_t, std::size_t>> PatternSpec::free_cells() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            if (state(r, c) == CellState::Free) out.push_back({r, c});
    return out;
}

Eigen::MatrixXd PatternSpec::assemble(const Eigen::VectorXd& free_values) const {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(dim_, dim_);
    std::size_t k = 0;
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) switch (state(r, c)) {
                case CellState::Free:
                    j(r, c) = free_values(k++);
                    break;
                case CellState::Fixed:
                    j(r, c) = fixed_value(r, c);
                    break;
                case CellState::Zero:
                    break;
            }
    return j;
}

Eigen::VectorXd PatternSpec::project(const Eigen::MatrixXd& start) const {
    auto cells = free_cells();
    Eigen::VectorXd v(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k)
        v(k) = start(cells[k].first, cells[k].second);
    return v;
}

Residuals check_residuals(const Eigen::MatrixXd& j, const Eigen::MatrixXd& omega) {
    std::size_t n = j.rows();
    Residuals r;
    r.j_square = (j * j + Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    r.compat = (j.transpose() * omega + omega * j).cwiseAbs().maxCoeff();
    return r;
}

namespace {

struct ResidualSystem {
    const Eigen::MatrixXd& omega;
    const PatternSpec& pattern;
    std::vector<std::pair<std::size_t, std::size_t>> cells;

    std::size_t dim() const { return pattern.dim(); }
    std::size_t rows() const { return 2 * dim() * dim(); }

    Eigen::VectorXd residual(const Eigen::MatrixXd& j) const {
        std::size_t n = dim();
        Eigen::VectorXd r(rows());
        std::size_t k = 0;
        Eigen::MatrixXd r1 = j * j + Eigen::MatrixXd::Identity(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) r(k++) = r1(a, b);
        Eigen::MatrixXd r2 = j.transpose() * omega + omega * j;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) r(k++) = r2(a, b);
        return r;
    }

    // d(J^2)_{ab}/dJ_{rc} = delta_{ar} J_{cb} + J_{ar} delta_{cb}
    // d(J^T W + W J)_{ab}/dJ_{rc} = delta_{bc} W_{ra} + W_{ar} delta_{bc}... see below
    Eigen::MatrixXd jacobian(const Eigen::MatrixXd& j) const {
        std::size_t n = dim();
        Eigen::MatrixXd out = Eigen::MatrixXd::Zero(rows(), cells.size());
        for (std::size_t idx = 0; idx < cells.size(); ++idx) {
            auto [r, c] = cells[idx];
            std::size_t k = 0;
            // (dJ * J + J * dJ) with dJ = E_{rc}
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    double v = 0.0;
                    if (a == r) v += j(c, b);
                    if (b == c) v += j(a, r);
                    out(k++, idx) = v;
                }
            // (dJ^T W + W dJ): (E_{cr} W + W E_{rc})_{ab}
            //   = delta_{ac} W_{rb} + W_{ar} delta_{bc}
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    double v = 0.0;
                    if (a == c) v += omega(r, b);
                    if (b == c) v += omega(a, r);
                    out(k++, idx) = v;
                }
        }
        return out;
    }
};

struct GnOutcome {
    Eigen::VectorXd x;
    int iterations = 0;
    bool converged = false;
};

GnOutcome gauss_newton(const ResidualSystem& sys, Eigen::VectorXd x, double tol,
                       int max_iter) {
    GnOutcome out;
    Eigen::MatrixXd j = sys.pattern.assemble(x);
    Eigen::VectorXd r = sys.residual(j);
    double rnorm = r.cwiseAbs().maxCoeff();
    int it = 0;
    for (; it < max_iter; ++it) {
        if (rnorm <= tol) break;
        if (sys.cells.empty()) break;
        Eigen::MatrixXd jac = sys.jacobian(j);
        Eigen::VectorXd step =
            jac.completeOrthogonalDecomposition().solve(-r);
        if (!step.allFinite()) break;
        // damped update: halve until the residual decreases
        double scale = 1.0;
        bool improved = false;
        for (int h = 0; h < 40; ++h) {
            Eigen::VectorXd xn = x + scale * step;
            Eigen::MatrixXd jn = sys.pattern.assemble(xn);
            Eigen::VectorXd rn = sys.residual(jn);
            double rn_norm = rn.cwiseAbs().maxCoeff();
            if (rn_norm < rnorm) {
                x = xn;
                j = jn;
                r = rn;
                rnorm = rn_norm;
                improved = true;
                break;
            }
            scale *= 0.5;
        }
        if (!improved) break;
    }
    out.x = x;
    out.iterations = it;
    out.converged = rnorm <= tol;
    return out;
}

}  // namespace

SolveResult solve_compatible_acs(const Eigen::MatrixXd& omega, const PatternSpec& pattern,
                                 const SolveOptions& opts) {
    if (opts.tolerance <= 0.0) throw Error("solver tolerance must be positive");
    ResidualSystem sys{omega, pattern, pattern.free_cells()};
    SplitMix64 rng{opts.seed};
    SolveResult best;
    best.residual_norm = std::numeric_limits<double>::infinity();
    for (int attempt = 0; attempt <= opts.restarts; ++attempt) {
        Eigen::VectorXd x0(sys.cells.size());
        if (attempt == 0 && opts.initial) {
            x0 = pattern.project(*opts.initial);
        } else {
            for (Eigen::Index i = 0; i < x0.size(); ++i) x0(i) = rng.uniform_sym2();
        }
        GnOutcome gn = gauss_newton(sys, x0, opts.tolerance, opts.max_iterations);
        Eigen::MatrixXd j = pattern.assemble(gn.x);
        Residuals res = check_residuals(j, omega);
        double norm = res.max();
        if (norm < best.residual_norm) {
            best.j = j;
            best.residuals = res;
            best.residual_norm = norm;
            best.iterations = gn.iterations;
            best.restarts_used = attempt;
            best.converged = gn.converged && norm <= opts.tolerance;
        }
        if (best.converged) break;
    }
    return best;
}

double one_step_displacement(const Eigen::MatrixXd& omega, const PatternSpec& pattern,
                             const Eigen::MatrixXd& start) {
    ResidualSystem sys{omega, pattern, pattern.free_cells()};
    Eigen::VectorXd x = pattern.project(start);
    Eigen::MatrixXd j = pattern.assemble(x);
    Eigen::MatrixXd jac = sys.jacobian(j);
    Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(-sys.residual(j));
    return step.size() ? step.cwiseAbs().maxCoeff() : 0.0;
}

Eigen::MatrixXd to_float(const Matrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
    return out;
}

std::vector<Eigen::MatrixXd> float_gamma(const LieAlgebra& l, const Eigen::MatrixXd& g) {
    std::size_t n = l.dim();
    Eigen::MatrixXd gi = g.inverse();
    std::vector<Eigen::MatrixXd> gamma(n, Eigen::MatrixXd::Zero(n, n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
            for (std::size_t k = 0; k < n; ++k) {
                double v = 0.0;
                for (std::size_t p = 0; p < n; ++p) {
                    double cij = l.c(p, i, j).to_double();
                    double cki = l.c(p, k, i).to_double();
                    double ckj = l.c(p, k, j).to_double();
                    if (cij != 0.0) v += g(p, k) * cij;
                    if (cki != 0.0) v += g(p, j) * cki;
                    if (ckj != 0.0) v += g(i, p) * ckj;
                }
                rhs(k) = v;
            }
            Eigen::VectorXd gn = 0.5 * (gi.transpose() * rhs);
            for (std::size_t m2 = 0; m2 < n; ++m2) gamma[m2](i, j) = gn(m2);
        }
    return gamma;
}

std::vector<Eigen::MatrixXd> float_riemann(const LieAlgebra& l,
                                           const std::vector<Eigen::MatrixXd>& gamma) {
    std::size_t n = gamma.size();
    std::vector<Eigen::MatrixXd> r(n * n, Eigen::MatrixXd::Zero(n, n));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    double v = 0.0;
                    for (std::size_t p = 0; p < n; ++p) {
                        v += gamma[s](i, p) * gamma[p](j, k);
                        v -= gamma[s](j, p) * gamma[p](i, k);
                        double c = l.c(p, i, j).to_double();
                        if (c != 0.0) v -= c * gamma[s](p, k);
                    }
                    r[s * n + i](j, k) = v;
                }
    return r;
}

Eigen::MatrixXd float_ricci(const std::vector<Eigen::MatrixXd>& riemann, std::size_t dim) {
    Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t s = 0; s < dim; ++s) ric += riemann[s * dim + s];
    return ric;
}

ProbeReport param_independence_probe(
    const CatalogEntry& e, const ParamAssignment& params,
    const std::vector<std::map<std::pair<std::size_t, std::size_t>, double>>& assignments,
    double tolerance) {
    Instance inst = instantiate(e, params);
    std::size_t n = e.dim;
    Eigen::MatrixXd omega = to_float(inst.omega.matrix());
    Eigen::MatrixXd canonical = to_float(inst.acs.matrix());

    // center rows (0-based) of the algebra
    Subspace center = inst.algebra.center();
    std::vector<bool> central_row(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> ei(n);
        ei[i] = 1;
        if (center.contains(ei)) central_row[i] = true;
    }

    ProbeReport rep;
    for (const auto& cells : assignments)
        for (const auto& [rc, v] : cells) {
            (void)v;
            if (rc.first >= n || rc.second >= n)
                throw Error("varied cell out of range");
            if (!central_row[rc.first])
                throw ValidationError("central_rows",
                                      "varied entries must lie in center rows");
        }

    struct Solved {
        Eigen::MatrixXd j;
        bool ok = false;
        bool off_hypothesis = false;
        Residuals res;
    };
    std::vector<Solved> solved;

    bool all_strict = true;
    for (const auto& cells : assignments) {
        // strict pattern: non-center rows pinned to the canonical instance,
        // center rows free, varied cells fixed
        PatternSpec strict(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c2 = 0; c2 < n; ++c2)
                if (!central_row[r])
                    strict.set_fixed(r, c2, canonical(r, c2));
                else
                    strict.set_free(r, c2);
        for (const auto& [rc, v] : cells) strict.set_fixed(rc.first, rc.second, v);

        SolveOptions opts;
        opts.tolerance = tolerance < 1e-10 ? tolerance : 1e-10;
        opts.initial = canonical;
        opts.restarts = 8;
        SolveResult sr = solve_compatible_acs(omega, strict, opts);

        Solved s;
        if (sr.converged) {
            s = {sr.j, true, false, sr.residuals};
        } else {
            // structural fallback: canonical nonzero cells stay pinned, the
            // canonically-zeroed directions are freed so non-center rows may
            // move (the connection is no longer pinned by shared rows)
            PatternSpec loose = PatternSpec::structural(e);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c2 = 0; c2 < n; ++c2)
                    if (loose.state(r, c2) == CellState::Free && canonical(r, c2) != 0.0)
                        loose.set_fixed(r, c2, canonical(r, c2));
            for (const auto& [rc, v] : cells) loose.set_fixed(rc.first, rc.second, v);
            SolveOptions o2 = opts;
            o2.initial = canonical;
            SolveResult sr2 = solve_compatible_acs(omega, loose, o2);
            s = {sr2.j, sr2.converged, true, sr2.residuals};
            all_strict = false;
        }
        ProbeAssignment pa;
        pa.cells = cells;
        pa.feasible = s.ok;
        pa.off_hypothesis = s.off_hypothesis;
        pa.residuals = s.res;
        rep.assignments.push_back(pa);
        solved.push_back(std::move(s));
    }

    rep.all_feasible = true;
    for (const auto& s : solved)
        if (!s.ok) rep.all_feasible = false;

    if (rep.all_feasible && solved.size() >= 2) {
        std::vector<std::vector<Eigen::MatrixXd>> gammas, riemanns;
        std::vector<Eigen::MatrixXd> riccis;
        for (const auto& s : solved) {
            Eigen::MatrixXd g = omega * s.j;
            auto gm = float_gamma(inst.algebra, g);
            auto rm = float_riemann(inst.algebra, gm);
            riccis.push_back(float_ricci(rm, n));
            gammas.push_back(std::move(gm));
            riemanns.push_back(std::move(rm));
        }
        for (std::size_t a = 0; a < solved.size(); ++a)
            for (std::size_t b2 = a + 1; b2 < solved.size(); ++b2) {
                for (std::size_t m = 0; m < n; ++m) {
                    double d = (gammas[a][m] - gammas[b2][m]).cwiseAbs().maxCoeff();
                    if (d > rep.max_gamma_deviation) rep.max_gamma_deviation = d;
                }
                for (std::size_t m = 0; m < n * n; ++m) {
                    double d = (riemanns[a][m] - riemanns[b2][m]).cwiseAbs().maxCoeff();
                    if (d > rep.max_riemann_deviation) rep.max_riemann_deviation = d;
                }
                double d = (riccis[a] - riccis[b2]).cwiseAbs().maxCoeff();
                if (d > rep.max_ricci_deviation) rep.max_ricci_deviation = d;
            }
        rep.lemma_confirmed = all_strict && rep.max_gamma_deviation <= tolerance &&
                              rep.max_riemann_deviation <= tolerance;
        if (!all_strict)
            rep.note =
                "some assignments admit no structure with non-center rows held; "
                "solved with the structural pattern instead (off-hypothesis)";
    } else if (!rep.all_feasible) {
        rep.note = "probe inconclusive: a sub-solve failed to converge";
    }
    return rep;
}

ZeroCurvatureReport zero_curvature_probe(const LieAlgebra& l, const TwoForm& w,
                                         std::size_t trials, std::uint64_t seed,
                                         double tolerance) {
    if (!l.is_abelian())
        throw ValidationError("abelian", "zero-curvature probe requires an abelian algebra");
    std::size_t n = l.dim();
    Eigen::MatrixXd omega = to_float(w.matrix());
    ZeroCurvatureReport rep;
    rep.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        SolveOptions opts;
        opts.seed = seed + t;
        PatternSpec pattern(n);  // everything free
        SolveResult sr = solve_compatible_acs(omega, pattern, opts);
        if (!sr.converged) continue;
        ++rep.converged;
        Eigen::MatrixXd g = omega * sr.j;
        auto gamma = float_gamma(l, g);
        auto riem = float_riemann(l, gamma);
        for (const auto& m : riem) {
            double d = m.cwiseAbs().maxCoeff();
            if (d > rep.max_abs_riemann) rep.max_abs_riemann = d;
        }
    }
    rep.passed = rep.converged == rep.trials && rep.max_abs_riemann <= tolerance;
    return rep;
}

}  // namespace nilgeo
