#include "nilgeo/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "nilgeo/errors.hpp"

namespace nilgeo {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "jacobi",
        "omega_closed",
        "omega_nondegenerate",
        "acs_square",
        "compatibility",
        "metric_symmetric",
        "metric_signature",
        "lemma_c1g_omega_center",
        "central_ideal_orthogonal",
        "central_nabla_zero",
        "torsion_identity",
        "metric_compatibility",
        "riemann_antisymmetry",
        "bianchi_first",
        "ricci_symmetric",
        "ricci_matches_paper",
        "ricci_support",
        "scalar_zero",
        "curvature_square_zero",
        "hermitian_ricci",
        "nijenhuis_nonzero",
        "chain_invariant",
        "thm_direct_sum",
    };
    return names;
}

namespace {

struct SuiteBuilder {
    Report& rep;
    bool aborted = false;
    std::string aborted_by;

    void add(const std::string& name, CheckStatus st, const std::string& residual = "",
             const std::string& detail = "") {
        CheckResult c;
        c.name = name;
        c.status = st;
        if (!residual.empty()) c.residual = residual;
        c.detail = detail;
        rep.checks.push_back(std::move(c));
    }
    void pass(const std::string& name, const std::string& residual = "0",
              const std::string& detail = "") {
        add(name, CheckStatus::Pass, residual, detail);
    }
    void fail(const std::string& name, const std::string& residual,
              const std::string& detail) {
        add(name, CheckStatus::Fail, residual, detail);
    }
    void skip(const std::string& name, const std::string& why) {
        add(name, CheckStatus::Inconclusive, "", why);
    }
    /// Fails `name` and marks every remaining check inconclusive.
    void abort_from(const std::string& name, const std::string& residual,
                    const std::string& detail) {
        fail(name, residual, detail);
        aborted = true;
        aborted_by = name;
    }
    void finish_aborted() {
        const auto& names = check_names();
        std::size_t have = rep.checks.size();
        for (std::size_t i = have; i < names.size(); ++i)
            skip(names[i], "prerequisite " + aborted_by + " failed");
    }
};

std::string sig_str(const Signature& s) {
    return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," +
           std::to_string(s.null) + ")";
}

}  // namespace

Report run_suite_on(const CatalogEntry& e, const ParamAssignment& given) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.entry = e.id;
    SuiteBuilder b{rep};

    ParamAssignment p = complete_params(e, given);
    rep.params = p;
    std::size_t n = e.dim;

    // 1. jacobi
    Tensor3 c(n);
    for (const auto& bt : e.brackets)
        for (const auto& [k, v] : bt.coeffs) {
            c(k - 1, bt.i - 1, bt.j - 1) = v;
            c(k - 1, bt.j - 1, bt.i - 1) = -v;
        }
    auto violations = jacobi_violations(c);
    if (!violations.empty()) {
        b.abort_from("jacobi", "", std::to_string(violations.size()) + " violating triple(s)");
        b.finish_aborted();
        return rep;
    }
    b.pass("jacobi");
    LieAlgebra l = LieAlgebra::unchecked(n, c);

    // 2-3. omega closed and nondegenerate
    TwoForm w = TwoForm::from_terms(n, e.omega_terms(p));
    {
        ThreeForm dw = ce_differential(l, w);
        if (!dw.is_zero()) {
            b.abort_from("omega_closed", dw.tensor().max_abs().str(), "d(omega) != 0");
            b.finish_aborted();
            return rep;
        }
        b.pass("omega_closed");
        Rational det = w.matrix().det();
        if (det.is_zero()) {
            b.abort_from("omega_nondegenerate", "0", "det(omega) = 0");
            b.finish_aborted();
            return rep;
        }
        b.pass("omega_nondegenerate", "0", "det = " + det.str());
    }

    // 4-5. J^2 = -I and compatibility
    Acs j(e.jay(p));
    {
        Matrix r = check_acs(j);
        if (!r.is_zero()) {
            b.abort_from("acs_square", r.max_abs().str(), "J^2 + I != 0");
            b.finish_aborted();
            return rep;
        }
        b.pass("acs_square");
        Matrix comp = check_compatible(w, j);
        if (!comp.is_zero()) {
            b.abort_from("compatibility", comp.max_abs().str(), "omega(J.,.)+omega(.,J.) != 0");
            b.finish_aborted();
            return rep;
        }
        b.pass("compatibility");
    }

    // 6-7. metric
    Matrix gm = w.matrix() * j.matrix();
    if (!gm.is_symmetric()) {
        b.abort_from("metric_symmetric", "", "omega*J is not symmetric");
        b.finish_aborted();
        return rep;
    }
    b.pass("metric_symmetric");
    Metric g(gm);
    {
        const Signature& s = g.signature();
        bool ok = e.expect_definite_metric ? (s.positive == n && s.negative == 0)
                                           : s.is_indefinite();
        if (ok)
            b.pass("metric_signature", "", "signature " + sig_str(s));
        else
            b.fail("metric_signature", "", "signature " + sig_str(s) + " unexpected");
    }

    Subspace center = l.center();
    Subspace c1 = l.bracket_with_algebra(Subspace::full(n));

    // 8. omega(C^1 g, Z) = 0
    if (omega_orthogonal(w, c1, center))
        b.pass("lemma_c1g_omega_center");
    else
        b.fail("lemma_c1g_omega_center", "", "omega(C1g, Z) != 0");

    // 9. g(C^1 g + J C^1 g, b) = 0 for a central J-invariant ideal b
    if (e.central_ideal) {
        Subspace ideal = chain_subspace(e, *e.central_ideal);
        std::vector<std::vector<Rational>> jc1;
        for (std::size_t r = 0; r < c1.dim(); ++r) jc1.push_back(j.apply(c1.basis_vector(r)));
        Subspace c1jc1 = sum(c1, Subspace::span_of(n, jc1));
        bool ok = center.contains(ideal) && j_invariant(j, ideal);
        Rational worst = 0;
        for (std::size_t a2 = 0; a2 < c1jc1.dim() && ok; ++a2)
            for (std::size_t b2 = 0; b2 < ideal.dim(); ++b2) {
                Rational v = g.value(c1jc1.basis_vector(a2), ideal.basis_vector(b2));
                if (abs(v) > worst) worst = abs(v);
            }
        if (!center.contains(ideal) || !j_invariant(j, ideal))
            b.fail("central_ideal_orthogonal", "", "stored ideal is not central J-invariant");
        else if (worst.is_zero())
            b.pass("central_ideal_orthogonal");
        else
            b.fail("central_ideal_orthogonal", worst.str(), "orthogonality fails");
    } else {
        b.skip("central_ideal_orthogonal", "no central J-invariant ideal for this entry");
    }

    Connection conn = levi_civita(l, g);

    // 10. central covariant derivatives vanish
    {
        Subspace dirs(n);
        std::string mode;
        if (j_invariant(j, c1)) {
            dirs = center;
            mode = "C1g is J-invariant; all central directions";
        } else if (e.central_ideal) {
            dirs = chain_subspace(e, *e.central_ideal);
            mode = "central J-invariant ideal directions";
        }
        if (dirs.dim() == 0) {
            b.skip("central_nabla_zero", "lemma hypotheses not applicable");
        } else {
            Rational worst = 0;
            for (std::size_t r = 0; r < dirs.dim(); ++r) {
                auto x = dirs.basis_vector(r);
                for (std::size_t i = 0; i < n; ++i) {
                    std::vector<Rational> ei(n);
                    ei[i] = 1;
                    for (const auto& v : conn.covariant_derivative(x, ei))
                        if (abs(v) > worst) worst = abs(v);
                    for (const auto& v : conn.covariant_derivative(ei, x))
                        if (abs(v) > worst) worst = abs(v);
                }
            }
            if (worst.is_zero())
                b.pass("central_nabla_zero", "0", mode);
            else
                b.fail("central_nabla_zero", worst.str(), mode);
        }
    }

    // 11-12. torsion and metric compatibility
    {
        Rational worst = 0;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j2 = 0; j2 < n; ++j2) {
                    Rational v = conn.gamma(k, i, j2) - conn.gamma(k, j2, i) - l.c(k, i, j2);
                    if (abs(v) > worst) worst = abs(v);
                }
        if (worst.is_zero())
            b.pass("torsion_identity");
        else
            b.fail("torsion_identity", worst.str(), "Gamma antisymmetric part != C");
    }
    {
        Rational worst = 0;
        const Matrix& gmat = g.matrix();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j2 = 0; j2 < n; ++j2)
                for (std::size_t k = 0; k < n; ++k) {
                    Rational v;
                    for (std::size_t l2 = 0; l2 < n; ++l2) {
                        v += gmat(l2, k) * conn.gamma(l2, i, j2);
                        v += gmat(j2, l2) * conn.gamma(l2, i, k);
                    }
                    if (abs(v) > worst) worst = abs(v);
                }
        if (worst.is_zero())
            b.pass("metric_compatibility");
        else
            b.fail("metric_compatibility", worst.str(), "nabla g != 0");
    }

    Tensor4 r = riemann(l, conn);

    // 13-15. curvature identities
    {
        Rational worst = 0;
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j2 = 0; j2 < n; ++j2)
                    for (std::size_t k = 0; k < n; ++k) {
                        Rational v = r(s, i, j2, k) + r(s, j2, i, k);
                        if (abs(v) > worst) worst = abs(v);
                    }
        if (worst.is_zero())
            b.pass("riemann_antisymmetry");
        else
            b.fail("riemann_antisymmetry", worst.str(), "");
    }
    {
        Rational worst = 0;
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j2 = 0; j2 < n; ++j2)
                    for (std::size_t k = 0; k < n; ++k) {
                        Rational v = r(s, i, j2, k) + r(s, j2, k, i) + r(s, k, i, j2);
                        if (abs(v) > worst) worst = abs(v);
                    }
        if (worst.is_zero())
            b.pass("bianchi_first");
        else
            b.fail("bianchi_first", worst.str(), "");
    }
    Matrix ric = ricci(r);
    if (ric.is_symmetric())
        b.pass("ricci_symmetric");
    else
        b.fail("ricci_symmetric", "", "Ric != Ric^T");

    // 16. Ricci against the stated closed form
    if (e.expected_ricci_fn) {
        Matrix diff = ric - e.expected_ricci_fn(p);
        if (diff.is_zero())
            b.pass("ricci_matches_paper");
        else
            b.fail("ricci_matches_paper", diff.max_abs().str(), "closed-form mismatch");
    } else {
        b.skip("ricci_matches_paper", "no closed form stated for this entry");
    }

    // 17. Ricci support confinement
    if (e.ricci_support == RicciSupport::Unstated) {
        b.skip("ricci_support", "no support claim for this entry");
    } else {
        bool ok = true;
        for (std::size_t i2 = 0; i2 < n && ok; ++i2)
            for (std::size_t j2 = 0; j2 < n && ok; ++j2) {
                bool allowed = e.ricci_support == RicciSupport::Single11
                                   ? (i2 == 0 && j2 == 0)
                                   : (i2 < 2 && j2 < 2);
                if (!allowed && !ric(i2, j2).is_zero()) ok = false;
            }
        if (ok)
            b.pass("ricci_support");
        else
            b.fail("ricci_support", "", "Ricci support outside the stated block");
    }

    // 18-19. scalar invariants
    if (e.ricci_support == RicciSupport::Unstated) {
        b.skip("scalar_zero", "not claimed for this entry");
        b.skip("curvature_square_zero", "not claimed for this entry");
    } else {
        Rational s = scalar_curvature(g, ric);
        if (s.is_zero())
            b.pass("scalar_zero");
        else
            b.fail("scalar_zero", s.str(), "S != 0");
        Rational rr = curvature_scalar_square(g, r);
        if (rr.is_zero())
            b.pass("curvature_square_zero");
        else
            b.fail("curvature_square_zero", rr.str(), "g(R,R) != 0");
    }

    // 20. Hermitian-Ricci expectation
    if (!e.hermitian_expected) {
        b.skip("hermitian_ricci", "no Hermitian claim for this entry");
    } else {
        bool herm = ricci_hermitian(ric, j);
        if (herm == *e.hermitian_expected)
            b.pass("hermitian_ricci", "",
                   herm ? "J-Hermitian as stated" : "non-Hermitian as stated");
        else
            b.fail("hermitian_ricci", "",
                   herm ? "unexpectedly J-Hermitian" : "expected J-Hermitian");
    }

    // 21. non-integrability
    {
        Tensor3 nj = nijenhuis(l, j);
        if (!nj.is_zero())
            b.pass("nijenhuis_nonzero", "", "max |N| = " + nj.max_abs().str());
        else
            b.fail("nijenhuis_nonzero", "0", "Nijenhuis tensor vanishes");
    }

    // 22. stored chain terms are J-invariant ideals
    if (e.invariant_chain.empty()) {
        b.skip("chain_invariant", "no stored chain");
    } else {
        bool ok = true;
        std::string why;
        for (const auto& idx : e.invariant_chain) {
            Subspace s = chain_subspace(e, idx);
            if (!s.contains(l.bracket_with_algebra(s))) {
                ok = false;
                why = "chain term is not an ideal";
            } else if (!j_invariant(j, s)) {
                ok = false;
                why = "chain term is not J-invariant";
            }
        }
        if (ok)
            b.pass("chain_invariant");
        else
            b.fail("chain_invariant", "", why);
    }

    // 23. direct-sum decomposition checks
    if (!e.decomposition_abc) {
        b.skip("thm_direct_sum", "no decomposition stored");
    } else {
        const auto& d = *e.decomposition_abc;
        DecompositionReport dr =
            nabla_subspace_checks(l, w, j, g, chain_subspace(e, d.a), chain_subspace(e, d.b),
                                  chain_subspace(e, d.c));
        if (!dr.hypotheses_hold) {
            std::string failed;
            for (const auto& h : dr.hypotheses)
                if (!h.holds) failed += (failed.empty() ? "" : ", ") + h.name;
            b.skip("thm_direct_sum", "hypotheses not satisfied: " + failed);
        } else if (dr.conclusions_hold) {
            std::string detail = "hypotheses and all clauses hold; literal one-in-C clause ";
            detail += dr.literal_one_in_c.holds ? "also holds" : "fails (C not central)";
            b.pass("thm_direct_sum", "", detail);
        } else {
            std::string failed;
            for (const auto& cl : dr.nabla_clauses)
                if (!cl.holds) failed += (failed.empty() ? "" : ", ") + cl.name;
            for (const auto& cl : dr.r_clauses)
                if (!cl.holds) failed += (failed.empty() ? "" : ", ") + cl.name;
            if (!dr.ricci_clause.holds)
                failed += (failed.empty() ? "" : ", ") + dr.ricci_clause.name;
            b.fail("thm_direct_sum", "", "clauses failed: " + failed);
        }
    }

    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

std::vector<Report> run_suite(const std::string& id, std::size_t samples, std::uint64_t seed) {
    const CatalogEntry& e = catalog_entry(id);
    auto assignments = sample_params(id, samples, seed);
    std::vector<Report> out(assignments.size(), Report{});
    std::size_t threads = 1;
    if (const char* env = std::getenv("NILGEO_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        threads = v > 0 ? static_cast<std::size_t>(v) : 1;
    } else {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, assignments.size() ? assignments.size() : std::size_t(1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < assignments.size(); ++i)
            out[i] = run_suite_on(e, assignments[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= assignments.size()) return;
                    out[i] = run_suite_on(e, assignments[i]);
                }
            });
        for (auto& th : pool) th.join();
    }
    return out;
}

Summary summarize(const std::vector<Report>& reports, std::size_t entries) {
    Summary s;
    s.entries = entries;
    s.reports = reports.size();
    for (const auto& name : check_names()) s.per_check[name] = {0, 0, 0};
    for (const auto& r : reports)
        for (const auto& c : r.checks) {
            auto& slot = s.per_check[c.name];
            switch (c.status) {
                case CheckStatus::Pass:
                    ++s.passed;
                    ++slot[0];
                    break;
                case CheckStatus::Fail:
                    ++s.failed;
                    ++slot[1];
                    break;
                case CheckStatus::Inconclusive:
                    ++s.inconclusive;
                    ++slot[2];
                    break;
            }
        }
    return s;
}

RunResult run_all(std::size_t samples, std::uint64_t seed) {
    RunResult out;
    for (const auto& e : catalog_entries()) {
        auto reports = run_suite(e.id, samples, seed);
        for (auto& r : reports) out.reports.push_back(std::move(r));
    }
    out.summary = summarize(out.reports, catalog_entries().size());
    return out;
}

}  // namespace nilgeo
