#include "nilgeo/catalog.hpp"

#include <sstream>

#include "nilgeo/errors.hpp"

namespace nilgeo {

namespace {

using P = ParamAssignment;
const Rational kOne = 1;

Rational get(const P& p, const char* name) {
    auto it = p.find(name);
    if (it == p.end()) throw ConstraintError(std::string("missing parameter: ") + name);
    return it->second;
}

void put(Matrix& m, int r, int c, const Rational& v) { m(r - 1, c - 1) = v; }

Rational sq(const Rational& x) { return x * x; }

// J(e_a) = x11 e_a - ((1+x11^2)/x12) e_b,  J(e_b) = x12 e_a - x11 e_b
void block_pp(Matrix& m, int a, int b, const Rational& x11, const Rational& x12) {
    put(m, a, a, x11);
    put(m, b, a, -(kOne + sq(x11)) / x12);
    put(m, a, b, x12);
    put(m, b, b, -x11);
}

// J(e_a) = -(1/x) e_b,  J(e_b) = x e_a
void block_sym(Matrix& m, int a, int b, const Rational& x) {
    put(m, b, a, -x.inverse());
    put(m, a, b, x);
}

// J(e_a) = x11 e_a + ((1+x11^2)/x12) e_b,  J(e_b) = -x12 e_a - x11 e_b
void block_pm(Matrix& m, int a, int b, const Rational& x11, const Rational& x12) {
    put(m, a, a, x11);
    put(m, b, a, (kOne + sq(x11)) / x12);
    put(m, a, b, -x12);
    put(m, b, b, -x11);
}

std::vector<FormTerm> scaled(const Rational& lambda, std::vector<FormTerm> terms) {
    for (auto& t : terms) t.value *= lambda;
    return terms;
}

Matrix ric_block(const Rational& r11, const Rational& r12, const Rational& r22) {
    Matrix m(6, 6);
    m(0, 0) = r11;
    m(0, 1) = r12;
    m(1, 0) = r12;
    m(1, 1) = r22;
    return m;
}

std::vector<BracketTerm> br(std::initializer_list<std::tuple<int, int, int, Rational>> list) {
    std::vector<BracketTerm> out;
    for (const auto& [i, j, k, v] : list) out.push_back({i, j, {{k, v}}});
    return out;
}

ParamSpec free_param(const char* n) { return {n, ParamKind::Free, nullptr, ""}; }
ParamSpec nonzero(const char* n) { return {n, ParamKind::NonZero, nullptr, ""}; }
ParamSpec scale_param() {
    return {"lambda", ParamKind::NonZero, [](const P&) { return kOne; },
            "1 (overall scale; any nonzero value admissible)"};
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;

    // ---------------------------------------------------------------- G1
    {
        CatalogEntry e;
        e.id = "G1";
        e.omega_display = "e1^e6 + (1-t) e2^e5 + t e3^e4";
        e.summary = "filiform, type (1,2,3,4,6); form family in t; Hermitian Ricci at derived psi34";
        e.brackets = br({{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1},
                         {1, 5, 6, 1}, {2, 3, 5, 1}, {2, 4, 6, 1}});
        e.omega_terms = [](const P& p) {
            Rational t = get(p, "t");
            return std::vector<FormTerm>{{1, 6, 1}, {2, 5, kOne - t}, {3, 4, t}};
        };
        e.params = {{"t", ParamKind::NotZeroOne, nullptr},
                    free_param("psi11"),
                    nonzero("psi12"),
                    {"psi34", ParamKind::NonZero,
                     [](const P& p) { return get(p, "psi12") / (get(p, "t") - kOne); },
                     "psi12 / (t - 1)  (Hermitian Ricci)"}};
        e.jay = [](const P& p) {
            Rational t = get(p, "t"), a = get(p, "psi11"), b = get(p, "psi12");
            Rational c = b / (t - kOne);
            Matrix m(6, 6);
            block_pp(m, 1, 2, a, b);
            block_sym(m, 3, 4, get(p, "psi34"));
            block_pp(m, 5, 6, a, c);
            return m;
        };
        e.expected_ricci_fn = [](const P& p) {
            Rational t = get(p, "t"), a = get(p, "psi11"), b = get(p, "psi12"),
                     s = get(p, "psi34");
            Rational d = sq(t - kOne);
            Rational half(1, 2);
            return ric_block(-half * (sq(a) * sq(b) + d * sq(s)) / d,
                             -half * a * b * sq(b) / d, -half * sq(sq(b)) / d);
        };
        e.hermitian_expected = true;
        e.invariant_chain = {{5, 6}, {3, 4, 5, 6}};
        e.decomposition_abc = Decomposition{{1, 2}, {3, 4}, {5, 6}};
        cat.push_back(std::move(e));
    }

    // ---------------------------------------------------------------- G1.riem
    {
        CatalogEntry e;
        e.id = "G1.riem";
        e.omega_display = "e1^e6 + (1-t) e2^e5 + t e3^e4";
        e.summary = "Riemannian variant of G1 for t in (0,1); the 4-dim ideal is not J-invariant";
        e.brackets = cat[0].brackets;
        e.omega_terms = cat[0].omega_terms;
        e.params = {{"t", ParamKind::OpenUnitInterval, nullptr}};
        e.jay = [](const P&) {
            Matrix m(6, 6);
            put(m, 6, 1, 1);
            put(m, 5, 2, 1);
            put(m, 4, 3, 1);
            put(m, 3, 4, -1);
            put(m, 2, 5, -1);
            put(m, 1, 6, -1);
            return m;
        };
        e.ricci_support = RicciSupport::Unstated;
        e.expect_definite_metric = true;
        e.notes = "J(e1)=e6, J(e2)=e5, J(e3)=e4; associated metric positive definite on (0,1)";
        cat.push_back(std::move(e));
    }

    // ---------------------------------------------------------------- G2
    {
        CatalogEntry e;
        e.id = "G2";
        e.omega_display = "lambda (e1^e6 + e2^e4 - e2^e5 + e3^e4)";
        e.summary = "filiform, type (1,2,3,4,6); Hermitian Ricci at psi34 = psi12";
        e.brackets = br({{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1},
                         {1, 5, 6, 1}, {2, 3, 6, 1}});
        e.omega_terms = [](const P& p) {
            return scaled(get(p, "lambda"),
                          {{1, 6, 1}, {2, 4, 1}, {2, 5, -1}, {3, 4, 1}});
        };
        e.params = {free_param("psi11"), nonzero("psi12"),
                    {"psi34", ParamKind::NonZero,
                     [](const P& p) { return get(p, "psi12"); },
                     "psi12  (Hermitian Ricci)"},
                    scale_param()};
        e.jay = [](const P& p) {
            Rational a = get(p, "psi11"), b = get(p, "psi12"), s = get(p, "psi34");
            Matrix m(6, 6);
            block_pp(m, 1, 2, a, b);
            put(m, 4, 3, -s.inverse());
            put(m, 5, 3, -s.inverse());
            put(m, 3, 4, s);
            put(m, 5, 4, -a);
            put(m, 6, 4, (kOne + sq(a)) / b);
            put(m, 5, 5, a);
            put(m, 6, 5, -(kOne + sq(a)) / b);
            put(m, 5, 6, b);
            put(m, 6, 6, -a);
            return m;
        };
        e.expected_ricci_fn = [](const P& p) {
            Rational a = get(p, "psi11"), b = get(p, "psi12"), s = get(p, "psi34");
            Rational half(1, 2);
            return ric_block(-half * (sq(a) * sq(b) + sq(s)), -half * a * b * sq(b),
                             -half * sq(sq(b)));
        };
        e.hermitian_expected = true;
        e.invariant_chain = {{5, 6}, {3, 4, 5, 6}};
        e.decomposition_abc = Decomposition{{1, 2}, {3, 4}, {5, 6}};
        e.notes = "the four-term scale family is stored normalized; term order is immaterial";
        cat.push_back(std::move(e));
    }

    // ---------------------------------------------------------------- G3
    {
        CatalogEntry e;
        e.id = "G3";
        e.omega_display = "e1^e6 - e2^e5 + e3^e4";
        e.summary = "filiform, type (1,2,3,4,6); single symplectic form; Hermitian at psi34 = psi12";
        e.brackets = br({{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {1, 5, 6, 1}});
        e.omega_terms = [](const P&) {
            return std::vector<FormTerm>{{1, 6, 1}, {2, 5, -1}, {3, 4, 1}};
        };
        e.params = {free_param("psi11"), nonzero("psi12"),
                    {"psi34", ParamKind::NonZero,
                     [](const P& p) { return get(p, "psi12"); },
                     "psi12  (Hermitian Ricci)"}};
        e.jay = [](const P& p) {
            Rational a = get(p, "psi11"), b = get(p, "psi12");
            Matrix m(6, 6);
            block_pp(m, 1, 2, a, b);
            block_sym(m, 3, 4, get(p, "psi34"));
            block_pp(m, 5, 6, a, b);
            return m;
        };
        e.expected_ricci_fn = [](const P& p) {
            Rational a = get(p, "psi11"), b = get(p, "psi12"), s = get(p, "psi34");
            Rational half(1, 2);
            return ric_block(-half * (sq(a) * sq(b) + sq(s)), -half * a * b * sq(b),
                             -half * sq(sq(b)));
        };
        e.hermitian_expected = true;
        e.invariant_chain = {{5, 6}, {3, 4, 5, 6}};
        e.decomposition_abc = Decomposition{{1, 2}, {3, 4}, {5, 6}};
        cat.push_back(std::move(e));
    }

    // ---------------------------------------------------------------- G4
    {
        CatalogEntry e;
        e.id = "G4";
        e.omega_display = "lambda (e1^e4 + t e1^e5 + e1^e6 + e2^e5 + e3^e4)";
        e.summary = "type (1,3,4,6); form family in t; Ricci never Hermitian";
        e.brackets = br({{1, 2, 3, 1}, {1, 3, 5, 1}, {1, 5, 6, 1},
                         {2, 3, 4, 1}, {2, 4, 6, 1}});
        e.omega_terms = [](const P& p) {
            return scaled(get(p, "lambda"),
                          {{1, 4, 1}, {1, 5, get(p, "t")}, {1, 6, 1}, {2, 5, 1}, {3, 4, 1}});
        };
        e.params = {free_param("t"), free_param("psi11"), nonzero("psi12"),
                    nonzero("psi34"), scale_param()};
        e.jay = [](const P& p) {
            Rational t = get(p, "t"), a = get(p, "psi11"), b = get(p, "psi12"),
                     s = get(p, "psi34");
            Matrix m(6, 6);
            block_pp(m, 1, 2, a, b);
            put(m, 4, 3, -s.inverse());
            put(m, 6, 3, s.inverse());
            put(m, 3, 4, s);
            put(m, 5, 4, -b);
            put(m, 6, 4, -a + b * t);
            put(m, 5, 5, -b * t + a);
            put(m, 6, 5, (Rational(-2) * b * a * t + kOne + sq(a) + sq(b) * sq(t)) / b);
            put(m, 5, 6, -b);
            put(m, 6, 6, -a + b * t);
            return m;
        };
        e.expected_ricci_fn = [](const P& p) {
            Rational a = get(p, "psi11"), b = get(p, "psi12"), s = get(p, "psi34");
            Rational half(1, 2);
            return ric_block(-half * sq(b) * sq(a), -half * a * b * sq(b),
                             -half * (sq(sq(b)) + sq(s)));
        };
        e.hermitian_expected = false;
        e.invariant_chain = {{5, 6}, {3, 4, 5, 6}};
        e.decomposition_abc = Decomposition{{1, 2}, {3, 4}, {5, 6}};
        cat.push_back(std::move(e));
    }

    // ---------------------------------------------------------------- G5.x
    auto g5_brackets = br({{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 6, -1},
                           {2, 3, 5, 1}, {2, 5, 6, 1}});
    {
        CatalogEntry e;
        e.id = "G5.1";
        e.omega_display = "lambda (t e1^e4 + e1^e5 + e1^e6 + e2^e4 + e3^e5)";
        e.summary = "type (1,3,4,6), first form (family in t); Ricci never Hermitian";
        e.brackets = g5_brackets;
        e.omega_terms = [](const P& p) {
            return scaled(get(p, "lambda"),
                          {{1, 4, get(p, "t")}, {1, 5, 1}, {1, 6, 1}, {2, 4, 1}, {3, 5, 1}});
        };
        e.params = {free_param("t"), free_param("psi11"), nonzero("psi12"),
                    nonzero("psi35"), scale_param()};
        e.jay = [](const P& p) {
            Rational t = get(p, "t"), a = get(p, "psi11"), b = get(p, "psi12"),
                     s = get(p, "psi35");
            Matrix m(6, 6);
            block_pp(m, 1, 2, a, b);
            put(m, 5, 3, -s.inverse());
            put(m, 6, 3, s.inverse());
            put(m, 4, 4, -b * t + a);
            put(m, 6, 4, (Rational(-2) * b * a * t + sq(b) * sq(t) + kOne + sq(a)) / b);
            put(m, 3, 5, s);
            put(m, 4, 5, -b);
            put(m, 6, 5, -a + b * t);
            put(m, 4, 6, -b);
            put(m, 6, 6, -a + b * t);
            return m;
        };
        e.expected_ricci_fn = [](const P& p) {
            Rational a = get(p, "psi11"), b = get(p, "psi12"), s = get(p, "psi35");
            Rational half(1, 2);
            return ric_block(-half * sq(b) * sq(a), -half * a * b * sq(b),
                             -half * (sq(sq(b)) + sq(s)));
        };
        e.hermitian_expected = false;
        e.invariant_chain = {{4, 6}, {3, 4, 5, 6}};
        e.decomposition_abc = Decomposition{{1, 2}, {3, 5}, {4, 6}};
        cat.push_back(std::move(e));
    }

    auto g5_ric = [](const P& p) {
        Rational b = get(p, "psi12");
        Rational c = (kOne + sq(b)) * (kOne + sq(b)) * (kOne + sq(b));
        Rational f(-1, 32);
        return ric_block(f * c / sq(sq(b)), 0, f * c / sq(b));
    };

    {
        CatalogEntry e;
        e.id = "G5.2";
        e.omega_display = "lambda (e1^e6 - 2 e1^e5 - 2 e2^e4 + e2^e6 + e3^e4 + e3^e5)";
        e.summary = "type (1,3,4,6), second form; Hermitian Ricci (psi11 = 0, bound psi34)";
        e.brackets = g5_brackets;
        e.omega_terms = [](const P& p) {
            return scaled(get(p, "lambda"), {{1, 5, -2}, {1, 6, 1}, {2, 4, -2},
                                             {2, 6, 1}, {3, 4, 1}, {3, 5, 1}});
        };
        e.params = {nonzero("psi12"), scale_param()};
        e.jay = [](const P& p) {
            Rational b = get(p, "psi12");
            Rational q = (sq(b) + kOne) / (Rational(4) * b);
            Rational u = sq(b) + kOne;
            Matrix m(6, 6);
            put(m, 1, 2, b);
            put(m, 2, 1, -b.inverse());
            put(m, 3, 1, Rational(-2) / b);
            put(m, 3, 4, q);
            put(m, 3, 5, q);
            put(m, 4, 3, Rational(-4) * b / u);
            put(m, 4, 5, (kOne - sq(b)) / (Rational(2) * b));
            put(m, 4, 6, q);
            put(m, 5, 2, Rational(8) * b / u);
            put(m, 5, 5, (sq(b) - kOne) / (Rational(2) * b));
            put(m, 5, 6, -q);
            put(m, 6, 1, Rational(-32) * b / sq(u));
            put(m, 6, 2, Rational(16) * (sq(b) - kOne) * b / sq(u));
            put(m, 6, 5, u / b);
            put(m, 6, 6, (kOne - sq(b)) / (Rational(2) * b));
            return m;
        };
        e.expected_ricci_fn = g5_ric;
        e.hermitian_expected = true;
        e.invariant_chain = {{3, 4, 5, 6}};
        cat.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.id = "G5.3";
        e.omega_display = "lambda (e1^e4 - e1^e5 + e1^e6 - e2^e4 + e2^e5 + e2^e6 + e3^e4 + e3^e5)";
        e.summary = "type (1,3,4,6), third form; Hermitian Ricci (psi11 = 0, bound psi34)";
        e.brackets = g5_brackets;
        e.omega_terms = [](const P& p) {
            return scaled(get(p, "lambda"),
                          {{1, 4, 1}, {1, 5, -1}, {1, 6, 1}, {2, 4, -1},
                           {2, 5, 1}, {2, 6, 1}, {3, 4, 1}, {3, 5, 1}});
        };
        e.params = {nonzero("psi12"), scale_param()};
        e.jay = [](const P& p) {
            Rational b = get(p, "psi12");
            Rational q = (sq(b) + kOne) / (Rational(4) * b);
            Rational u = sq(b) + kOne;
            Matrix m(6, 6);
            put(m, 1, 2, b);
            put(m, 2, 1, -b.inverse());
            put(m, 3, 2, -u / b);
            put(m, 3, 3, b.inverse());
            put(m, 3, 4, q);
            put(m, 3, 5, q);
            put(m, 4, 3, Rational(-4) / b);
            put(m, 4, 4, -b.inverse());
            put(m, 4, 5, -u / (Rational(2) * b));
            put(m, 4, 6, q);
            put(m, 5, 1, Rational(-4) / b);
            put(m, 5, 2, Rational(4) / b);
            put(m, 5, 5, (sq(b) - kOne) / (Rational(2) * b));
            put(m, 5, 6, -q);
            put(m, 6, 1, Rational(-8) / b);
            put(m, 6, 2, Rational(-8) / b);
            put(m, 6, 5, u / b);
            put(m, 6, 6, -(sq(b) - kOne) / (Rational(2) * b));
            return m;
        };
        e.expected_ricci_fn = g5_ric;
        e.hermitian_expected = true;
        e.invariant_chain = {{3, 4, 5, 6}};
        cat.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.id = "G5.4";
        e.omega_display = "lambda (2 e1^e4 + e1^e6 + 2 e2^e5 + e2^e6 + e3^e4 + e3^e5)";
        e.summary = "type (1,3,4,6), fourth form; Hermitian Ricci (psi11 = 0, bound psi34)";
        e.brackets = g5_brackets;
        e.omega_terms = [](const P& p) {
            return scaled(get(p, "lambda"), {{1, 4, 2}, {1, 6, 1}, {2, 5, 2},
                                             {2, 6, 1}, {3, 4, 1}, {3, 5, 1}});
        };
        e.params = {nonzero("psi12"), scale_param()};
        e.jay = [](const P& p) {
            Rational b = get(p, "psi12");
            Rational q = (sq(b) + kOne) / (Rational(4) * b);
            Rational u = sq(b) + kOne;
            Rational w = sq(b) - kOne;
            Matrix m(6, 6);
            put(m, 1, 2, b);
            put(m, 2, 1, -b.inverse());
            put(m, 3, 1, Rational(2) * b);
            put(m, 3, 4, q);
            put(m, 3, 5, q);
            put(m, 4, 3, Rational(2) * b * w / u);
            put(m, 4, 5, -w / (Rational(2) * b));
            put(m, 4, 6, q);
            put(m, 5, 2, Rational(-8) * b * sq(b) / u);
            put(m, 5, 3, Rational(-2) * b);
            put(m, 5, 5, w / (Rational(2) * b));
            put(m, 5, 6, -q);
            put(m, 6, 1, Rational(-16) * b * sq(b) * w / sq(u));
            put(m, 6, 2, Rational(-16) * b * sq(b) * w / sq(u));
            put(m, 6, 3, Rational(-4) * b * w / u);
            put(m, 6, 4, Rational(-2) * b);
            put(m, 6, 5, -w / b);
            put(m, 6, 6, -w / (Rational(2) * b));
            return m;
        };
        e.expected_ricci_fn = g5_ric;
        e.hermitian_expected = true;
        e.invariant_chain = {{3, 4, 5, 6}};
        cat.push_back(std::move(e));
    }

    // ---------------------------------------------------------------- G6
    {
        CatalogEntry e;
        e.id = "G6";
        e.omega_display = "e1^e6 + e2^e4 + e2^e5 - e3^e4";
        e.summary = "type (2,3,4,6); Ricci has the single (1,1) component; never Hermitian";
        e.brackets = br({{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 3, 6, 1}});
        e.omega_terms = [](const P&) {
            return std::vector<FormTerm>{{1, 6, 1}, {2, 4, 1}, {2, 5, 1}, {3, 4, -1}};
        };
        e.params = {free_param("psi33"), nonzero("psi43")};
        e.jay = [](const P& p) {
            Rational a = get(p, "psi33"), c = get(p, "psi43");
            Matrix m(6, 6);
            put(m, 1, 2, 1);
            put(m, 2, 1, -1);
            put(m, 3, 3, a);
            put(m, 3, 4, -(kOne + sq(a)) / c);
            put(m, 4, 3, c);
            put(m, 4, 4, -a);
            put(m, 5, 3, -c);
            put(m, 5, 4, a);
            put(m, 5, 6, -1);
            put(m, 6, 4, 1);
            put(m, 6, 5, 1);
            return m;
        };
        e.expected_ricci_fn = [](const P& p) {
            Rational a = get(p, "psi33"), c = get(p, "psi43");
            Matrix m(6, 6);
            m(0, 0) = -sq(kOne + sq(a)) / (Rational(2) * sq(c));
            return m;
        };
        e.ricci_support = RicciSupport::Single11;
        e.hermitian_expected = false;
        e.invariant_chain = {{5, 6}, {3, 4, 5, 6}};
        e.central_ideal = std::vector<int>{5, 6};
        e.decomposition_abc = Decomposition{{1, 2}, {3, 4}, {5, 6}};
        e.notes = "a sign-flipped copy of the form is also symplectic with identical geometry";
        cat.push_back(std::move(e));
    }

    // ---------------------------------------------------------------- G7.x
    auto g7_brackets = br({{1, 2, 4, 1}, {1, 4, 5, 1}, {1, 5, 6, 1},
                           {2, 3, 6, 1}, {2, 4, 6, 1}});
    auto g7_1_ric = [](const P& p) {
        Rational a = get(p, "psi11"), b = get(p, "psi12"), s = get(p, "psi45");
        Rational u = kOne + sq(a);
        Rational half(1, 2);
        return ric_block(-half * (sq(sq(u)) + sq(s) * sq(sq(b))) / sq(sq(b)),
                         -half * u * u * u * a / (b * sq(b)),
                         -half * sq(u) * sq(a) / sq(b));
    };
    auto g7_1_jay = [](const P& p) {
        Rational a = get(p, "psi11"), b = get(p, "psi12"), s = get(p, "psi45");
        Matrix m(6, 6);
        block_pp(m, 1, 2, a, b);
        put(m, 3, 3, -a);
        put(m, 6, 3, -b);
        put(m, 5, 4, -s.inverse());
        put(m, 4, 5, s);
        put(m, 3, 6, (kOne + sq(a)) / b);
        put(m, 6, 6, a);
        return m;
    };
    {
        CatalogEntry e;
        e.id = "G7.1";
        e.omega_display = "lambda (e1^e3 + e2^e6 - e4^e5)";
        e.summary = "type (1,3,4,6), first form; Ricci never Hermitian";
        e.brackets = g7_brackets;
        e.omega_terms = [](const P& p) {
            return scaled(get(p, "lambda"), {{1, 3, 1}, {2, 6, 1}, {4, 5, -1}});
        };
        e.params = {free_param("psi11"), nonzero("psi12"), nonzero("psi45"), scale_param()};
        e.jay = g7_1_jay;
        e.expected_ricci_fn = g7_1_ric;
        e.hermitian_expected = false;
        e.invariant_chain = {{3, 6}, {3, 4, 5, 6}};
        e.decomposition_abc = Decomposition{{1, 2}, {4, 5}, {3, 6}};
        cat.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "G7.2";
        e.omega_display = "lambda (e1^e6 + e2^e5 - e3^e4)";
        e.summary = "type (1,3,4,6), second form; Ricci never Hermitian (psi34 = 1 fixed)";
        e.brackets = g7_brackets;
        e.omega_terms = [](const P& p) {
            return scaled(get(p, "lambda"), {{1, 6, 1}, {2, 5, 1}, {3, 4, -1}});
        };
        e.params = {free_param("psi11"), nonzero("psi12"), scale_param()};
        e.jay = [](const P& p) {
            Rational a = get(p, "psi11"), b = get(p, "psi12");
            Matrix m(6, 6);
            block_pp(m, 1, 2, a, b);
            put(m, 4, 3, -1);
            put(m, 3, 4, 1);
            block_pm(m, 5, 6, a, b);
            return m;
        };
        e.expected_ricci_fn = [](const P& p) {
            Rational a = get(p, "psi11"), b = get(p, "psi12");
            Rational half(1, 2);
            return ric_block(-half * sq(a) * sq(b), -half * a * b * sq(b),
                             -half * sq(sq(b)));
        };
        e.hermitian_expected = false;
        e.invariant_chain = {{5, 6}, {3, 4, 5, 6}};
        e.decomposition_abc = Decomposition{{1, 2}, {3, 4}, {5, 6}};
        cat.push_back(std::move(e));
    }

    // ---------------------------------------------------------------- G8
    {
        CatalogEntry e;
        e.id = "G8";
        e.omega_display = "e1^e6 + e2^e5 - e3^e4";
        e.summary = "type (1,3,4,6); Hermitian Ricci at psi34 = psi12";
        e.brackets = br({{1, 3, 4, 1}, {1, 4, 5, 1}, {1, 5, 6, 1},
                         {2, 3, 5, 1}, {2, 4, 6, 1}});
        e.omega_terms = [](const P&) {
            return std::vector<FormTerm>{{1, 6, 1}, {2, 5, 1}, {3, 4, -1}};
        };
        e.params = {free_param("psi11"), nonzero("psi12"),
                    {"psi34", ParamKind::NonZero,
                     [](const P& p) { return get(p, "psi12"); },
                     "psi12  (Hermitian Ricci)"}};
        e.jay = [](const P& p) {
            Rational a = get(p, "psi11"), b = get(p, "psi12");
            Matrix m(6, 6);
            block_pp(m, 1, 2, a, b);
            block_sym(m, 3, 4, get(p, "psi34"));
            block_pm(m, 5, 6, a, b);
            return m;
        };
        e.expected_ricci_fn = [](const P& p) {
            Rational a = get(p, "psi11"), b = get(p, "psi12"), s = get(p, "psi34");
            Rational half(1, 2);
            return ric_block(-half * (sq(a) * sq(b) + sq(s)), -half * a * b * sq(b),
                             -half * sq(sq(b)));
        };
        e.hermitian_expected = true;
        e.invariant_chain = {{5, 6}, {3, 4, 5, 6}};
        e.decomposition_abc = Decomposition{{1, 2}, {3, 4}, {5, 6}};
        e.notes = "the chain stores the ideals actually preserved by the canonical structure";
        cat.push_back(std::move(e));
    }

    // ---------------------------------------------------------------- G9
    {
        CatalogEntry e;
        e.id = "G9";
        e.omega_display = "lambda (e1^e3 + e2^e6 - e4^e5)";
        e.summary = "type (1,3,4,6); Ricci never Hermitian";
        e.brackets = br({{1, 2, 4, 1}, {1, 4, 5, 1}, {1, 5, 6, 1}, {2, 3, 6, 1}});
        e.omega_terms = [](const P& p) {
            return scaled(get(p, "lambda"), {{1, 3, 1}, {2, 6, 1}, {4, 5, -1}});
        };
        e.params = {free_param("psi11"), nonzero("psi12"), nonzero("psi45"), scale_param()};
        e.jay = g7_1_jay;
        e.expected_ricci_fn = g7_1_ric;
        e.hermitian_expected = false;
        e.invariant_chain = {{3, 6}, {3, 4, 5, 6}};
        e.decomposition_abc = Decomposition{{1, 2}, {4, 5}, {3, 6}};
        cat.push_back(std::move(e));
    }

    // ---------------------------------------------------------------- G19
    {
        CatalogEntry e;
        e.id = "G19";
        e.omega_display = "e1^e3 + e2^e6 - e4^e5";
        e.summary = "type (2,3,4,6), product with a line; single Ricci component; never Hermitian";
        e.brackets = br({{1, 2, 4, 1}, {1, 4, 5, 1}, {1, 5, 6, 1}});
        e.omega_terms = [](const P&) {
            return std::vector<FormTerm>{{1, 3, 1}, {2, 6, 1}, {4, 5, -1}};
        };
        e.params = {nonzero("psi45")};
        e.jay = [](const P& p) {
            Rational s = get(p, "psi45");
            Matrix m(6, 6);
            put(m, 1, 2, 1);
            put(m, 2, 1, -1);
            put(m, 6, 3, -1);
            put(m, 3, 6, 1);
            put(m, 5, 4, -s.inverse());
            put(m, 4, 5, s);
            return m;
        };
        e.expected_ricci_fn = [](const P& p) {
            Matrix m(6, 6);
            m(0, 0) = Rational(-1, 2) * sq(get(p, "psi45"));
            return m;
        };
        e.ricci_support = RicciSupport::Single11;
        e.hermitian_expected = false;
        e.invariant_chain = {{3, 6}, {3, 4, 5, 6}};
        e.central_ideal = std::vector<int>{3, 6};
        e.decomposition_abc = Decomposition{{1, 2}, {4, 5}, {3, 6}};
        cat.push_back(std::move(e));
    }

    // ---------------------------------------------------------------- G20
    {
        CatalogEntry e;
        e.id = "G20";
        e.omega_display = "e1^e6 + e2^e5 - e3^e4";
        e.summary = "type (2,3,4,6), product with a line; single Ricci component; never Hermitian";
        e.brackets = br({{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 3, 5, 1}});
        e.omega_terms = [](const P&) {
            return std::vector<FormTerm>{{1, 6, 1}, {2, 5, 1}, {3, 4, -1}};
        };
        e.params = {nonzero("psi34")};
        e.jay = [](const P& p) {
            Rational s = get(p, "psi34");
            Matrix m(6, 6);
            put(m, 1, 2, 1);
            put(m, 2, 1, -1);
            block_sym(m, 3, 4, s);
            put(m, 6, 5, 1);
            put(m, 5, 6, -1);
            return m;
        };
        e.expected_ricci_fn = [](const P& p) {
            Matrix m(6, 6);
            m(0, 0) = Rational(-1, 2) * sq(get(p, "psi34"));
            return m;
        };
        e.ricci_support = RicciSupport::Single11;
        e.hermitian_expected = false;
        e.invariant_chain = {{5, 6}, {3, 4, 5, 6}};
        e.central_ideal = std::vector<int>{5, 6};
        e.decomposition_abc = Decomposition{{1, 2}, {3, 4}, {5, 6}};
        cat.push_back(std::move(e));
    }

    // ---------------------------------------------------------------- G22
    {
        CatalogEntry e;
        e.id = "G22";
        e.omega_display = "e1^e6 + e2^e5 + e3^e4";
        e.summary = "type (3,4,6), product with a plane; Ricci never Hermitian (psi34 = -1 fixed)";
        e.brackets = br({{1, 2, 5, 1}, {1, 5, 6, 1}});
        e.omega_terms = [](const P&) {
            return std::vector<FormTerm>{{1, 6, 1}, {2, 5, 1}, {3, 4, 1}};
        };
        e.params = {free_param("psi11"), nonzero("psi12")};
        e.jay = [](const P& p) {
            Rational a = get(p, "psi11"), b = get(p, "psi12");
            Matrix m(6, 6);
            block_pp(m, 1, 2, a, b);
            put(m, 4, 3, 1);
            put(m, 3, 4, -1);
            block_pm(m, 5, 6, a, b);
            return m;
        };
        e.expected_ricci_fn = [](const P& p) {
            Rational a = get(p, "psi11"), b = get(p, "psi12");
            Rational half(1, 2);
            return ric_block(-half * sq(a) * sq(b), -half * a * b * sq(b),
                             -half * sq(sq(b)));
        };
        e.hermitian_expected = false;
        e.invariant_chain = {{5, 6}, {3, 4, 5, 6}};
        e.central_ideal = std::vector<int>{3, 4};
        e.decomposition_abc = Decomposition{{1, 2}, {3, 4}, {5, 6}};
        cat.push_back(std::move(e));
    }

    return cat;
}

}  // namespace

std::string constraint_display(const ParamSpec& spec) {
    std::string base;
    switch (spec.kind) {
        case ParamKind::Free: base = "free"; break;
        case ParamKind::NonZero: base = "nonzero"; break;
        case ParamKind::NotZeroOne: base = "not in {0,1}"; break;
        case ParamKind::OpenUnitInterval: base = "in (0,1)"; break;
    }
    if (spec.derive) base += "; derived: " + spec.derive_display;
    return base;
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

bool catalog_has(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return true;
    return false;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    throw Error("unknown catalog id: " + id);
}

ParamAssignment complete_params(const CatalogEntry& e, const ParamAssignment& given) {
    for (const auto& [k, v] : given) {
        bool known = false;
        for (const auto& s : e.params)
            if (s.name == k) known = true;
        if (!known) throw ConstraintError("unknown parameter for " + e.id + ": " + k);
    }
    ParamAssignment p = given;
    for (const auto& s : e.params) {
        if (!p.count(s.name)) {
            if (s.derive)
                p[s.name] = s.derive(p);
            else
                throw ConstraintError("missing parameter: " + s.name);
        }
        const Rational& v = p[s.name];
        switch (s.kind) {
            case ParamKind::Free:
                break;
            case ParamKind::NonZero:
                if (v.is_zero()) throw ConstraintError(s.name + " must be nonzero");
                break;
            case ParamKind::NotZeroOne:
                if (v.is_zero() || v == kOne)
                    throw ConstraintError(s.name + " must avoid {0,1}");
                break;
            case ParamKind::OpenUnitInterval:
                if (v <= Rational(0) || v >= kOne)
                    throw ConstraintError(s.name + " must lie in (0,1)");
                break;
        }
    }
    return p;
}

Instance instantiate(const CatalogEntry& e, const ParamAssignment& params) {
    ParamAssignment p = complete_params(e, params);
    LieAlgebra l(e.dim, e.brackets);
    TwoForm w = TwoForm::from_terms(e.dim, e.omega_terms(p));
    if (!is_symplectic(l, w))
        throw ValidationError("symplectic", e.id + ": form is not symplectic at these parameters");
    Acs j(e.jay(p));
    if (!check_acs(j).is_zero())
        throw ValidationError("acs_square", e.id + ": J^2 = -I fails");
    if (!check_compatible(w, j).is_zero())
        throw ValidationError("compatibility", e.id + ": compatibility fails");
    Metric g = associated_metric(w, j);
    return Instance{std::move(l), std::move(w), std::move(j), std::move(g), std::move(p)};
}

Instance instantiate(const std::string& id, const ParamAssignment& params) {
    return instantiate(catalog_entry(id), params);
}

Matrix expected_ricci(const std::string& id, const ParamAssignment& params) {
    const CatalogEntry& e = catalog_entry(id);
    if (!e.expected_ricci_fn) throw Error(id + " has no stated Ricci closed form");
    return e.expected_ricci_fn(complete_params(e, params));
}

namespace {

// SplitMix64: tiny, portable, stable across platforms.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Rational draw_rational(SplitMix64& rng, ParamKind kind) {
    for (;;) {
        long den = static_cast<long>(rng.next() % 16) + 1;
        long num = static_cast<long>(rng.next() % 33) - 16;
        Rational v(num, den);
        switch (kind) {
            case ParamKind::Free:
                return v;
            case ParamKind::NonZero:
                if (!v.is_zero()) return v;
                break;
            case ParamKind::NotZeroOne:
                if (!v.is_zero() && v != kOne) return v;
                break;
            case ParamKind::OpenUnitInterval: {
                long d = static_cast<long>(rng.next() % 15) + 2;
                long n = static_cast<long>(rng.next() % (d - 1)) + 1;
                return Rational(n, d);
            }
        }
    }
}

}  // namespace

std::vector<ParamAssignment> sample_params(const std::string& id, std::size_t count,
                                           std::uint64_t seed) {
    const CatalogEntry& e = catalog_entry(id);
    SplitMix64 rng{seed ^ fnv1a(id)};
    std::vector<ParamAssignment> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        ParamAssignment p;
        for (const auto& s : e.params)
            if (!s.derive) p[s.name] = draw_rational(rng, s.kind);
        out.push_back(complete_params(e, p));
    }
    return out;
}

Subspace chain_subspace(const CatalogEntry& e, const std::vector<int>& indices) {
    return Subspace::coordinate(e.dim, indices);
}

}  // namespace nilgeo
