#include <doctest.h>

#include "nilgeo/catalog.hpp"
#include "nilgeo/curvature.hpp"
#include "nilgeo/errors.hpp"

using namespace nilgeo;

TEST_CASE("catalog inventory") {
    const auto& cat = catalog_entries();
    CHECK(cat.size() == 17);
    for (const char* id : {"G1", "G1.riem", "G2", "G3", "G4", "G5.1", "G5.2", "G5.3",
                           "G5.4", "G6", "G7.1", "G7.2", "G8", "G9", "G19", "G20", "G22"})
        CHECK(catalog_has(id));
    CHECK(!catalog_has("Gxx"));
    CHECK_THROWS_AS(catalog_entry("Gxx"), Error);
}

TEST_CASE("instantiate: validity at admissible parameters, errors otherwise") {
    // the worked example: t=1/2, psi11=1, psi12=2, psi34 = psi12/(t-1) = -4
    ParamAssignment p{{"t", Rational(1, 2)}, {"psi11", 1}, {"psi12", 2}};
    auto inst = instantiate("G1", p);
    CHECK(inst.params.at("psi34") == Rational(-4));
    CHECK(inst.metric.signature().is_indefinite());

    // explicit psi34 equal to the derived value is accepted verbatim
    ParamAssignment p2 = p;
    p2["psi34"] = Rational(-4);
    CHECK(instantiate("G1", p2).params.at("psi34") == Rational(-4));

    CHECK_THROWS_WITH_AS(instantiate("G1", ParamAssignment{{"t", 0}, {"psi11", 1}, {"psi12", 2}}),
                         "t must avoid {0,1}", ConstraintError);
    CHECK_THROWS_AS(instantiate("G1", ParamAssignment{{"t", Rational(1, 2)}, {"psi11", 1},
                                                      {"psi12", 0}}),
                    ConstraintError);
    CHECK_THROWS_AS(instantiate("G1", ParamAssignment{{"psi11", 1}, {"psi12", 2}}),
                    ConstraintError);  // t missing
    CHECK_THROWS_AS(instantiate("G1", ParamAssignment{{"t", Rational(1, 2)}, {"psi11", 1},
                                                      {"psi12", 2}, {"bogus", 1}}),
                    ConstraintError);

    auto riem = instantiate("G1.riem", {{"t", Rational(1, 2)}});
    CHECK(riem.metric.signature() == Signature{6, 0, 0});
    CHECK_THROWS_AS(instantiate("G1.riem", {{"t", Rational(3, 2)}}), ConstraintError);

    // every catalog structure instantiates cleanly on seeded samples
    for (const auto& e : catalog_entries())
        for (const auto& q : sample_params(e.id, 5, 42)) CHECK_NOTHROW(instantiate(e, q));
}

TEST_CASE("expected ricci reference points") {
    CHECK(expected_ricci("G19", {{"psi45", 2}})(0, 0) == Rational(-2));

    Matrix g6 = expected_ricci("G6", ParamAssignment{{"psi33", 0}, {"psi43", 1}});
    CHECK(g6(0, 0) == Rational(-1, 2));

    Matrix g52 = expected_ricci("G5.2", {{"psi12", 1}});
    CHECK(g52(0, 0) == Rational(-1, 4));
    CHECK(g52(1, 1) == Rational(-1, 4));

    CHECK_THROWS_AS(expected_ricci("G1.riem", {{"t", Rational(1, 2)}}), Error);
}

TEST_CASE("computed ricci equals the closed form on every entry and sample") {
    for (const auto& e : catalog_entries()) {
        if (!e.expected_ricci_fn) continue;
        for (const auto& p : sample_params(e.id, 3, 77)) {
            auto inst = instantiate(e, p);
            Matrix ric =
                ricci(riemann(inst.algebra, levi_civita(inst.algebra, inst.metric)));
            CHECK_MESSAGE(ric == e.expected_ricci_fn(inst.params), e.id);
        }
    }
}

TEST_CASE("scale parameter: lambda rescales omega but leaves the Ricci tensor") {
    for (const char* id : {"G2", "G5.4", "G7.1", "G9"}) {
        auto p = sample_params(id, 1, 55).front();
        ParamAssignment scaled = p;
        scaled["lambda"] = Rational(-3, 2);
        auto a = instantiate(id, p);
        auto b = instantiate(id, scaled);
        Matrix ra = ricci(riemann(a.algebra, levi_civita(a.algebra, a.metric)));
        Matrix rb = ricci(riemann(b.algebra, levi_civita(b.algebra, b.metric)));
        CHECK(ra == rb);
        CHECK(b.omega.matrix() == Rational(-3, 2) * a.omega.matrix());
        CHECK(b.metric.signature().is_indefinite());
    }
}

TEST_CASE("sampling is deterministic, admissible, and derives bound parameters") {
    auto s1 = sample_params("G1", 3, 42);
    auto s2 = sample_params("G1", 3, 42);
    REQUIRE(s1.size() == 3);
    CHECK(s1 == s2);
    CHECK(sample_params("G1", 3, 43) != s1);
    for (const auto& p : s1) {
        CHECK(p.at("t") != Rational(0));
        CHECK(p.at("t") != Rational(1));
        CHECK(p.at("psi12") != Rational(0));
        CHECK(p.at("psi34") == p.at("psi12") / (p.at("t") - Rational(1)));
    }
    // numerators and denominators stay within the documented bound
    for (const auto& e : catalog_entries())
        for (const auto& p : sample_params(e.id, 10, 3))
            for (const auto& [name, v] : p) {
                bool derived = false;
                for (const auto& s : e.params)
                    if (s.name == name && s.derive) derived = true;
                if (derived) continue;
                CHECK(abs(Rational(v)) <= Rational(16));
                CHECK(v.denominator() <= 16);
            }

    // bound parameters on the G5 family: psi11 = 0 is baked into the stored J,
    // psi34 is a fixed function of psi12
    auto g52 = sample_params("G5.2", 2, 7);
    for (const auto& p : g52) {
        auto inst = instantiate("G5.2", p);
        Rational b = p.at("psi12");
        Rational q = (Rational(1) + b * b) / (Rational(4) * b);
        CHECK(inst.acs.matrix()(2, 3) == q);   // the bound psi34 slot
        CHECK(inst.acs.matrix()(0, 0).is_zero());  // psi11 = 0
    }
}

TEST_CASE("general psi34 families off the Hermitian point") {
    // G1 at t=1/2, psi11=1, psi12=2: the bound value is psi34 = -4 and
    // Ric_11 = -16 there; off the bound the general closed form still holds
    // and the Hermitian property is lost
    ParamAssignment herm{{"t", Rational(1, 2)}, {"psi11", 1}, {"psi12", 2}};
    CHECK(expected_ricci("G1", herm)(0, 0) == Rational(-16));
    for (const char* id : {"G1", "G2", "G3", "G8"}) {
        ParamAssignment p = sample_params(id, 1, 61).front();
        ParamAssignment off = p;
        off["psi34"] = p.at("psi34") + Rational(3, 2);
        auto inst = instantiate(id, off);
        Matrix ric = ricci(riemann(inst.algebra, levi_civita(inst.algebra, inst.metric)));
        CHECK_MESSAGE(ric == expected_ricci(id, off), id);
        CHECK_MESSAGE(!ricci_hermitian(ric, inst.acs), id);
        // scalar invariants are not tied to the Hermitian point
        CHECK(scalar_curvature(inst.metric, ric).is_zero());
    }
}

TEST_CASE("stored families reproduce the fully displayed matrices") {
    // G6 at (psi33, psi43) = (2, 3), evaluated from the displayed closed forms
    {
        Matrix j = catalog_entry("G6").jay(ParamAssignment{{"psi33", 2}, {"psi43", 3}});
        Matrix expected = Matrix::from_rows({
            {0, 1, 0, 0, 0, 0},
            {-1, 0, 0, 0, 0, 0},
            {0, 0, 2, Rational(-5, 3), 0, 0},
            {0, 0, 3, -2, 0, 0},
            {0, 0, -3, 2, 0, -1},
            {0, 0, 0, 1, 1, 0},
        });
        CHECK(j == expected);
    }
    // G2 at (psi11, psi12) = (1, 2) with the bound psi34 = psi12
    {
        Matrix j = catalog_entry("G2").jay(
            complete_params(catalog_entry("G2"), ParamAssignment{{"psi11", 1}, {"psi12", 2}}));
        Matrix expected = Matrix::from_rows({
            {1, 2, 0, 0, 0, 0},
            {-1, -1, 0, 0, 0, 0},
            {0, 0, 0, 2, 0, 0},
            {0, 0, Rational(-1, 2), 0, 0, 0},
            {0, 0, Rational(-1, 2), -1, 1, 2},
            {0, 0, 0, 1, -1, -1},
        });
        CHECK(j == expected);
    }
    // G5.2 at psi12 = 2: q = 5/8, and the row-six entries -64/25 and 96/25
    {
        Matrix j = catalog_entry("G5.2").jay(
            complete_params(catalog_entry("G5.2"), ParamAssignment{{"psi12", 2}}));
        Rational q(5, 8);
        Matrix expected = Matrix::from_rows({
            {0, 2, 0, 0, 0, 0},
            {Rational(-1, 2), 0, 0, 0, 0, 0},
            {-1, 0, 0, q, q, 0},
            {0, 0, Rational(-8, 5), 0, Rational(-3, 4), q},
            {0, Rational(16, 5), 0, 0, Rational(3, 4), -q},
            {Rational(-64, 25), Rational(96, 25), 0, 0, Rational(5, 2), Rational(-3, 4)},
        });
        CHECK(j == expected);
    }
    // G1's canonical images at (t, psi11, psi12) = (1/2, 1, 2):
    // J(e2) = 2 e1 - e2, J(e4) = -4 e3, J(e6) = -4 e5 - e6
    {
        Matrix j = catalog_entry("G1").jay(complete_params(
            catalog_entry("G1"),
            ParamAssignment{{"t", Rational(1, 2)}, {"psi11", 1}, {"psi12", 2}}));
        CHECK(j(0, 1) == Rational(2));
        CHECK(j(1, 1) == Rational(-1));
        CHECK(j(2, 3) == Rational(-4));
        CHECK(j(4, 5) == Rational(-4));
        CHECK(j(5, 5) == Rational(-1));
        CHECK(j(1, 0) == Rational(-1));  // completion: J(e1) = e1 - e2
        CHECK(j(0, 0) == Rational(1));
    }
}

TEST_CASE("hermitian dichotomy across the catalog") {
    for (const auto& e : catalog_entries()) {
        if (!e.hermitian_expected) continue;
        std::size_t n = *e.hermitian_expected ? 4 : 10;
        for (const auto& p : sample_params(e.id, n, 99)) {
            auto inst = instantiate(e, p);
            Matrix ric =
                ricci(riemann(inst.algebra, levi_civita(inst.algebra, inst.metric)));
            CHECK_MESSAGE(ricci_hermitian(ric, inst.acs) == *e.hermitian_expected, e.id);
        }
    }
}

TEST_CASE("stored chains are J-invariant ideals at every sample") {
    for (const auto& e : catalog_entries())
        for (const auto& p : sample_params(e.id, 3, 13)) {
            auto inst = instantiate(e, p);
            for (const auto& idx : e.invariant_chain) {
                Subspace s = chain_subspace(e, idx);
                CHECK(s.contains(inst.algebra.bracket_with_algebra(s)));
                CHECK(j_invariant(inst.acs, s));
            }
        }
}

TEST_CASE("catalog metric signatures: indefinite except the Riemannian variant") {
    for (const auto& e : catalog_entries())
        for (const auto& p : sample_params(e.id, 3, 29)) {
            auto inst = instantiate(e, p);
            if (e.expect_definite_metric)
                CHECK(inst.metric.signature() == Signature{6, 0, 0});
            else
                CHECK(inst.metric.signature().is_indefinite());
        }
}
