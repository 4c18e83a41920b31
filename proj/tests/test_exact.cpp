#include <doctest.h>

#include "nilgeo/catalog.hpp"
#include "nilgeo/errors.hpp"
#include "nilgeo/matrix.hpp"

using namespace nilgeo;

namespace {

// deterministic little generator for property-style checks
struct Rng {
    std::uint64_t s;
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    Rational rat() {
        long num = static_cast<long>(next() % 19) - 9;
        long den = static_cast<long>(next() % 9) + 1;
        return Rational(num, den);
    }
    Matrix matrix(std::size_t r, std::size_t c) {
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rat();
        return m;
    }
};

// independent oracle: determinant by cofactor expansion along the first row
Rational det_cofactor(const Matrix& m) {
    std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Rational total;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        Rational term = m(0, j) * det_cofactor(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational a(1, 3), b(2, 5);
    CHECK((a + b).str() == "11/15");
    CHECK((a * b).str() == "2/15");
    CHECK((a - a).str() == "0");
    CHECK(Rational(4, 8).str() == "1/2");
    CHECK(Rational(-4, 8).str() == "-1/2");
    CHECK(Rational(3, 1).str() == "3");

    Rng rng{7};
    for (int i = 0; i < 200; ++i) {
        Rational x = rng.rat(), y = rng.rat();
        CHECK((x + y) - y == x);
        if (!x.is_zero()) CHECK(x * x.inverse() == Rational(1));
    }
}

TEST_CASE("rational parsing round-trips and rejects junk") {
    CHECK(Rational::parse("7/3").str() == "7/3");
    CHECK(Rational::parse("-7/3").str() == "-7/3");
    CHECK(Rational::parse("12").str() == "12");
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("x/y"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
}

TEST_CASE("determinant: identity, zero row, and the G3 form matrix") {
    CHECK(Matrix::identity(6).det() == Rational(1));

    Matrix z(3, 3);
    z(0, 0) = 1;
    z(0, 1) = 2;  // second row left zero
    z(2, 2) = 5;
    CHECK(z.det() == Rational(0));

    // omega of G3 as a matrix; oracle: cofactor expansion
    auto inst = instantiate("G3", sample_params("G3", 1, 3).front());
    const Matrix& om = inst.omega.matrix();
    CHECK(om.det() == det_cofactor(om));
    CHECK(om.det() == Rational(1));

    Rng rng{11};
    for (int i = 0; i < 20; ++i) {
        Matrix m = rng.matrix(4, 4);
        CHECK(m.det() == det_cofactor(m));
    }
}

TEST_CASE("inverse is exact; singular matrices are rejected") {
    Matrix d(2, 2);
    d(0, 0) = 2;
    d(1, 1) = Rational(1, 3);
    Matrix di = d.inverse();
    CHECK(di(0, 0) == Rational(1, 2));
    CHECK(di(1, 1) == Rational(3));

    CHECK_THROWS_AS(Matrix(3, 3).inverse(), SingularError);

    // inverse of the G3 associated metric at psi11=0, psi12=1
    ParamAssignment p{{"psi11", 0}, {"psi12", 1}};
    auto inst = instantiate("G3", p);
    const Matrix& g = inst.metric.matrix();
    CHECK(g.inverse() * g == Matrix::identity(6));

    Rng rng{13};
    int checked = 0;
    while (checked < 10) {
        Matrix m = rng.matrix(5, 5);
        if (m.det().is_zero()) continue;
        CHECK(m.inverse() * m == Matrix::identity(5));
        ++checked;
    }
}

TEST_CASE("kernel basis: zero map, identity, stacked adjoints of G1") {
    CHECK(kernel_basis(Matrix(6, 6)).dim() == 6);
    CHECK(kernel_basis(Matrix::identity(6)).dim() == 0);

    auto inst = instantiate("G1", sample_params("G1", 1, 5).front());
    CHECK(inst.algebra.center() == Subspace::coordinate(6, {6}));

    Rng rng{17};
    for (int i = 0; i < 10; ++i) {
        Matrix m = rng.matrix(4, 6);
        Subspace k = kernel_basis(m);
        CHECK(m.rank() + k.dim() == 6);
        for (std::size_t r = 0; r < k.dim(); ++r) {
            auto v = m.apply(k.basis_vector(r));
            for (const auto& x : v) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("subspace algebra: canonical form, containment, sum, intersection") {
    Subspace a = Subspace::coordinate(6, {5, 6});
    Subspace b = Subspace::coordinate(6, {4, 5, 6});
    CHECK(intersect(a, a) == a);
    CHECK(b.contains(a));
    CHECK(!a.contains(b));
    CHECK(sum(a, b) == b);

    // two presentations of one subspace compare equal
    Subspace s1 = Subspace::span_of(3, {{Rational(1), Rational(1), Rational(0)},
                                        {Rational(0), Rational(1), Rational(1)}});
    Subspace s2 = Subspace::span_of(3, {{Rational(1), Rational(2), Rational(1)},
                                        {Rational(1), Rational(0), Rational(-1)}});
    CHECK(s1 == s2);

    // G1: C^3 g  meets the center exactly in span{e6}
    auto inst = instantiate("G1", sample_params("G1", 1, 5).front());
    auto series = inst.algebra.descending_series();
    Subspace c3 = series[3];
    CHECK(c3 == Subspace::coordinate(6, {5, 6}));
    CHECK(intersect(c3, inst.algebra.center()) == Subspace::coordinate(6, {6}));
}

TEST_CASE("signature by exact congruence") {
    Matrix d(2, 2);
    d(0, 0) = 1;
    d(1, 1) = -1;
    CHECK(d.signature() == Signature{1, 1, 0});

    // hyperbolic pair needs the off-diagonal pivot path
    Matrix h(2, 2);
    h(0, 1) = 1;
    h(1, 0) = 1;
    CHECK(h.signature() == Signature{1, 1, 0});

    ParamAssignment p{{"psi11", 0}, {"psi12", 1}};
    auto g3 = instantiate("G3", p);
    CHECK(g3.metric.signature() == Signature{2, 4, 0});

    auto riem = instantiate("G1.riem", {{"t", Rational(1, 2)}});
    CHECK(riem.metric.signature() == Signature{6, 0, 0});

    Matrix m(3, 3);
    m(0, 0) = 2;
    m(1, 1) = -3;  // rank 2, one null direction
    CHECK(m.signature() == Signature{1, 1, 1});

    Matrix ns(2, 2);
    ns(0, 1) = 1;  // ns(1,0) stays 0
    CHECK_THROWS_AS(ns.signature(), ValidationError);
}

TEST_CASE("signature is a congruence invariant") {
    Rng rng{23};
    ParamAssignment p{{"psi11", 0}, {"psi12", 1}};
    Matrix g = instantiate("G3", p).metric.matrix();
    Signature expected = g.signature();
    int done = 0;
    while (done < 10) {
        Matrix s = rng.matrix(6, 6);
        if (s.det().is_zero()) continue;
        CHECK((s.transpose() * g * s).signature() == expected);
        ++done;
    }
}
