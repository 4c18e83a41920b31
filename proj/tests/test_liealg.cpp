#include <doctest.h>

#include "nilgeo/catalog.hpp"
#include "nilgeo/errors.hpp"
#include "nilgeo/liealg.hpp"

using namespace nilgeo;

namespace {

std::vector<Rational> basis_vec(std::size_t n, int i) {
    std::vector<Rational> v(n);
    v[i - 1] = 1;
    return v;
}

std::vector<std::size_t> dims(const std::vector<Subspace>& series) {
    std::vector<std::size_t> out;
    for (const auto& s : series) out.push_back(s.dim());
    return out;
}

LieAlgebra catalog_algebra(const std::string& id) {
    return LieAlgebra(6, catalog_entry(id).brackets);
}

}  // namespace

TEST_CASE("bracket on basis vectors matches the structure constants") {
    LieAlgebra g3 = catalog_algebra("G3");
    CHECK(g3.bracket(basis_vec(6, 1), basis_vec(6, 2)) == basis_vec(6, 3));

    LieAlgebra g1 = catalog_algebra("G1");
    CHECK(g1.bracket(basis_vec(6, 2), basis_vec(6, 4)) == basis_vec(6, 6));

    // [x, x] = 0 and bilinearity/antisymmetry on random vectors
    std::uint64_t s = 1;
    auto rnd = [&]() {
        std::vector<Rational> v(6);
        for (auto& x : v) {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            v.size();
            x = Rational(static_cast<long>((s >> 33) % 13) - 6, 1 + static_cast<long>((s >> 20) % 5));
        }
        return v;
    };
    for (int t = 0; t < 30; ++t) {
        auto x = rnd(), y = rnd();
        auto xy = g1.bracket(x, y);
        auto yx = g1.bracket(y, x);
        for (std::size_t i = 0; i < 6; ++i) CHECK(xy[i] == -yx[i]);
        for (const auto& v : g1.bracket(x, x)) CHECK(v.is_zero());
        // bilinearity in the first slot
        auto z = rnd();
        std::vector<Rational> xz(6);
        for (std::size_t i = 0; i < 6; ++i) xz[i] = x[i] + z[i];
        auto lhs = g1.bracket(xz, y);
        auto r1 = g1.bracket(x, y), r2 = g1.bracket(z, y);
        for (std::size_t i = 0; i < 6; ++i) CHECK(lhs[i] == r1[i] + r2[i]);
    }
}

TEST_CASE("jacobi validation accepts the catalog and rejects a broken tensor") {
    for (const auto& e : catalog_entries())
        CHECK_NOTHROW(LieAlgebra(6, e.brackets));

    CHECK_NOTHROW(LieAlgebra::abelian(6));

    // [e1,e2] = e3 with [e1,e3] = e1 violates Jacobi on the triple (1,2,3):
    // [[e3,e1],e2] = -e3 has nothing to cancel against
    Tensor3 c(3);
    auto set = [&](int k, int i, int j, const Rational& v) {
        c(k - 1, i - 1, j - 1) = v;
        c(k - 1, j - 1, i - 1) = -v;
    };
    set(3, 1, 2, 1);
    set(1, 1, 3, 1);
    auto bad = jacobi_violations(c);
    REQUIRE(!bad.empty());
    CHECK(bad[0].i == 1);
    CHECK(bad[0].j == 2);
    CHECK(bad[0].k == 3);
    CHECK_THROWS_AS(LieAlgebra(3, {{1, 2, {{3, 1}}}, {1, 3, {{1, 1}}}}), ValidationError);

    // so(3) constants are fine whatever the scaling: every Jacobi term is a
    // bracket of a vector with itself
    Tensor3 good(3);
    auto set2 = [&](int k, int i, int j, const Rational& v) {
        good(k - 1, i - 1, j - 1) = v;
        good(k - 1, j - 1, i - 1) = -v;
    };
    set2(3, 1, 2, 1);
    set2(1, 2, 3, 1);
    set2(2, 3, 1, 7);
    CHECK(jacobi_violations(good).empty());
}

TEST_CASE("descending central series dimensions") {
    CHECK(dims(catalog_algebra("G1").descending_series()) ==
          std::vector<std::size_t>{6, 4, 3, 2, 1, 0});
    CHECK(dims(LieAlgebra::abelian(6).descending_series()) ==
          std::vector<std::size_t>{6, 0});
    CHECK(dims(catalog_algebra("G22").descending_series()) ==
          std::vector<std::size_t>{6, 2, 1, 0});
}

TEST_CASE("ascending central series dimensions") {
    CHECK(dims(catalog_algebra("G6").ascending_series()) ==
          std::vector<std::size_t>{2, 3, 4, 6});
    CHECK(dims(LieAlgebra::abelian(6).ascending_series()) == std::vector<std::size_t>{6});
    CHECK(dims(catalog_algebra("G22").ascending_series()) ==
          std::vector<std::size_t>{3, 4, 6});
}

TEST_CASE("centers") {
    CHECK(catalog_algebra("G6").center() == Subspace::coordinate(6, {5, 6}));
    CHECK(catalog_algebra("G19").center() == Subspace::coordinate(6, {3, 6}));
    CHECK(LieAlgebra::abelian(6).center() == Subspace::full(6));
    // first ascending term is the center, exactly
    for (const char* id : {"G1", "G4", "G6", "G8", "G19", "G20", "G22"}) {
        LieAlgebra l = catalog_algebra(id);
        CHECK(l.ascending_series().front() == l.center());
    }
}

TEST_CASE("nilpotency class, type, filiform flag") {
    auto g1 = catalog_algebra("G1").nilpotency_data();
    CHECK(g1.nilpotency_class == 5);
    CHECK(g1.type_sequence == std::vector<std::size_t>{1, 2, 3, 4, 6});
    CHECK(g1.is_filiform);

    auto ab = LieAlgebra::abelian(6).nilpotency_data();
    CHECK(ab.nilpotency_class == 1);
    CHECK(!ab.is_filiform);

    auto g4 = catalog_algebra("G4").nilpotency_data();
    CHECK(g4.type_sequence == std::vector<std::size_t>{1, 3, 4, 6});
    CHECK(!g4.is_filiform);

    // so(3) is not nilpotent
    LieAlgebra so3(3, {{1, 2, {{3, 1}}}, {2, 3, {{1, 1}}}, {1, 3, {{2, -1}}}});
    CHECK(!so3.is_nilpotent());
    CHECK_THROWS_AS(so3.nilpotency_data(), ValidationError);
}

TEST_CASE("derived series dimensions") {
    CHECK(dims(catalog_algebra("G19").derived_series()) == std::vector<std::size_t>{6, 3, 0});
    CHECK(dims(LieAlgebra::abelian(6).derived_series()) == std::vector<std::size_t>{6, 0});
    CHECK(dims(catalog_algebra("G20").derived_series()) == std::vector<std::size_t>{6, 3, 0});
}

TEST_CASE("series facts: lengths agree with the class; terms are ideals") {
    for (const char* id : {"G1", "G2", "G3", "G4", "G5.1", "G6", "G7.1", "G8", "G19",
                           "G20", "G22"}) {
        LieAlgebra l = catalog_algebra(id);
        auto nd = l.nilpotency_data();
        auto desc = l.descending_series();
        CHECK(desc.size() == nd.nilpotency_class + 1);
        CHECK(l.ascending_series().size() == nd.nilpotency_class);
        // C^{k} g is an ideal and [g, C^k g] = C^{k+1} g
        for (std::size_t k = 0; k + 1 < desc.size(); ++k) {
            Subspace next = l.bracket_with_algebra(desc[k]);
            CHECK(next == desc[k + 1]);
            CHECK(desc[k].contains(next));
        }
    }
}

TEST_CASE("construction rejects malformed bracket lists") {
    CHECK_THROWS_AS(LieAlgebra(6, {{2, 1, {{3, 1}}}}), ValidationError);   // i > j
    CHECK_THROWS_AS(LieAlgebra(6, {{1, 1, {{3, 1}}}}), ValidationError);   // i == j
    CHECK_THROWS_AS(LieAlgebra(6, {{1, 9, {{3, 1}}}}), ValidationError);   // out of range
    CHECK_THROWS_AS(LieAlgebra(6, {{1, 2, {{3, 1}}}, {1, 2, {{4, 1}}}}),
                    ValidationError);  // duplicate
}
