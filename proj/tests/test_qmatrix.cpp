#include "catch2/catch_amalgamated.hpp"

#include <random>

#include "support/test_support.hpp"

using namespace qleig;
using ts::M;
using ts::Q;

TEST_CASE("complex form block structure") {
    // A = [[0, i], [j, 0]] splits as X = [[0, i], [0, 0]], Y = [[0, 0], [1, 0]].
    const QMatrix a = M({{"0", "i"}, {"j", "0"}});
    const ComplexMatrix c = complex_form(a);
    REQUIRE(c.size() == 4);

    const Complex expected[4][4] = {
        {{0, 0}, {0, 1}, {0, 0}, {0, 0}},
        {{0, 0}, {0, 0}, {-1, 0}, {0, 0}},
        {{0, 0}, {0, 0}, {0, 0}, {0, -1}},
        {{1, 0}, {0, 0}, {0, 0}, {0, 0}},
    };
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s) CHECK(c(r, s) == expected[r][s]);
}

TEST_CASE("complex form is a ring homomorphism") {
    std::mt19937_64 eng(21);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(3 * ts::uniform01(eng));
        const QMatrix a = ts::random_matrix(eng, n), b = ts::random_matrix(eng, n);
        const ComplexMatrix lhs = complex_form(a * b);
        const ComplexMatrix rhs = complex_form(a) * complex_form(b);
        for (std::size_t r = 0; r < 2 * n; ++r)
            for (std::size_t s = 0; s < 2 * n; ++s)
                CHECK(std::abs(lhs(r, s) - rhs(r, s)) < 1e-12 * (1.0 + std::abs(lhs(r, s))));

        const QMatrix back = from_complex_form(complex_form(a));
        CHECK(approx_equal(back, a, 0.0));
    }
}

TEST_CASE("study determinant matches the permutation-sum oracle") {
    std::mt19937_64 eng(23);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int t = 0; t < (n == 4 ? 3 : 10); ++t) {
            const QMatrix a = ts::random_matrix(eng, n);
            const double lib = sdet(a);
            const double oracle = ts::sdet_oracle(a);
            CHECK(lib == Catch::Approx(oracle).epsilon(1e-9).margin(1e-9));
        }
    }
}

TEST_CASE("study determinant closed cases") {
    CHECK(sdet(QMatrix::identity(3)) == Catch::Approx(1.0).margin(1e-14));
    CHECK(sdet(QMatrix::diagonal({Q("i"), Q("j"), Q("k")})) == Catch::Approx(1.0).margin(1e-13));

    // triangular: product of diagonal entry norms
    std::mt19937_64 eng(29);
    for (int t = 0; t < 25; ++t) {
        QMatrix a = ts::random_matrix(eng, 3);
        a(0, 1) = a(0, 2) = a(1, 2) = Quaternion::zero();
        const double expected = norm(a(0, 0)) * norm(a(1, 1)) * norm(a(2, 2));
        CHECK(sdet(a) == Catch::Approx(expected).epsilon(1e-10).margin(1e-12));
    }

    // multiplicativity
    for (int t = 0; t < 25; ++t) {
        const QMatrix a = ts::random_matrix(eng, 3), b = ts::random_matrix(eng, 3);
        CHECK(sdet(a * b) == Catch::Approx(sdet(a) * sdet(b)).epsilon(1e-9));
    }

    // left-dependent rows are singular
    QMatrix s(2);
    s(0, 0) = Q("1");
    s(0, 1) = Q("i");
    s(1, 0) = Q("j") * s(0, 0);
    s(1, 1) = Q("j") * s(0, 1);
    CHECK(sdet(s) <= singular_threshold(s));
}

TEST_CASE("inverse through the complex form") {
    std::mt19937_64 eng(31);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(3 * ts::uniform01(eng));
        const QMatrix a = ts::random_matrix(eng, n);
        if (sdet(a) <= 10 * singular_threshold(a)) continue;  // exceedingly unlikely
        const QMatrix inv_a = inverse(a);
        CHECK(approx_equal(a * inv_a, QMatrix::identity(n), 1e-9));
        CHECK(approx_equal(inv_a * a, QMatrix::identity(n), 1e-9));
    }

    QMatrix s(2);
    s(0, 0) = Q("1");
    s(0, 1) = Q("i");
    s(1, 0) = Q("j");
    s(1, 1) = Q("j") * Q("i");  // second row = j * first row
    CHECK_THROWS_AS(inverse(s), SingularError);
}

TEST_CASE("matrix arithmetic and dimension guards") {
    const QMatrix a = M({{"1", "i"}, {"j", "k"}});
    const QMatrix b = M({{"0", "1"}, {"-1", "0"}});

    CHECK(approx_equal(a + b - b, a, 0.0));
    std::mt19937_64 eng(43);
    CHECK_THROWS_AS(a + ts::random_matrix(eng, 3), DimensionMismatchError);
    CHECK_THROWS_AS(a * ts::random_matrix(eng, 3), DimensionMismatchError);

    // scalar actions differ by side
    const Quaternion q = Q("1+j");
    CHECK(approx_equal(q * a, QMatrix::diagonal({q, q}) * a, 1e-14));
    CHECK(approx_equal(a * q, a * QMatrix::diagonal({q, q}), 1e-14));
    CHECK_FALSE(approx_equal(q * a, a * q, 1e-6));

    // matrix * vector follows entry-times-component order
    const std::vector<Quaternion> v{Q("i"), Q("1-k")};
    const std::vector<Quaternion> av = a * v;
    CHECK(approx_equal(av[0], a(0, 0) * v[0] + a(0, 1) * v[1], 0.0));
    CHECK(approx_equal(av[1], a(1, 0) * v[0] + a(1, 1) * v[1], 0.0));
}

TEST_CASE("permutation similarity") {
    const QMatrix a = M({{"1", "i", "i"}, {"i", "j", "k"}, {"0", "-1", "j"}});

    // reversing the index order produces the documented companion matrix
    const QMatrix b = perm_similar(a, {2, 1, 0});
    const QMatrix expected = M({{"j", "-1", "0"}, {"k", "j", "i"}, {"i", "i", "1"}});
    CHECK(approx_equal(b, expected, 0.0));

    CHECK(sdet(b) == Catch::Approx(sdet(a)).epsilon(1e-10).margin(1e-12));

    std::mt19937_64 eng(37);
    for (int t = 0; t < 20; ++t) {
        const QMatrix m = ts::random_matrix(eng, 3);
        const QMatrix p = perm_similar(m, {1, 2, 0});
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                const std::size_t perm[3] = {1, 2, 0};
                CHECK(approx_equal(p(r, c), m(perm[r], perm[c]), 0.0));
            }
        CHECK(sdet(p) == Catch::Approx(sdet(m)).epsilon(1e-9));
    }

    CHECK_THROWS_AS(perm_similar(a, {0, 1}), DimensionMismatchError);
    CHECK_THROWS_AS(perm_similar(a, {0, 1, 1}), DimensionMismatchError);
    CHECK_THROWS_AS(perm_similar(a, {0, 1, 3}), DimensionMismatchError);
}

TEST_CASE("vector identification matches the matrix one") {
    std::mt19937_64 eng(41);
    for (int t = 0; t < 20; ++t) {
        const QMatrix a = ts::random_matrix(eng, 3);
        std::vector<Complex> u(6);
        for (auto& z : u) z = {ts::uniform(eng, -1, 1), ts::uniform(eng, -1, 1)};

        // c(A) u and A v must correspond under the same identification
        const std::vector<Complex> cu = complex_form(a) * u;
        const std::vector<Quaternion> av = a * from_complex_vector(u);
        const std::vector<Quaternion> expected = from_complex_vector(cu);
        for (std::size_t r = 0; r < 3; ++r) CHECK(approx_equal(av[r], expected[r], 1e-12));
    }
}
