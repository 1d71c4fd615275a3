#include "catch2/catch_amalgamated.hpp"

#include <random>

#include "support/test_support.hpp"

using namespace qleig;
using ts::M;
using ts::Q;

namespace {

// Random polynomial expression of bounded depth (no Inv nodes).
NCExpr random_poly(std::mt19937_64& eng, int depth) {
    const double pick = ts::uniform01(eng);
    if (depth == 0 || pick < 0.3)
        return pick < 0.15 ? NCExpr::variable() : NCExpr::constant(ts::random_quaternion(eng));
    const NCExpr a = random_poly(eng, depth - 1);
    const NCExpr b = random_poly(eng, depth - 1);
    return pick < 0.65 ? a + b : a * b;
}

}  // namespace

TEST_CASE("evaluation at quaternion points") {
    const NCExpr x = NCExpr::variable();
    const Quaternion lam = Q("1+2i-k");

    CHECK(approx_equal(x.eval(lam), lam, 0.0));
    CHECK(approx_equal(linear_factor(Q("j")).eval(lam), Q("j") - lam, 0.0));

    // (j - x)^2 + i x at a specific point, against a hand computation
    const NCExpr e = linear_factor(Q("j")) * linear_factor(Q("j")) + NCExpr::constant(Q("i")) * x;
    const Quaternion d = Q("j") - lam;
    CHECK(approx_equal(e.eval(lam), d * d + Q("i") * lam, 0.0));
}

TEST_CASE("multiplication order is preserved") {
    const Quaternion p = Q("1+i"), lam = Q("j");
    const NCExpr left = NCExpr::constant(p) * NCExpr::variable();
    const NCExpr right = NCExpr::variable() * NCExpr::constant(p);

    CHECK(approx_equal(left.eval(lam), p * lam, 0.0));
    CHECK(approx_equal(right.eval(lam), lam * p, 0.0));
    CHECK_FALSE(approx_equal(left.eval(lam), right.eval(lam), 1e-9));
}

TEST_CASE("inverse nodes") {
    const NCExpr e = inv(NCExpr::variable());
    const Quaternion q = Q("2j-k");
    CHECK(approx_equal(e.eval(q), inverse(q), 0.0));
    CHECK_THROWS_AS(e.eval(Quaternion::zero()), SingularAtError);

    // inv(q - x) is singular exactly at q
    const NCExpr f = inv(linear_factor(Q("1+j")));
    CHECK_THROWS_AS(f.eval(Q("1+j")), SingularAtError);
    CHECK(approx_equal(f.eval(Q("1")), inverse(Q("j")), 1e-14));

    CHECK(e.is_polynomial() == false);
    CHECK(linear_factor(Q("j")).is_polynomial());
}

TEST_CASE("evaluation at matrix arguments") {
    const QMatrix b = M({{"1", "i"}, {"j", "2k"}});
    const QMatrix id = QMatrix::identity(2);

    CHECK(approx_equal(NCExpr::constant(Q("1-j")).eval(b), Q("1-j") * id, 0.0));
    CHECK(approx_equal(NCExpr::variable().eval(b), b, 0.0));
    CHECK(approx_equal(linear_factor(Q("2")).eval(b), Q("2") * id - b, 0.0));
    CHECK(approx_equal(inv(NCExpr::variable()).eval(b) * b, id, 1e-10));

    QMatrix singular(2);
    singular(0, 0) = Q("1");
    singular(0, 1) = Q("i");
    singular(1, 0) = Q("j");
    singular(1, 1) = Q("j") * Q("i");
    CHECK_THROWS_AS(inv(NCExpr::variable()).eval(singular), SingularMatrixError);
}

TEST_CASE("scalar and matrix evaluation agree on scalar matrices") {
    std::mt19937_64 eng(47);
    for (int t = 0; t < 40; ++t) {
        const NCExpr e = random_poly(eng, 3);
        const Quaternion lam = ts::random_quaternion(eng);
        const QMatrix as_matrix = e.eval(lam * QMatrix::identity(2));
        const Quaternion as_scalar = e.eval(lam);
        // a scalar matrix argument must reproduce the scalar value on the diagonal
        CHECK(approx_equal(as_matrix(0, 0), as_scalar, 1e-9));
        CHECK(approx_equal(as_matrix(1, 1), as_scalar, 1e-9));
        CHECK(approx_equal(as_matrix(0, 1), Quaternion::zero(), 1e-9));
    }
}

TEST_CASE("real similarity passes through polynomial evaluation") {
    // For a real permutation matrix P, e(P B P^-1) = P e(B) P^-1, because
    // P commutes with every quaternion coefficient.
    std::mt19937_64 eng(53);
    const std::vector<std::size_t> perm{2, 0, 1};
    for (int t = 0; t < 25; ++t) {
        const NCExpr e = random_poly(eng, 3);
        const QMatrix b = ts::random_matrix(eng, 3);
        const QMatrix lhs = e.eval(perm_similar(b, perm));
        const QMatrix rhs = perm_similar(e.eval(b), perm);
        CHECK(approx_equal(lhs, rhs, 1e-7 * (1.0 + max_entry_norm(rhs))));
    }
}

TEST_CASE("printing") {
    const NCExpr e =
        NCExpr::constant(Q("j+k")) * inv(linear_factor(Q("-i"))) + NCExpr::variable();
    CHECK(e.to_string() ==
          "(((j+k) * inv(((-i) + ((-1) * x)))) + x)");
    CHECK(NCExpr::constant(Quaternion::zero()).to_string() == "(0)");
}
