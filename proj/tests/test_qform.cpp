#include <doctest.h>

#include "dp8/qform.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dp8;
using dp8::testing::Gen;

namespace {

Matrix int_matrix(const std::vector<std::vector<long long>>& rows) {
    Matrix m;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (long long x : r) row.emplace_back(Rational(x));
        m.push_back(row);
    }
    return m;
}

Matrix random_gram(Gen& g, int n, long long bound) {
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) rows[i][j] = rows[j][i] = g.between(-bound, bound);
    return int_matrix(rows);
}

Matrix random_invertible(Gen& g, int n) {
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        rows[i][i] = g.nonzero(3);
        for (int j = i + 1; j < n; ++j) rows[i][j] = g.between(-3, 3);
    }
    if (n > 1) std::swap(rows[0], rows[n - 1]);
    return int_matrix(rows);
}

std::vector<long long> as_ints(const std::vector<Rational>& v) {
    std::vector<long long> out;
    for (const auto& x : v) out.push_back(static_cast<long long>(numerator_of(x)));
    return out;
}

}  // namespace

TEST_CASE("diagonalization examples") {
    CHECK(diagonalize(Field::rationals(), int_matrix({{0, 1}, {1, 0}})).to_string() == "1,-1");
    CHECK(diagonalize(Field::rationals(), int_matrix({{2, 1}, {1, 2}})).to_string() == "2,6");
    CHECK_THROWS_WITH_AS(diagonalize(Field::rationals(), int_matrix({{1, 2}, {2, 4}})), "degenerate form",
                         DomainError);
    CHECK(diagonal_form({Rational(12), Rational(-1, 3), Rational(5)}).to_string() == "-3,5,3");
}

TEST_CASE("diagonalization property: basis^T gram basis is diagonal") {
    Gen g(41);
    int checked = 0;
    while (checked < 150) {
        const int n = static_cast<int>(g.between(2, 4));
        const Matrix gram = random_gram(g, n, 6);
        try {
            QuadraticForm q = diagonalize(Field::rationals(), gram);
            const Matrix d = congruent_matrix(q.gram(), q.basis());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) CHECK(d[i][j] == (i == j ? q.diag()[i] : Scalar(0)));
            ++checked;
        } catch (const DomainError&) {
        }
    }
}

TEST_CASE("invariants survive change of basis") {
    Gen g(43);
    for (int i = 0; i < 100; ++i) {
        const int n = static_cast<int>(g.between(2, 4));
        const auto d = dp8::testing::diag(g, n, 20);
        const QuadraticForm q = diagonal_form(d);
        const Matrix moved = congruent_matrix(q.gram(), random_invertible(g, n));
        const QuadraticForm q2 = diagonalize(Field::rationals(), moved);
        CAPTURE(q.to_string());
        CAPTURE(q2.to_string());
        CHECK(equivalent(q, q2));
        CHECK(discriminant(q) == discriminant(q2));
        CHECK(is_isotropic(q) == is_isotropic(q2));
    }
}

TEST_CASE("isotropy examples") {
    CHECK_FALSE(is_isotropic(diagonal_form({1, 1, 1})));
    CHECK(is_isotropic(diagonal_form({1, 1, -2})));
    CHECK_FALSE(is_isotropic(diagonal_form({1, 1, 1, 1})));
    CHECK_FALSE(is_isotropic(diagonal_form({1, 1, 1, -7})));
    CHECK(is_isotropic(diagonal_form({1, 1, 1, -3})));
    CHECK(is_isotropic(diagonal_form({1, 1, 1, 1, -7})));
    CHECK_FALSE(is_isotropic(diagonal_form({1, 1, 1, 1, 1})));
    CHECK_FALSE(is_isotropic(diagonal_form({1, 1, -3})));
    CHECK(is_isotropic(diagonal_form({1, -1})));
    CHECK_FALSE(is_isotropic(diagonal_form({1, -2})));
}

TEST_CASE("isotropy over quadratic fields") {
    const Field gauss = Field::quadratic(QuadField(Integer(-1)));
    const Field real3 = Field::quadratic(QuadField(Integer(3)));
    CHECK(is_isotropic(diagonal_form(gauss, {Scalar(gauss, 1), Scalar(gauss, 1), Scalar(gauss, 1)})));
    CHECK_FALSE(is_isotropic(diagonal_form(real3, {Scalar(real3, 1), Scalar(real3, 1), Scalar(real3, 1)})));
    // x^2 - (2 + sqrt 3) y^2: 2 + sqrt 3 = ((1 + sqrt 3)^2) / 2 is not a square
    CHECK_FALSE(is_isotropic(diagonal_form(real3, {Scalar(real3, 1), Scalar(real3, -2, -1)})));
    CHECK(is_isotropic(diagonal_form(real3, {Scalar(real3, 1), Scalar(real3, -4, -2)})));
}

TEST_CASE("isotropy agrees with naive search") {
    Gen g(47);
    for (int i = 0; i < 60; ++i) {
        const int n = static_cast<int>(g.between(3, 4));
        const auto d = dp8::testing::diag(g, n, 15);
        const bool iso = is_isotropic(diagonal_form(d));
        const auto w = oracle::naive_zero(as_ints(d), n == 3 ? 60 : 15);
        CAPTURE(diagonal_form(d).to_string());
        if (w) CHECK(iso);
        if (!iso) CHECK_FALSE(w.has_value());
    }
}

TEST_CASE("similarity") {
    auto c = similar(diagonal_form({1, 1, 1, 1}), diagonal_form({2, 2, 2, 2}));
    REQUIRE(c.has_value());
    CHECK(equivalent(diagonal_form({1, 1, 1, 1}), diagonal_form({2, 2, 2, 2}).scaled(*c)));
    CHECK(similar(diagonal_form({1, 1, 1}), diagonal_form({2, 2, 2})) == Rational(2));
    CHECK_FALSE(similar(diagonal_form({1, 1, 1, 1}), diagonal_form({1, 1, 1, 3})).has_value());
    CHECK_FALSE(similar(diagonal_form({1, 1, 1, 1}), diagonal_form({1, 1, 1, -1})).has_value());
    CHECK_THROWS_AS(similar(diagonal_form({1, 1}), diagonal_form({1, 1, 1})), DomainError);
}

TEST_CASE("similarity property") {
    Gen g(53);
    for (int i = 0; i < 60; ++i) {
        const int n = static_cast<int>(g.between(2, 4));
        const QuadraticForm q = diagonal_form(dp8::testing::diag(g, n, 20));
        const Rational scale(g.nonzero(40));
        const QuadraticForm q2 = q.scaled(scale);
        auto c = similar(q2, q);
        REQUIRE(c.has_value());
        CHECK(equivalent(q2, q.scaled(*c)));
    }
}

TEST_CASE("point search witnesses") {
    auto w = oracle_point_search(diagonal_form({1, 1, -2}), 10);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<Integer>{1, 1, 1});
    CHECK_FALSE(oracle_point_search(diagonal_form({1, 1, 1, 1}), 100).has_value());
    auto gram = diagonalize(Field::rationals(), int_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 3}}));
    auto w2 = oracle_point_search(gram, 5);
    REQUIRE(w2.has_value());
    std::vector<Scalar> x;
    for (const auto& v : *w2) x.emplace_back(Rational(v));
    CHECK(gram.value(x).is_zero());
}
