#include <doctest.h>

#include "dp8/dyadic.hpp"
#include "dp8/local.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dp8;
using dp8::testing::Gen;

namespace {

const Place kInf = Place::real();
Place prime(long long p) { return Place::finite(Integer(p)); }

int product_over(const Field& f, const Scalar& a, const Scalar& b) {
    const std::vector<Scalar> entries{a, b};
    int prod = 1;
    for (const auto& w : relevant_places(f, entries)) prod *= hilbert(a, b, f, w);
    return prod;
}

}  // namespace

TEST_CASE("Hilbert symbols over Q at known values") {
    CHECK(hilbert_q(-1, -1, kInf) == -1);
    CHECK(hilbert_q(-1, -1, prime(2)) == -1);
    CHECK(hilbert_q(-1, -1, prime(3)) == 1);
    CHECK(hilbert_q(2, 3, prime(3)) == -1);
    CHECK(hilbert_q(2, 5, prime(5)) == -1);
    CHECK(hilbert_q(5, 5, prime(5)) == 1);
    CHECK(hilbert_q(3, 3, prime(3)) == -1);
    CHECK(hilbert_q(Rational(1, 3), 7, prime(3)) == hilbert_q(3, 7, prime(3)));
    CHECK(hilbert_q(2, -1, prime(2)) == 1);
    CHECK(hilbert_q(3, 3, prime(2)) == -1);
}

TEST_CASE("local squares over Q") {
    CHECK(is_local_square(17, prime(2)));
    CHECK_FALSE(is_local_square(5, prime(2)));
    CHECK(is_local_square(-7, prime(2)));
    CHECK(is_local_square(4, prime(3)));
    CHECK_FALSE(is_local_square(3, prime(3)));
    CHECK(is_local_square(Rational(7, 9), prime(3)));
    CHECK_FALSE(is_local_square(-1, kInf));
}

TEST_CASE("Hilbert symbols over Q match exhaustive local solvability") {
    for (long long a = -9; a <= 9; ++a)
        for (long long b = -9; b <= 9; ++b) {
            if (a == 0 || b == 0) continue;
            CHECK(hilbert_q(a, b, kInf) == oracle::local_symbol(a, b, 0));
            for (long long p : {2, 3, 5, 7, 11}) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(p);
                CHECK(hilbert_q(a, b, prime(p)) == oracle::local_symbol(a, b, p));
            }
        }
}

TEST_CASE("symbol is bilinear and symmetric") {
    Gen g(3);
    for (int i = 0; i < 300; ++i) {
        const Rational a(g.nonzero(500)), b(g.nonzero(500)), c(g.nonzero(500));
        for (long long p : {0, 2, 3, 5, 7}) {
            const Place v = p == 0 ? kInf : prime(p);
            CHECK(hilbert_q(a, b, v) == hilbert_q(b, a, v));
            CHECK(hilbert_q(a, b * c, v) == hilbert_q(a, b, v) * hilbert_q(a, c, v));
            CHECK(hilbert_q(a, -a, v) == 1);
            if (a != 1) CHECK(hilbert_q(a, 1 - a, v) == 1);
        }
    }
}

TEST_CASE("reciprocity over Q") {
    Gen g(7);
    for (int i = 0; i < 300; ++i) {
        const Rational a(g.nonzero(100000)), b(g.nonzero(100000));
        CHECK(hilbert_reciprocity_defect(a, b) == 1);
    }
    CHECK(hilbert_reciprocity_defect(Rational(3, 14), Rational(-5, 9)) == 1);
}

TEST_CASE("reciprocity over quadratic fields") {
    Gen g(19);
    for (int i = 0; i < 150; ++i) {
        const Field l = Field::quadratic(QuadField(dp8::testing::squarefree(g, 40)));
        const Scalar a = dp8::testing::scalar_l(g, l, 12), b = dp8::testing::scalar_l(g, l, 12);
        CAPTURE(l.label());
        CAPTURE(a.to_string());
        CAPTURE(b.to_string());
        CHECK(product_over(l, a, b) == 1);
    }
}

TEST_CASE("projection formula") {
    Gen g(23);
    for (int i = 0; i < 150; ++i) {
        const QuadField k(dp8::testing::squarefree(g, 40));
        const Field l = Field::quadratic(k);
        const Rational a(g.nonzero(30));
        const Scalar b = dp8::testing::scalar_l(g, l, 10);
        const Rational c(g.nonzero(30));
        std::vector<Scalar> entries{Scalar(l, a), b};
        for (const auto& w : relevant_places(l, entries)) {
            const PlaceK& pw = std::get<PlaceK>(w);
            const Place v = pw.below();
            if (pw.split_type() == SplitType::Split && pw.index() == 2) continue;
            int prod = 1;
            for (const auto& u : places_above(v, k)) prod *= hilbert_k(Scalar(l, a), b, k, u);
            CHECK(prod == hilbert_q(a, b.norm(), v));
            const int degree = pw.is_real() ? 1 : pw.residue_degree() * pw.ramification_index();
            const int base = hilbert_q(a, c, v);
            CHECK(hilbert_k(Scalar(l, a), Scalar(l, c), k, pw) == (degree == 2 ? 1 : base));
        }
    }
}

TEST_CASE("dyadic serial and parallel symbols agree") {
    Gen g(29);
    for (long long m : {-1, 2, 3, -5, 6, 7, -2, 5, 13, -3}) {
        const QuadField k{Integer(m)};
        if (prime_splitting(Integer(2), k) == SplitType::Split) continue;
        const Field l = Field::quadratic(k);
        detail::DyadicResidueRing ring(k);
        const PlaceK w = places_above(prime(2), k)[0];
        const Scalar pi = detail::dyadic_uniformizer(k, w);
        for (int i = 0; i < 25; ++i) {
            Scalar a = dp8::testing::scalar_l(g, l, 9), b = dp8::testing::scalar_l(g, l, 9);
            if (valuation_at(a, k, w) != 0 || valuation_at(b, k, w) != 0) continue;
            if (g.coin()) a = a * pi;
            const int s = detail::dyadic_hilbert_serial(ring, a, b);
            CHECK(s == detail::dyadic_hilbert_parallel(ring, a, b));
            CHECK(s == hilbert_k(a, b, k, w));
        }
    }
}

TEST_CASE("local squares over quadratic fields") {
    const QuadField k(Integer(-1));
    const Field l = Field::quadratic(k);
    Gen g(31);
    for (int i = 0; i < 100; ++i) {
        const Scalar x = dp8::testing::scalar_l(g, l, 15);
        for (const auto& w : places_over(l, {prime(2), prime(3), prime(5), prime(13)}))
            CHECK(is_local_square(x * x, l, w));
    }
    const PlaceK w3 = places_above(prime(3), k)[0];
    CHECK(is_local_square(Scalar(l, 3), k, w3) == false);
    CHECK(is_local_square(Scalar(l, 2), k, w3));
}
