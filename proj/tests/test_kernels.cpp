#include <doctest.h>
#include <omp.h>

#include "dp8/dyadic.hpp"
#include "dp8/qform.hpp"
#include "generators.hpp"

using namespace dp8;
using dp8::testing::Gen;

namespace {

struct Threads {
    explicit Threads(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
    ~Threads() { omp_set_num_threads(saved); }
    int saved;
};

QuadraticForm random_nondiagonal(Gen& g, int n) {
    while (true) {
        Matrix gram(n, std::vector<Scalar>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) gram[i][j] = gram[j][i] = Scalar(Rational(g.between(-4, 4)));
        try {
            return diagonalize(Field::rationals(), gram);
        } catch (const DomainError&) {
        }
    }
}

}  // namespace

TEST_CASE("point search: parallel kernels match the serial reference") {
    Threads t(4);
    Gen g(109);
    for (int i = 0; i < 60; ++i) {
        const int n = static_cast<int>(g.between(3, 4));
        const QuadraticForm q = diagonal_form(dp8::testing::diag(g, n, 12));
        const long long h = n == 3 ? 40 : 10;
        CAPTURE(q.to_string());
        CHECK(oracle_point_search(q, h) == oracle_point_search_serial(q, h));
    }
    for (int i = 0; i < 20; ++i) {
        const QuadraticForm q = random_nondiagonal(g, 3);
        CAPTURE(q.to_string());
        CHECK(oracle_point_search(q, 8) == oracle_point_search_serial(q, 8));
    }
}

TEST_CASE("point search rejects out-of-range heights") {
    CHECK_THROWS_AS(oracle_point_search(diagonal_form({1, 1, 1}), 0), DomainError);
    CHECK_THROWS_AS(oracle_point_search(diagonal_form({1, 1, 1, 1}), 5000), DomainError);
}

TEST_CASE("(-1)-classes: parallel enumeration matches the serial reference") {
    Threads t(4);
    Gen g(113);
    for (int i = 0; i < 20; ++i) {
        const GaloisLattice x = dp8::testing::lattice_state(g);
        const int bound = x.rank() <= 4 ? 3 : 2;
        CHECK(neg_one_classes(x, bound) == neg_one_classes_serial(x, bound));
    }
}

TEST_CASE("dyadic symbol: parallel search matches the serial reference") {
    Threads t(4);
    Gen g(127);
    for (long long m : {-1, 3, -5, 7, 2, -2, 6, 5, -3}) {
        const QuadField k{Integer(m)};
        const Field l = Field::quadratic(k);
        detail::DyadicResidueRing ring(k);
        for (int i = 0; i < 10; ++i) {
            const Scalar a = dp8::testing::scalar_l(g, l, 7), b = dp8::testing::scalar_l(g, l, 7);
            const PlaceK w = places_above(Place::finite(Integer(2)), k)[0];
            if (valuation_at(a, k, w) > 1 || valuation_at(b, k, w) > 1) continue;
            if (valuation_at(a, k, w) < 0 || valuation_at(b, k, w) < 0) continue;
            CHECK(detail::dyadic_hilbert_serial(ring, a, b) == detail::dyadic_hilbert_parallel(ring, a, b));
        }
    }
}
