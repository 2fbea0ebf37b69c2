#include <doctest.h>

#include "dp8/conic.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dp8;
using dp8::testing::Gen;

namespace {

using Labels = std::vector<std::string>;

Labels labels_of(const Conic& c) { return c.brauer_class().labels(); }

BrauerClass2 class_q(const std::vector<long long>& primes, bool inf) {
    std::vector<Place> places;
    if (inf) places.push_back(Place::real());
    for (long long p : primes) places.push_back(Place::finite(Integer(p)));
    return brauer_class_q(places);
}

bool isotropic_over(const Conic& c, const QuadField& k) {
    return is_isotropic(c.base_change(Field::quadratic(k)).form());
}

}  // namespace

TEST_CASE("Brauer classes of conics over Q") {
    CHECK(labels_of(conic_from_coeffs(1, 1, 1)) == Labels{"inf", "2"});
    CHECK(labels_of(conic_from_coeffs(1, 1, -3)) == Labels{"2", "3"});
    CHECK(labels_of(conic_from_coeffs(1, 1, -1)).empty());
    CHECK(conic_from_coeffs(1, 1, -2).is_trivial());
    CHECK_THROWS_AS(conic_from_coeffs(1, 0, 1), DomainError);
    CHECK_THROWS_AS(brauer_class_q({Place::real()}), DomainError);
}

TEST_CASE("Brauer classes over Q match the local oracle") {
    Gen g(61);
    for (int i = 0; i < 150; ++i) {
        const auto v = dp8::testing::diag(g, 3, 40);
        const Conic c = conic_from_coeffs(v[0], v[1], v[2]);
        const long long a = static_cast<long long>(numerator_of(v[0])), b = static_cast<long long>(numerator_of(v[1])),
                        cc = static_cast<long long>(numerator_of(v[2]));
        CAPTURE(c.to_string());
        CHECK(labels_of(c) == oracle::ramified_labels(-a * cc, -b * cc));
    }
}

TEST_CASE("Brauer classes over quadratic fields") {
    const Field real3 = Field::quadratic(QuadField(Integer(3)));
    const Conic c = conic_from_coeffs(real3, Scalar(real3, 1), Scalar(real3, 1), Scalar(real3, 1));
    CHECK(labels_of(c) == Labels{"inf1", "inf2"});
    const Field gauss = Field::quadratic(QuadField(Integer(-1)));
    CHECK(conic_from_coeffs(gauss, Scalar(gauss, 1), Scalar(gauss, 1), Scalar(gauss, 1)).is_trivial());
    Gen g(67);
    for (int i = 0; i < 60; ++i) {
        const Field l = Field::quadratic(QuadField(dp8::testing::squarefree(g, 30)));
        const Conic k = dp8::testing::conic_l(g, l, 6);
        CHECK(k.brauer_class().places().size() % 2 == 0);
        CHECK(galois_conjugate(k).brauer_class() == k.brauer_class().conjugate());
    }
}

TEST_CASE("a conic with every even class") {
    const std::vector<std::string> pool{"inf", "2", "3", "5", "7", "11", "13"};
    for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        std::vector<long long> primes;
        bool inf = false;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask & (1u << i)) {
                if (i == 0)
                    inf = true;
                else
                    primes.push_back(std::stoll(pool[i]));
            }
        const BrauerClass2 s = class_q(primes, inf);
        const Conic c = conic_with_class(s);
        CHECK(c.brauer_class() == s);
    }
    CHECK(conic_with_class(class_q({}, false)).to_string() == "1,1,-1");
    CHECK(conic_with_class(class_q({2}, true)).to_string() == "-1,-1,-1");
    CHECK(conic_with_class(class_q({2, 3}, false)).to_string() == "-1,3,-1");
}

TEST_CASE("Brauer product and common splitting field") {
    Gen g(71);
    for (int i = 0; i < 40; ++i) {
        const Conic c1 = dp8::testing::conic_q(g, 20), c2 = dp8::testing::conic_q(g, 20);
        CAPTURE(c1.to_string());
        CAPTURE(c2.to_string());
        CHECK(brauer_product(c1, c2).brauer_class() == c1.brauer_class() + c2.brauer_class());
        const QuadField k = common_splitting_field(c1, c2);
        CHECK(isotropic_over(c1, k));
        CHECK(isotropic_over(c2, k));
    }
    const Conic one = conic_from_coeffs(1, 1, 1);
    CHECK(brauer_product(one, one).is_trivial());
    const Conic c3 = conic_with_class(class_q({3}, true));
    CHECK(labels_of(brauer_product(one, c3)) == Labels{"2", "3"});
}

TEST_CASE("isomorphic conics") {
    CHECK(isomorphic_conics(conic_from_coeffs(1, 1, 1), conic_from_coeffs(2, 2, 2)));
    CHECK(isomorphic_conics(conic_from_coeffs(1, 1, -1), conic_from_coeffs(1, 2, -3)));
    CHECK_FALSE(isomorphic_conics(conic_from_coeffs(1, 1, 1), conic_from_coeffs(1, 1, -3)));
}

TEST_CASE("descent of conics") {
    Gen g(73);
    for (int i = 0; i < 30; ++i) {
        const Field l = Field::quadratic(QuadField(dp8::testing::squarefree(g, 30)));
        const Conic n = dp8::testing::conic_q(g, 15);
        const Conic c = n.base_change(l);
        auto d = is_descended(c);
        REQUIRE(d.has_value());
        CHECK(d->field().is_rational());
        CHECK(d->base_change(l).brauer_class() == c.brauer_class());
    }
    const Field gauss = Field::quadratic(QuadField(Integer(-1)));
    for (int i = 0; i < 40; ++i) {
        const Conic c = dp8::testing::conic_l(g, gauss, 8);
        const bool stable = c.brauer_class() == c.brauer_class().conjugate();
        if (!stable) CHECK_FALSE(is_descended(c).has_value());
    }
}

TEST_CASE("Brauer subgroups") {
    const BrauerClass2 a = class_q({2}, true), b = class_q({2, 3}, false);
    CHECK(BrauerSubgroup(Field::rationals(), {a, b}).order() == 4);
    CHECK(BrauerSubgroup(Field::rationals(), {a, a}).order() == 2);
    CHECK(BrauerSubgroup(Field::rationals(), {a, class_q({}, false)}).order() == 2);
    CHECK(BrauerSubgroup(Field::rationals(), {}).order() == 1);
    const BrauerSubgroup h(Field::rationals(), {a, b});
    CHECK(h.contains(a + b));
    CHECK(h.elements().front().is_trivial());
    CHECK(h == BrauerSubgroup(Field::rationals(), {a + b, b}));
}
