#include <doctest.h>

#include "dp8/factor.hpp"
#include "dp8/scalar.hpp"
#include "generators.hpp"

using namespace dp8;
using dp8::testing::Gen;

namespace {

bool brute_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

SplitType brute_splitting(long long p, long long m) {
    if (p == 2) {
        const long long r = ((m % 8) + 8) % 8;
        if (r == 1) return SplitType::Split;
        if (r == 5) return SplitType::Inert;
        return SplitType::Ramified;
    }
    if (m % p == 0) return SplitType::Ramified;
    for (long long x = 0; x < p; ++x)
        if ((x * x - m) % p == 0) return SplitType::Split;
    return SplitType::Inert;
}

}  // namespace

TEST_CASE("modular helpers") {
    CHECK(mod(Integer(-7), Integer(5)) == 3);
    CHECK(mod(Rational(1, 3), Integer(7)) == 5);
    CHECK(inverse_mod(Integer(3), Integer(7)) == 5);
    CHECK(pow_mod(Integer(2), Integer(10), Integer(1000)) == 24);
    CHECK(gcd(Integer(12), Integer(-18)) == 6);
    CHECK(lcm(Integer(4), Integer(6)) == 12);
    CHECK(valuation(Integer(48), Integer(2)) == 4);
    CHECK(valuation(Rational(9, 20), Integer(2)) == -2);
    CHECK_THROWS_AS(inverse_mod(Integer(4), Integer(8)), DomainError);
}

TEST_CASE("parsing") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_integer("123456789012345678901234567890") > Integer(1) << 90);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_integer("12x"), DomainError);
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
}

TEST_CASE("squares") {
    Integer r;
    CHECK(exact_sqrt(Integer(144), r));
    CHECK(r == 12);
    CHECK_FALSE(is_square(Integer(-4)));
    CHECK(is_square(Rational(9, 49)));
    CHECK_FALSE(is_square(Rational(2, 9)));
}

TEST_CASE("factorization property") {
    Gen g(11);
    for (int i = 0; i < 300; ++i) {
        const Integer n = Integer(g.nonzero(1LL << 40));
        Integer prod = 1;
        Integer last = 0;
        for (const auto& pp : factorize(n)) {
            CHECK(pp.prime > last);
            CHECK(is_prime(pp.prime));
            last = pp.prime;
            for (int e = 0; e < pp.exponent; ++e) prod *= pp.prime;
        }
        CHECK(prod == abs(n));
    }
    const Integer big = Integer("1000000007") * Integer("998244353");
    auto f = factorize(big);
    REQUIRE(f.size() == 2);
    CHECK(f[0].prime == Integer("998244353"));
}

TEST_CASE("primality agrees with trial division") {
    for (long long n = -5; n < 3000; ++n) CHECK(is_prime(Integer(n)) == brute_prime(n));
}

TEST_CASE("square-free kernel and class") {
    CHECK(squarefree_kernel(Integer(-72)) == -2);
    CHECK(squarefree_class(Rational(12, 5)) == 15);
    Gen g(5);
    for (int i = 0; i < 200; ++i) {
        const Integer n = Integer(g.nonzero(100000));
        const Integer k = squarefree_kernel(n);
        CHECK(is_square(Rational(n) / Rational(k)));
        for (const auto& pp : factorize(k)) CHECK(pp.exponent == 1);
    }
}

TEST_CASE("Legendre symbol and square roots mod p") {
    for (long long p : {3, 5, 7, 11, 13, 101, 1009}) {
        for (long long a = 1; a < std::min(p, 200LL); ++a) {
            bool residue = false;
            for (long long x = 1; x < p; ++x) residue = residue || (x * x - a) % p == 0;
            CHECK(legendre(Integer(a), Integer(p)) == (residue ? 1 : -1));
            if (residue) {
                const Integer s = sqrt_mod_prime(Integer(a), Integer(p));
                CHECK(mod(s * s - a, Integer(p)) == 0);
            }
        }
    }
    CHECK_THROWS_AS(legendre(Integer(3), Integer(9)), DomainError);
}

TEST_CASE("prime splitting in quadratic fields") {
    for (long long m : {-1, 2, -3, 5, -5, 6, 7, -7, 13, 17, -15, 33}) {
        const QuadField k{Integer(m)};
        for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23})
            CHECK(prime_splitting(Integer(p), k) == brute_splitting(p, m));
    }
    CHECK_THROWS_AS(QuadField(Integer(4)), DomainError);
    CHECK_THROWS_AS(QuadField(Integer(1)), DomainError);
}

TEST_CASE("places above a prime") {
    const QuadField k{Integer(-1)};
    auto above5 = places_above(Place::finite(Integer(5)), k);
    REQUIRE(above5.size() == 2);
    CHECK(above5[0].conjugate() == above5[1]);
    CHECK(above5[0].label() == "5:split:1");
    CHECK(places_above(Place::finite(Integer(3)), k)[0].label() == "3:inert");
    CHECK(places_above(Place::finite(Integer(2)), k)[0].label() == "2:ram");
    CHECK(places_above(Place::real(), QuadField(Integer(3))).size() == 2);
    CHECK(places_above(Place::real(), k).empty());
    CHECK(PlaceK::parse(k, "5:split:2") == above5[1]);
}

TEST_CASE("scalar arithmetic properties") {
    Gen g(17);
    for (int i = 0; i < 200; ++i) {
        const Field l = Field::quadratic(QuadField(dp8::testing::squarefree(g, 50)));
        const Scalar x = dp8::testing::scalar_l(g, l, 20), y = dp8::testing::scalar_l(g, l, 20);
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
        CHECK((x / y) * y == x);
        CHECK(is_global_square(x * x));
        const Scalar c(l, Rational(g.nonzero(30)) / Rational(g.nonzero(30)));
        CHECK(square_class_rep(x * c * c) == square_class_rep(x));
        CHECK(is_global_square(x * square_class_rep(x)));
    }
    const Field l = Field::quadratic(QuadField(Integer(2)));
    CHECK(is_global_square(Scalar(l, 3, 2)));  // (1 + sqrt 2)^2
    CHECK_FALSE(is_global_square(Scalar(l, 1, 1)));
    CHECK(parse_scalar(l, "3+2r") == Scalar(l, 3, 2));
    CHECK_THROWS_AS(Scalar(1) + Scalar(l, 0, 1) + Scalar(Field::quadratic(QuadField(Integer(3))), 0, 1),
                    DomainError);
}
