#include <doctest.h>

#include "dp8/integer.hpp"
#include "dp8/piclattice.hpp"
#include "generators.hpp"

using namespace dp8;
using dp8::testing::Gen;

namespace {

const IntMat kSwap{{0, 1}, {1, 0}};

IntVec padded(const IntVec& x, int n) {
    IntVec out = x;
    out.resize(n, 0);
    return out;
}

IntVec unit(int n, int i) {
    IntVec v(n, 0);
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("lattice validation") {
    CHECK_THROWS_AS(GaloisLattice({{0, 1}, {2, 0}}, {-2, -2}), DomainError);
    CHECK_THROWS_AS(GaloisLattice({{0, 1}, {1, 0}}, {-2}), DomainError);
    CHECK_THROWS_AS(GaloisLattice({{0, 1}, {1, 0}}, {-2, -2}, {{{1, 1}, {0, 1}}}), DomainError);
    CHECK_THROWS_AS(GaloisLattice({{-2, 1}, {1, 0}}, {-2, -4}, {kSwap}), DomainError);
    CHECK_NOTHROW(quadric_lattice({kSwap}));
}

TEST_CASE("intersection numbers of the quadric") {
    const GaloisLattice x = quadric_lattice();
    CHECK(k_squared(x) == 8);
    CHECK(x.pair({1, 0}, {0, 1}) == 1);
    CHECK(x.self({1, 1}) == 2);
    CHECK(x.degree({1, 0}) == -2);
    CHECK(invariant_rank(quadric_lattice({kSwap})) == 1);
    CHECK(invariant_rank(quadric_lattice({identity_matrix(2)})) == 2);
    CHECK(act(kSwap, {3, 5}) == IntVec{5, 3});
    CHECK(permutation_matrix({1, 2, 0}) == IntMat{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
}

TEST_CASE("blowing up one point of the quadric") {
    const GaloisLattice z = blow_up_orbit(quadric_lattice(), 1, {});
    CHECK(k_squared(z) == 7);
    auto lines = neg_one_classes(z, 2);
    CHECK(lines == std::vector<IntVec>{{0, 0, 1}, {0, 1, -1}, {1, 0, -1}});
    CHECK(lines == neg_one_classes_serial(z, 2));
    CHECK_FALSE(forms_cycle(z, lines));
    CHECK(k_squared(blow_up_orbit(quadric_lattice(), 2, {})) == 6);
    CHECK_THROWS_AS(blow_up_orbit(quadric_lattice({identity_matrix(2)}), 2, {{0, 0}}), DomainError);
}

TEST_CASE("orbits of the Galois action") {
    const GaloisLattice z = blow_up_orbit(quadric_lattice({identity_matrix(2)}), 4, {{1, 0, 3, 2}});
    std::vector<IntVec> e;
    for (int i = 2; i < 6; ++i) e.push_back(unit(6, i));
    CHECK(orbits(z, e) == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(invariant_rank(z) == 4);
}

TEST_CASE("contraction undoes a blowup") {
    Gen g(107);
    for (int i = 0; i < 40; ++i) {
        const GaloisLattice x = dp8::testing::lattice_state(g);
        const int n = x.rank();
        const int s = static_cast<int>(g.between(1, 3));
        std::vector<std::vector<int>> action;
        for (std::size_t k = 0; k < x.group().size(); ++k) action.push_back(dp8::testing::permutation(g, s));
        const GaloisLattice z = blow_up_orbit(x, s, action);
        CHECK(k_squared(z) == k_squared(x) - s);
        std::vector<IntVec> es;
        for (int k = 0; k < s; ++k) es.push_back(unit(n + s, n + k));
        const Contraction c = contract_map(z, es);
        REQUIRE(c.lattice.rank() == n);
        CHECK(k_squared(c.lattice) == k_squared(x));
        CHECK(invariant_rank(c.lattice) == invariant_rank(x));
        std::vector<IntVec> images;
        for (int a = 0; a < n; ++a) images.push_back(c.push(padded(unit(n, a), n + s)));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) CHECK(c.lattice.pair(images[a], images[b]) == x.gram()[a][b]);
        CHECK(c.push(z.canonical()) == c.lattice.canonical());
        CHECK(c.push(padded(x.canonical(), n + s)) == c.lattice.canonical());
        for (const auto& e : es) CHECK(c.push(e) == IntVec(n, 0));
    }
}

TEST_CASE("contraction rejects classes that meet") {
    const GaloisLattice z = blow_up_orbit(quadric_lattice(), 1, {});
    CHECK_THROWS_AS(contract_map(z, {{0, 0, 1}, {1, 0, -1}}), DomainError);
    CHECK_THROWS_AS(contract_map(z, {{1, 0, 0}}), DomainError);
}

TEST_CASE("scenario cblink") {
    for (bool trivial : {false, true}) {
        const ScenarioReport r = scenario_cblink(trivial);
        for (const auto& a : r.assertions) {
            CAPTURE(a.name);
            CHECK(a.expected == a.actual);
        }
        CHECK(r.passed());
    }
}

TEST_CASE("scenario f2k") {
    for (int k = 0; k <= 4; ++k) {
        const ScenarioReport r = scenario_f2k(k);
        CHECK(r.passed());
        bool found = false;
        for (const auto& a : r.assertions)
            if (a.name == "section self-intersection after") {
                CHECK(a.actual == std::to_string(-2 * k - 2));
                found = true;
            }
        CHECK(found);
    }
    CHECK_THROWS_AS(scenario_f2k(-1), DomainError);
}

TEST_CASE("scenario dplink4") {
    for (int pattern : {1, 2}) {
        const ScenarioReport r = scenario_dplink4(pattern);
        for (const auto& a : r.assertions) {
            CAPTURE(a.name);
            CHECK(a.expected == a.actual);
        }
    }
    CHECK_THROWS_AS(scenario_dplink4(3), DomainError);
}

TEST_CASE("scenario dplink2") {
    const ScenarioReport odd = scenario_dplink2(true), even = scenario_dplink2(false);
    CHECK(odd.passed());
    CHECK(even.passed());
    CHECK(odd.value == 1);
    CHECK(even.value == 0);
}

TEST_CASE("failed assertions are reported") {
    ScenarioReport r{"demo", {}, std::nullopt};
    r.check("holds", 1, 1);
    r.check("fails", "x", "y");
    CHECK_FALSE(r.passed());
    CHECK(r.assertions[1].pass == false);
}
