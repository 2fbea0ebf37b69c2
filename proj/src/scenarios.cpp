#include <algorithm>
#include <set>

#include "dp8/integer.hpp"
#include "dp8/piclattice.hpp"

namespace dp8 {

namespace {

IntVec unit(int n, int i) {
    IntVec v(n, 0);
    v[i] = 1;
    return v;
}

IntVec operator+(IntVec x, const IntVec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
}

IntVec operator-(IntVec x, const IntVec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
    return x;
}

std::string yes(bool b) { return b ? "true" : "false"; }

const IntMat kSwap{{0, 1}, {1, 0}};

}  // namespace

ScenarioReport scenario_cblink(bool trivial_action) {
    ScenarioReport r{"cblink", {}, std::nullopt};
    // C1 x C2 with two conjugate points on distinct fibers of both rulings
    GaloisLattice x = quadric_lattice(trivial_action ? std::vector<IntMat>{} : std::vector<IntMat>{identity_matrix(2)});
    GaloisLattice z = blow_up_orbit(x, 2, trivial_action ? std::vector<std::vector<int>>{} : std::vector<std::vector<int>>{{1, 0}});
    const IntVec a = unit(4, 0), b = unit(4, 1), e1 = unit(4, 2), e2 = unit(4, 3);
    r.check("K^2 before", 8, k_squared(x));
    r.check("K^2 after blowup", 6, k_squared(z));
    auto lines = neg_one_classes(z, 3);
    r.check("(-1)-classes on the blowup", 6, static_cast<long long>(lines.size()));
    r.check("(-1)-classes form a hexagon", "true", yes(forms_cycle(z, lines)));

    Contraction c = contract_map(z, {a - e1, a - e2});
    r.check("K^2 after contraction", 8, k_squared(c.lattice));
    r.check("rank after contraction", 2, c.lattice.rank());
    const IntVec b1 = c.push(b - e1), b2 = c.push(b - e2), fiber = c.push(a);
    r.check("B1 image self-intersection", 0, c.lattice.self(b1));
    r.check("B2 image self-intersection", 0, c.lattice.self(b2));
    r.check("B1 image meets fiber", 1, c.lattice.pair(b1, fiber));
    const IntVec ruling = a + b - e1 - e2;
    r.check("second ruling orthogonal to contracted curves", 0,
            std::abs(z.pair(ruling, a - e1)) + std::abs(z.pair(ruling, a - e2)));
    r.check("second ruling self-intersection", 0, z.self(ruling));
    r.check("second ruling meets fiber", 1, z.pair(ruling, a));
    r.check("second ruling K-degree", -2, z.degree(ruling));
    r.check("B1 image equals second ruling", to_string(c.push(ruling)), to_string(b1));
    r.check("invariant rank after contraction", 2, invariant_rank(c.lattice));
    return r;
}

ScenarioReport scenario_f2k(int k) {
    if (k < 0) throw DomainError("scenario_f2k: k must be nonnegative");
    ScenarioReport r{"f2k", {}, std::nullopt};
    // basis (H, F): H the (-2k)-section, F the fiber
    GaloisLattice x({{-2LL * k, 1}, {1, 0}}, {-2, -2LL * k - 2}, {identity_matrix(2)});
    GaloisLattice z = blow_up_orbit(x, 2, {{1, 0}});
    const IntVec h = unit(4, 0), f = unit(4, 1), e1 = unit(4, 2), e2 = unit(4, 3);
    const IntVec section = h - e1 - e2;
    r.check("K^2 before", 8, k_squared(x));
    r.check("section self-intersection before", -2LL * k, x.self({1, 0}));
    r.check("K^2 after blowup", 6, k_squared(z));
    Contraction c = contract_map(z, {f - e1, f - e2});
    r.check("K^2 after contraction", 8, k_squared(c.lattice));
    const IntVec s = c.push(section), fiber = c.push(f);
    r.check("section self-intersection after", -2LL * k - 2, c.lattice.self(s));
    r.check("section meets fiber", 1, c.lattice.pair(s, fiber));
    r.check("fiber self-intersection", 0, c.lattice.self(fiber));
    r.check("invariant rank after contraction", 2, invariant_rank(c.lattice));
    return r;
}

ScenarioReport scenario_dplink4(int orbit_pattern) {
    if (orbit_pattern != 1 && orbit_pattern != 2) throw DomainError("scenario_dplink4: orbit pattern must be 1 or 2");
    ScenarioReport r{"dplink4", {}, std::nullopt};
    // sigma swaps the rulings, tau fixes them; tau generates Gal(kbar/L) on the points
    const std::vector<int> tau = orbit_pattern == 1 ? std::vector<int>{1, 2, 3, 0} : std::vector<int>{1, 0, 3, 2};
    const std::vector<int> sigma = orbit_pattern == 1 ? std::vector<int>{0, 1, 2, 3} : std::vector<int>{2, 3, 0, 1};
    GaloisLattice x = quadric_lattice({kSwap, identity_matrix(2)});
    GaloisLattice z = blow_up_orbit(x, 4, {sigma, tau});
    GaloisLattice z_l = blow_up_orbit(quadric_lattice({identity_matrix(2)}), 4, {tau});
    r.check("rho(X)", 1, invariant_rank(x));
    r.check("K^2 of Z", 4, k_squared(z));

    const IntVec a = unit(6, 0), b = unit(6, 1);
    IntVec sum_e(6, 0);
    for (int i = 2; i < 6; ++i) sum_e[i] = 1;
    std::vector<IntVec> expected, conj, exceptional;
    for (int i = 2; i < 6; ++i) {
        const IntVec e = unit(6, i);
        exceptional.push_back(e);
        conj.push_back(a + b + e - sum_e);
        for (const IntVec& v : {e, a - e, b - e, a + b + e - sum_e}) expected.push_back(v);
    }
    std::sort(expected.begin(), expected.end());
    auto lines = neg_one_classes(z, 3);
    r.check("(-1)-classes on Z", 16, static_cast<long long>(lines.size()));
    r.check("(-1)-classes match E_i, A-E_i, B-E_i, A+B+E_i-sum E", "true", yes(lines == expected));

    long long overlap = 0;
    for (std::size_t i = 0; i < conj.size(); ++i)
        for (std::size_t j = i + 1; j < conj.size(); ++j) overlap += std::abs(z.pair(conj[i], conj[j]));
    r.check("A+B+E_i-sum E pairwise disjoint", 0, overlap);
    r.check("orbits of Gal(kbar/L) on E_i", orbit_pattern, static_cast<long long>(orbits(z_l, exceptional).size()));
    r.check("orbits of Gal(kbar/L) on contracted curves", orbit_pattern,
            static_cast<long long>(orbits(z_l, conj).size()));
    r.check("orbits of Gal(kbar/k) on contracted curves", 1, static_cast<long long>(orbits(z, conj).size()));

    Contraction c = contract_map(z, conj);
    Contraction c_l = contract_map(z_l, conj);
    r.check("K^2 of X1", 8, k_squared(c.lattice));
    r.check("rho(Z)", 2, invariant_rank(z));
    r.check("rho(X1)", 1, invariant_rank(c.lattice));
    r.check("rho(Z_L)", 2 + orbit_pattern, invariant_rank(z_l));
    r.check("rho((X1)_L) = rho(Z_L) - k", invariant_rank(z_l) - orbit_pattern, invariant_rank(c_l.lattice));
    r.check("rho((X1)_L)", 2, invariant_rank(c_l.lattice));
    const auto& g = c.lattice.gram();
    r.check("X1 lattice is even unimodular", "true",
            yes(g[0][0] % 2 == 0 && g[1][1] % 2 == 0 && g[0][0] * g[1][1] - g[0][1] * g[1][0] == -1));
    return r;
}

ScenarioReport scenario_dplink2(bool odd_parity) {
    ScenarioReport r{"dplink2", {}, std::nullopt};
    // basis (A1, E1, B1, F); F = A1 + B2 = A2 + B1, E1 a (-1)-section
    GaloisLattice lat({{-1, 1, 0, 0}, {1, -1, 1, 1}, {0, 1, -1, 0}, {0, 1, 0, 0}}, {-1, -2, -1, -1});
    const IntVec a1 = unit(4, 0), e1 = unit(4, 1), b1 = unit(4, 2), f = unit(4, 3);
    const IntVec a2 = f - b1, b2 = f - a1;
    r.check("fiber self-intersection", 0, lat.self(f));
    r.check("A1.E1", 1, lat.pair(a1, e1));
    r.check("E1.B1", 1, lat.pair(e1, b1));
    r.check("B1.A2", 1, lat.pair(b1, a2));
    r.check("A1.B2", 1, lat.pair(a1, b2));

    const int bound = 8;
    std::set<long long> b_values, r_b1;
    std::set<IntVec> shapes;
    for (long long x0 = -bound; x0 <= bound; ++x0)
        for (long long x1 = -bound; x1 <= bound; ++x1)
            for (long long x2 = -bound; x2 <= bound; ++x2)
                for (long long x3 = -bound; x3 <= bound; ++x3) {
                    const IntVec rv{x0, x1, x2, x3};
                    if (lat.pair(rv, f) != 1 || lat.pair(rv, a1) != 1) continue;
                    const long long sq = lat.self(rv);
                    if ((sq % 2 != 0) != odd_parity) continue;
                    if (lat.pair(rv, b1) < 0 || lat.pair(rv, a2) < 0 || lat.pair(rv, b2) < 0) continue;
                    b_values.insert(x2);
                    r_b1.insert(lat.pair(rv, b1));
                    shapes.insert({x0, x1});
                }
    if (b_values.size() != 1 || r_b1.size() != 1)
        throw std::logic_error("scenario_dplink2: b is not determined by the constraints");
    r.check("R = E1 + b B1 + f F", "(0,1)", shapes.size() == 1 ? to_string(*shapes.begin()) : "ambiguous");
    r.check("b", odd_parity ? 0 : 1, *b_values.begin());
    r.check("R.B1", odd_parity ? 1 : 0, *r_b1.begin());
    long long mismatches = 0;
    for (long long bb = -bound; bb <= bound; ++bb)
        for (long long ff = -bound; ff <= bound; ++ff) {
            const IntVec rv{0, 1, bb, ff};
            if (lat.self(rv) != -1 - bb * bb + 2 * bb + 2 * ff) ++mismatches;
        }
    r.check("R^2 = -1 - b^2 + 2b + 2f", 0, mismatches);
    r.value = *r_b1.begin();
    return r;
}

}  // namespace dp8
