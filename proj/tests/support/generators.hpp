#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "dp8/conic.hpp"
#include "dp8/factor.hpp"
#include "dp8/piclattice.hpp"

namespace dp8::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long long between(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }
    long long nonzero(long long bound) {
        long long x = 0;
        while (x == 0) x = between(-bound, bound);
        return x;
    }
    bool coin() { return between(0, 1) == 1; }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Square-free m with 2 <= |m| <= bound and m != 1.
inline Integer squarefree(Gen& g, long long bound) {
    while (true) {
        const long long m = g.nonzero(bound);
        if (m != 1 && squarefree_kernel(Integer(m)) == m) return Integer(m);
    }
}

inline std::vector<Rational> diag(Gen& g, int rank, long long bound) {
    std::vector<Rational> out;
    for (int i = 0; i < rank; ++i) out.emplace_back(g.nonzero(bound));
    return out;
}

inline Conic conic_q(Gen& g, long long bound) {
    auto v = diag(g, 3, bound);
    return conic_from_coeffs(v[0], v[1], v[2]);
}

inline Scalar scalar_l(Gen& g, const Field& l, long long bound) {
    while (true) {
        Scalar x(l, Rational(g.between(-bound, bound)), Rational(g.between(-bound, bound)));
        if (!x.is_zero()) return x;
    }
}

inline Conic conic_l(Gen& g, const Field& l, long long bound) {
    return conic_from_coeffs(l, scalar_l(g, l, bound), scalar_l(g, l, bound), scalar_l(g, l, bound));
}

inline std::vector<int> permutation(Gen& g, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), g.engine());
    return p;
}

/// A quadric or F_2k lattice with one or two generators, possibly already
/// blown up once.
inline GaloisLattice lattice_state(Gen& g) {
    const IntMat swap{{0, 1}, {1, 0}};
    std::vector<IntMat> gens;
    const int ngens = static_cast<int>(g.between(1, 2));
    GaloisLattice base = quadric_lattice();
    if (g.coin()) {
        for (int i = 0; i < ngens; ++i) gens.push_back(g.coin() ? swap : identity_matrix(2));
        base = quadric_lattice(gens);
    } else {
        const long long k = g.between(0, 3);
        gens.assign(ngens, identity_matrix(2));
        base = GaloisLattice({{-2 * k, 1}, {1, 0}}, {-2, -2 * k - 2}, gens);
    }
    if (g.coin()) {
        const int s = static_cast<int>(g.between(1, 3));
        std::vector<std::vector<int>> action;
        for (int i = 0; i < ngens; ++i) action.push_back(permutation(g, s));
        base = blow_up_orbit(base, s, action);
    }
    return base;
}

}  // namespace dp8::testing
