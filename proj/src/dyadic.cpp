#include "dp8/dyadic.hpp"

namespace dp8::detail {

namespace {

constexpr int M = DyadicResidueRing::kModulus;

int reduce_mod32(const Rational& r) { return static_cast<int>(mod(r, Integer(M))); }

}  // namespace

DyadicResidueRing::DyadicResidueRing(const QuadField& field)
    : m_(field.m()), half_basis_(mod(field.m(), Integer(4)) == 1), square_of_(kSize) {
    if (mod(m_, Integer(8)) == 1) throw DomainError("DyadicResidueRing: 2 splits in " + field.label());
    omega_sq_const_ = half_basis_ ? static_cast<int>(mod((m_ - 1) / 4, Integer(M)))
                                  : static_cast<int>(mod(m_, Integer(M)));
    for (int x = 0; x < kSize; ++x) {
        int c0 = x % M, c1 = x / M;
        long long n = half_basis_ ? (1LL * c0 * c0 + 1LL * c0 * c1 - 1LL * omega_sq_const_ * c1 * c1)
                                  : (1LL * c0 * c0 - 1LL * omega_sq_const_ * c1 * c1);
        units_[x] = (n % 2) != 0;
        Elem sq = mul(static_cast<Elem>(x), static_cast<Elem>(x));
        square_of_[x] = sq;
        squares_[sq] = true;
    }
    std::bitset<kSize> unit_sq;
    for (int x = 0; x < kSize; ++x)
        if (units_[x]) unit_sq[square_of_[x]] = true;
    for (int x = 0; x < kSize; ++x) {
        if (unit_sq[x]) unit_squares_.push_back(static_cast<Elem>(x));
        if (squares_[x]) all_squares_.push_back(static_cast<Elem>(x));
    }
}

DyadicResidueRing::Elem DyadicResidueRing::reduce(const Scalar& x) const {
    int c0, c1;
    if (half_basis_) {
        // a + b sqrt m = (a - b) + 2b w
        c0 = reduce_mod32(x.a() - x.b());
        c1 = reduce_mod32(2 * x.b());
    } else {
        c0 = reduce_mod32(x.a());
        c1 = reduce_mod32(x.b());
    }
    return static_cast<Elem>(c0 + M * c1);
}

DyadicResidueRing::Elem DyadicResidueRing::add(Elem x, Elem y) const {
    int c0 = (x % M + y % M) % M;
    int c1 = (x / M + y / M) % M;
    return static_cast<Elem>(c0 + M * c1);
}

DyadicResidueRing::Elem DyadicResidueRing::mul(Elem x, Elem y) const {
    int a0 = x % M, a1 = x / M, b0 = y % M, b1 = y / M;
    int hi = a1 * b1 % M;
    int c0 = (a0 * b0 + hi * omega_sq_const_) % M;
    int c1 = (a0 * b1 + a1 * b0 + (half_basis_ ? hi : 0)) % M;
    return static_cast<Elem>(c0 + M * c1);
}

Scalar dyadic_uniformizer(const QuadField& field, const PlaceK& w) {
    Field f = Field::quadratic(field);
    switch (w.split_type()) {
        case SplitType::Inert: return Scalar(f, 2, 0);
        case SplitType::Ramified:
            if (mod(field.m(), Integer(4)) == 3) return Scalar(f, 1, 1);
            return Scalar(f, 0, 1);
        case SplitType::Split: break;
    }
    throw DomainError("dyadic_uniformizer: place splits");
}

int dyadic_hilbert_serial(const DyadicResidueRing& ring, const Scalar& a, const Scalar& b) {
    const auto ra = ring.reduce(a), rb = ring.reduce(b);
    for (auto u : ring.unit_squares())
        for (auto s : ring.all_squares()) {
            if (ring.is_square(ring.add(ring.mul(ra, u), ring.mul(rb, s)))) return 1;
            if (ring.is_square(ring.add(ring.mul(ra, s), ring.mul(rb, u)))) return 1;
        }
    return -1;
}

int dyadic_hilbert_parallel(const DyadicResidueRing& ring, const Scalar& a, const Scalar& b) {
    const auto ra = ring.reduce(a), rb = ring.reduce(b);
    const auto& units = ring.unit_squares();
    const auto& all = ring.all_squares();
    const int n = static_cast<int>(units.size());
    int found = 0;
#pragma omp parallel for schedule(static) reduction(| : found)
    for (int i = 0; i < n; ++i) {
        auto au = ring.mul(ra, units[i]), bu = ring.mul(rb, units[i]);
        for (std::size_t j = 0; j < all.size() && !found; ++j) {
            if (ring.is_square(ring.add(au, ring.mul(rb, all[j])))) found = 1;
            if (ring.is_square(ring.add(ring.mul(ra, all[j]), bu))) found = 1;
        }
    }
    return found ? 1 : -1;
}

}  // namespace dp8::detail
