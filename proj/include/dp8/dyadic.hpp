#pragma once

#include <bitset>
#include <cstdint>
#include <vector>

#include "dp8/place.hpp"
#include "dp8/scalar.hpp"

namespace dp8::detail {

/// The residue ring O_w / 32 O_w at the single place w of Q(sqrt m) above 2
/// when 2 does not split (m = 2, 3, 5, 6, 7 mod 8). As a ring it is
/// (Z/32)[w] with w = sqrt m, or w = (1 + sqrt m)/2 when m = 5 mod 8.
/// 32 = pi^(5e), which is the working precision of every dyadic decision.
class DyadicResidueRing {
public:
    static constexpr int kModulus = 32;
    static constexpr int kSize = kModulus * kModulus;
    using Elem = std::uint16_t;

    explicit DyadicResidueRing(const QuadField& field);

    /// Reduction of an element integral at w.
    Elem reduce(const Scalar& x) const;
    Elem add(Elem x, Elem y) const;
    Elem mul(Elem x, Elem y) const;
    bool is_unit(Elem x) const { return units_[x]; }
    bool is_square(Elem x) const { return squares_[x]; }
    Elem square(Elem x) const { return square_of_[x]; }
    /// Distinct squares of units, and distinct squares of all elements.
    const std::vector<Elem>& unit_squares() const { return unit_squares_; }
    const std::vector<Elem>& all_squares() const { return all_squares_; }

private:
    Integer m_;
    bool half_basis_;  // w = (1 + sqrt m)/2
    int omega_sq_const_ = 0;
    std::bitset<kSize> units_;
    std::bitset<kSize> squares_;
    std::vector<Elem> square_of_;
    std::vector<Elem> unit_squares_;
    std::vector<Elem> all_squares_;
};

/// Uniformizer of the non-split place above 2.
Scalar dyadic_uniformizer(const QuadField& field, const PlaceK& w);

/// Hilbert symbol at a non-split dyadic place for a, b of valuation 0 or 1:
/// searches x, y in O/32, one of them a unit, with a x^2 + b y^2 a square
/// modulo 32. Only the distinct values of x^2 and y^2 are visited. Serial reference and OpenMP kernel give identical answers.
int dyadic_hilbert_serial(const DyadicResidueRing& ring, const Scalar& a, const Scalar& b);
int dyadic_hilbert_parallel(const DyadicResidueRing& ring, const Scalar& a, const Scalar& b);

}  // namespace dp8::detail
