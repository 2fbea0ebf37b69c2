#pragma once

#include <span>
#include <vector>

#include "dp8/place.hpp"
#include "dp8/scalar.hpp"

namespace dp8 {

/// Local Hilbert symbol (a, b)_v over the completion of Q at v.
int hilbert_q(const Rational& a, const Rational& b, const Place& v);

/// Product of hilbert_q(a, b, v) over inf and the primes dividing 2ab.
/// Always +1 (Hilbert reciprocity); exposed as a global consistency check.
int hilbert_reciprocity_defect(const Rational& a, const Rational& b);

/// Local Hilbert symbol over the completion of Q(sqrt m) at w.
int hilbert_k(const Scalar& a, const Scalar& b, const QuadField& field, const PlaceK& w);

bool is_local_square(const Rational& x, const Place& v);
bool is_local_square(const Scalar& x, const QuadField& field, const PlaceK& w);

/// Normalized valuation at a finite place of Q(sqrt m).
int valuation_at(const Scalar& x, const QuadField& field, const PlaceK& w);

/// Dispatch on the base field of the scalars.
int hilbert(const Scalar& a, const Scalar& b, const Field& field, const AnyPlace& w);
bool is_local_square(const Scalar& x, const Field& field, const AnyPlace& w);

/// Sign of x at a real place (real place of Q or real embedding of L).
int real_sign(const Scalar& x, const Field& field, const AnyPlace& w);

/// Places at which symbols built from `entries` can be nontrivial: the real
/// place(s), the places above 2, above the primes of disc(L), and above every
/// prime dividing a numerator, denominator or norm of an entry. Sorted.
std::vector<AnyPlace> relevant_places(const Field& field, std::span<const Scalar> entries);

/// Every place of Q(sqrt m) above the given rational places, in canonical order.
std::vector<AnyPlace> places_over(const Field& field, const std::vector<Place>& below);

namespace detail {

/// Unit part and valuation of an element of Q_p, as much of the unit as the
/// Hilbert symbol needs: modulo p for odd p, modulo 8 for p = 2.
struct PadicDigest {
    int valuation = 0;
    Integer unit;
};

PadicDigest digest(const Rational& x, const Integer& p);
int hilbert_from_digests(const PadicDigest& a, const PadicDigest& b, const Integer& p);

/// Image of x in Q_p under the embedding attached to the split place w.
PadicDigest split_image_digest(const Scalar& x, const QuadField& field, const PlaceK& w);

/// p-adic square root of m modulo p^precision matching the residue of w.
Integer split_root(const QuadField& field, const PlaceK& w, int precision);

}  // namespace detail

}  // namespace dp8
