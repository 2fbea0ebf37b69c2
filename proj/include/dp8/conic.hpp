#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dp8/qform.hpp"

namespace dp8 {

/// A 2-torsion Brauer class of Q or of a quadratic field, stored as its
/// (even, canonically ordered) set of ramified places.
class BrauerClass2 {
public:
    explicit BrauerClass2(Field field, std::vector<AnyPlace> places = {});

    const Field& field() const { return field_; }
    const std::vector<AnyPlace>& places() const { return places_; }
    bool is_trivial() const { return places_.empty(); }
    bool contains(const AnyPlace& w) const;

    /// Group law: symmetric difference.
    BrauerClass2 operator+(const BrauerClass2& other) const;

    /// Image under the nontrivial automorphism of a quadratic base field.
    BrauerClass2 conjugate() const;

    std::vector<std::string> labels() const;
    std::string to_string() const;

    friend bool operator==(const BrauerClass2& x, const BrauerClass2& y) {
        return x.field_ == y.field_ && x.places_ == y.places_;
    }
    friend bool operator<(const BrauerClass2& x, const BrauerClass2& y);

private:
    Field field_;
    std::vector<AnyPlace> places_;
};

/// Class over Q from a list of places; throws on odd cardinality.
BrauerClass2 brauer_class_q(const std::vector<Place>& places);

/// The conic a x^2 + b y^2 + c z^2 = 0 with its Brauer class.
class Conic {
public:
    const Field& field() const { return form_.field(); }
    const std::array<Scalar, 3>& coeffs() const { return coeffs_; }
    const QuadraticForm& form() const { return form_; }
    const BrauerClass2& brauer_class() const { return class_; }
    bool is_trivial() const { return class_.is_trivial(); }

    /// The same equation over a quadratic field containing the coefficients.
    Conic base_change(const Field& field) const;

    /// "a,b,c".
    std::string to_string() const;

private:
    friend Conic conic_from_coeffs(const Field& field, const Scalar& a, const Scalar& b, const Scalar& c);
    Conic(std::array<Scalar, 3> coeffs, QuadraticForm form, BrauerClass2 cls)
        : coeffs_(std::move(coeffs)), form_(std::move(form)), class_(std::move(cls)) {}

    std::array<Scalar, 3> coeffs_;
    QuadraticForm form_;
    BrauerClass2 class_;
};

/// Throws DomainError on a zero coefficient.
Conic conic_from_coeffs(const Field& field, const Scalar& a, const Scalar& b, const Scalar& c);
Conic conic_from_coeffs(const Rational& a, const Rational& b, const Rational& c);

/// The conic of the quaternion symbol (a, b): a x^2 + b y^2 - z^2 = 0.
Conic symbol_conic(const Field& field, const Scalar& a, const Scalar& b);

inline const BrauerClass2& brauer_class(const Conic& c) { return c.brauer_class(); }

/// Places where the ternary form is anisotropic.
BrauerClass2 anisotropy_class(const QuadraticForm& q);

bool isomorphic_conics(const Conic& c1, const Conic& c2);

/// A conic over Q with the given class. Searches symbols (a, b) built from
/// -1, 2, the odd primes of S and at most one auxiliary prime, ordered by
/// |ab|, then |a|, then |b| (positive first), and verifies the class.
Conic conic_with_class(const BrauerClass2& s);

/// Conic over Q whose class is the sum of the two classes.
Conic brauer_product(const Conic& c1, const Conic& c2);

/// Q(sqrt m) over which both conics acquire points: smallest |m| (negative
/// first) such that no place of either class splits. Q(sqrt -1) when both
/// conics are trivial.
QuadField common_splitting_field(const Conic& c1, const Conic& c2);

/// Coefficientwise conjugate of a conic over a quadratic field.
Conic galois_conjugate(const Conic& c);

/// A conic N over Q with N_L isomorphic to C, if one exists.
std::optional<Conic> is_descended(const Conic& c);

/// Subgroup of Br[2] generated by at most two classes.
class BrauerSubgroup {
public:
    BrauerSubgroup(Field field, const std::vector<BrauerClass2>& generators);

    const Field& field() const { return field_; }
    /// A minimal generating set drawn from the given generators.
    const std::vector<BrauerClass2>& generators() const { return generators_; }
    /// All elements, sorted; the trivial class first.
    const std::vector<BrauerClass2>& elements() const { return elements_; }
    int order() const { return static_cast<int>(elements_.size()); }
    bool contains(const BrauerClass2& b) const;

    friend bool operator==(const BrauerSubgroup& x, const BrauerSubgroup& y) {
        return x.field_ == y.field_ && x.elements_ == y.elements_;
    }

private:
    Field field_;
    std::vector<BrauerClass2> generators_;
    std::vector<BrauerClass2> elements_;
};

}  // namespace dp8
