#pragma once

#include <string>

#include "dp8/integer.hpp"
#include "dp8/place.hpp"

namespace dp8 {

/// An element a + b*sqrt(m) of the base field. Over Q, b is always zero.
class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}
    Scalar(const Rational& a) : field_(Field::rationals()), a_(a) {}  // NOLINT: implicit from Q
    Scalar(long long a) : Scalar(Rational(a)) {}                        // NOLINT
    Scalar(const Field& field, const Rational& a, const Rational& b = 0);

    const Field& field() const { return field_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    Scalar conjugate() const;
    Rational norm() const;
    Rational trace() const { return 2 * a_; }

    /// Same value carried into another field containing it (b must be 0
    /// unless the fields coincide).
    Scalar in(const Field& field) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    /// "a" over Q, "a+br" over a quadratic field (r = sqrt m).
    std::string to_string() const;

private:
    Field field_;
    Rational a_ = 0;
    Rational b_ = 0;
};

/// Field of a binary operation; throws DomainError on incompatible fields.
Field common_field(const Scalar& x, const Scalar& y);

/// True iff x is a square in its base field.
bool is_global_square(const Scalar& x);

/// Canonical representative of the square class of x: over Q the square-free
/// integer; over L the element divided by the square of its content.
Scalar square_class_rep(const Scalar& x);

/// Common denominator D with x = (A + B sqrt m) / D for integers A, B.
void integral_parts(const Scalar& x, Integer& A, Integer& B, Integer& D);

/// Parses "a", "a/b", "a+br", "a-br", "br" (r = sqrt m) into the given field.
Scalar parse_scalar(const Field& field, const std::string& text);

}  // namespace dp8
