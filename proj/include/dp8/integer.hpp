#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dp8 {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Raised when an operation is called outside its mathematical domain
/// (zero where a unit is needed, composite where a prime is needed, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Least nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

/// Residue of the p-integral rational r modulo m; the denominator must be
/// invertible modulo m.
Integer mod(const Rational& r, const Integer& m);

Integer inverse_mod(const Integer& a, const Integer& m);
Integer pow_mod(Integer base, Integer exp, const Integer& m);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Exact integer square root; returns false when n is not a perfect square.
bool exact_sqrt(const Integer& n, Integer& root);
bool is_square(const Integer& n);
bool is_square(const Rational& r);

/// p-adic valuation of a nonzero integer or rational.
int valuation(const Integer& n, const Integer& p);
int valuation(const Rational& r, const Integer& p);

Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);
std::string to_string(const Integer& n);
std::string to_string(const Rational& r);

int sign(const Integer& n);
int sign(const Rational& r);

}  // namespace dp8
