#include "dp8/integer.hpp"

#include <boost/multiprecision/integer.hpp>

namespace dp8 {

Integer mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

Integer mod(const Rational& r, const Integer& m) {
    Integer num = numerator_of(r);
    Integer den = denominator_of(r);
    return mod(num * inverse_mod(den, m), m);
}

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    Integer g = gcd(a, b);
    Integer r = (a / g) * b;
    return r < 0 ? Integer(-r) : r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer old_r = mod(a, m), r = m;
    Integer old_s = 1, s = 0;
    while (r != 0) {
        Integer q = old_r / r;
        Integer t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw DomainError("inverse_mod: element not invertible");
    return mod(old_s, m);
}

Integer pow_mod(Integer base, Integer exp, const Integer& m) {
    return boost::multiprecision::powm(mod(base, m), exp, m);
}

bool exact_sqrt(const Integer& n, Integer& root) {
    if (n < 0) return false;
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    root = r;
    return true;
}

bool is_square(const Integer& n) {
    Integer r;
    return exact_sqrt(n, r);
}

bool is_square(const Rational& r) {
    return is_square(numerator_of(r)) && is_square(denominator_of(r));
}

int valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw DomainError("valuation of zero");
    Integer m = n < 0 ? Integer(-n) : n;
    int v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

int valuation(const Rational& r, const Integer& p) {
    return valuation(numerator_of(r), p) - valuation(denominator_of(r), p);
}

Integer parse_integer(const std::string& text) {
    if (text.empty()) throw DomainError("empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw DomainError("malformed integer '" + text + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9') throw DomainError("malformed integer '" + text + "'");
    Integer v(text.substr(i));
    return text[0] == '-' ? Integer(-v) : v;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& r) {
    if (denominator_of(r) == 1) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

int sign(const Integer& n) { return n > 0 ? 1 : (n < 0 ? -1 : 0); }
int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace dp8
