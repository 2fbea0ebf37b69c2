#include "dp8/local.hpp"

#include <algorithm>
#include <set>

#include "dp8/dyadic.hpp"
#include "dp8/factor.hpp"

namespace dp8 {

namespace detail {

PadicDigest digest(const Rational& x, const Integer& p) {
    if (x == 0) throw DomainError("digest: zero");
    Integer num = numerator_of(x), den = denominator_of(x);
    PadicDigest d;
    int vn = valuation(num, p), vd = valuation(den, p);
    d.valuation = vn - vd;
    for (int i = 0; i < vn; ++i) num /= p;
    for (int i = 0; i < vd; ++i) den /= p;
    Integer modulus = p == 2 ? Integer(8) : p;
    d.unit = mod(num * inverse_mod(den, modulus), modulus);
    return d;
}

int hilbert_from_digests(const PadicDigest& a, const PadicDigest& b, const Integer& p) {
    const int alpha = a.valuation & 1, beta = b.valuation & 1;
    if (p == 2) {
        auto eps = [](const Integer& u) { return static_cast<int>(((u - 1) / 2) % 2); };
        auto omega = [](const Integer& u) { return static_cast<int>(((u * u - 1) / 8) % 2); };
        int e = eps(a.unit) * eps(b.unit) + alpha * omega(b.unit) + beta * omega(a.unit);
        return (e % 2) ? -1 : 1;
    }
    int s = 1;
    if (alpha && beta && ((p - 1) / 2) % 2 == 1) s = -s;
    if (beta) s *= legendre(a.unit, p);
    if (alpha) s *= legendre(b.unit, p);
    return s;
}

Integer split_root(const QuadField& field, const PlaceK& w, int precision) {
    const Integer& p = w.prime();
    const Integer& m = field.m();
    if (p == 2) {
        // bit lifting; a root modulo 2^(k+1) is a 2-adic root modulo 2^k
        Integer r = 1, pk = 8;
        for (int k = 3; k <= precision + 1; ++k) {
            if (mod(r * r - m, pk * 2) != 0) r += pk / 2;
            pk *= 2;
        }
        Integer mod_out = Integer(1) << precision;
        r = mod(r, mod_out);
        if (mod(r, Integer(4)) != w.root()) r = mod(-r, mod_out);
        return r;
    }
    Integer pk = boost::multiprecision::pow(p, precision);
    Integer r = w.root();
    while (mod(r * r - m, pk) != 0) r = mod(r - (r * r - m) * inverse_mod(2 * r, pk), pk);
    return r;
}

PadicDigest split_image_digest(const Scalar& x, const QuadField& field, const PlaceK& w) {
    if (x.is_zero()) throw DomainError("split_image_digest: zero");
    const Integer& p = w.prime();
    Integer A, B, D;
    integral_parts(x, A, B, D);
    Integer n = A * A - field.m() * B * B;
    int precision = valuation(n, p) + (p == 2 ? 4 : 2);
    Integer pk = boost::multiprecision::pow(p, precision);
    Integer r = split_root(field, w, precision);
    Integer img = mod(A + B * r, pk);
    // v(img) <= v(n) < precision, so the unit part is known modulo 8 (or p)
    return digest(Rational(img, D), p);
}

}  // namespace detail

namespace {

using detail::DyadicResidueRing;

int real_sign_embedding(const Scalar& x, const QuadField& field, int index) {
    const Rational& a = x.a();
    Rational b = index == 1 ? x.b() : Rational(-x.b());
    if (a >= 0 && b >= 0) return (a == 0 && b == 0) ? 0 : 1;
    if (a <= 0 && b <= 0) return -1;
    Rational lhs = a * a, rhs = Rational(field.m()) * b * b;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sign(a) : sign(b);
}

Scalar uniformizer_odd(const QuadField& field, const PlaceK& w) {
    Field f = Field::quadratic(field);
    if (w.split_type() == SplitType::Inert) return Scalar(f, Rational(w.prime()), 0);
    return Scalar(f, 0, 1);
}

Scalar power(const Scalar& x, int e) {
    Scalar r(x.field(), 1, 0);
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= x;
    return e < 0 ? Scalar(x.field(), 1, 0) / r : r;
}

// Quadratic character of the residue field at an odd non-split place.
int residue_character(const Scalar& unit, const PlaceK& w) {
    const Integer& p = w.prime();
    if (w.split_type() == SplitType::Inert) return legendre(mod(unit.norm(), p), p);
    return legendre(mod(unit.a(), p), p);
}

int tame_symbol(const Scalar& a, const Scalar& b, const QuadField& field, const PlaceK& w) {
    int alpha = valuation_at(a, field, w), beta = valuation_at(b, field, w);
    Scalar pi = uniformizer_odd(field, w);
    Scalar ua = a / power(pi, alpha), ub = b / power(pi, beta);
    Scalar minus_one(Field::quadratic(field), -1, 0);
    int s = 1;
    if ((alpha & 1) && (beta & 1)) s *= residue_character(minus_one, w);
    if (beta & 1) s *= residue_character(ua, w);
    if (alpha & 1) s *= residue_character(ub, w);
    return s;
}

Scalar dyadic_normalize(const Scalar& x, const QuadField& field, const PlaceK& w, int& v) {
    v = valuation_at(x, field, w);
    Scalar pi = detail::dyadic_uniformizer(field, w);
    int k = v >= 0 ? v / 2 : -((-v + 1) / 2);
    Scalar pi2 = pi * pi;
    Scalar y = x;
    if (k > 0)
        y = y / power(pi2, k);
    else if (k < 0)
        y = y * power(pi2, -k);
    v -= 2 * k;
    return y;
}

void add_rational_primes(const Rational& r, std::set<Integer>& out) {
    if (r == 0) return;
    for (const auto& p : prime_divisors(numerator_of(r))) out.insert(p);
    for (const auto& p : prime_divisors(denominator_of(r))) out.insert(p);
}

}  // namespace

int hilbert_q(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw DomainError("hilbert_q: arguments must be nonzero");
    if (v.is_real()) return (a < 0 && b < 0) ? -1 : 1;
    const Integer& p = v.prime();
    return detail::hilbert_from_digests(detail::digest(a, p), detail::digest(b, p), p);
}

int hilbert_reciprocity_defect(const Rational& a, const Rational& b) {
    std::set<Integer> primes{2};
    add_rational_primes(a, primes);
    add_rational_primes(b, primes);
    int prod = hilbert_q(a, b, Place::real());
    for (const auto& p : primes) prod *= hilbert_q(a, b, Place::finite(p));
    return prod;
}

bool is_local_square(const Rational& x, const Place& v) {
    if (x == 0) throw DomainError("is_local_square: zero");
    if (v.is_real()) return x > 0;
    auto d = detail::digest(x, v.prime());
    if (d.valuation % 2) return false;
    if (v.prime() == 2) return d.unit == 1;
    return legendre(d.unit, v.prime()) == 1;
}

int valuation_at(const Scalar& x, const QuadField& field, const PlaceK& w) {
    if (x.is_zero()) throw DomainError("valuation_at: zero");
    if (w.is_real()) throw DomainError("valuation_at: real place");
    if (w.split_type() == SplitType::Split) return detail::split_image_digest(x, field, w).valuation;
    return valuation(x.in(Field::quadratic(field)).norm(), w.prime()) / w.residue_degree();
}

int hilbert_k(const Scalar& a0, const Scalar& b0, const QuadField& field, const PlaceK& w) {
    if (a0.is_zero() || b0.is_zero()) throw DomainError("hilbert_k: arguments must be nonzero");
    Field f = Field::quadratic(field);
    Scalar a = a0.in(f), b = b0.in(f);
    if (w.is_real())
        return (real_sign_embedding(a, field, w.index()) < 0 && real_sign_embedding(b, field, w.index()) < 0) ? -1 : 1;
    const Integer& p = w.prime();
    if (w.split_type() == SplitType::Split)
        return detail::hilbert_from_digests(detail::split_image_digest(a, field, w),
                                            detail::split_image_digest(b, field, w), p);
    if (p != 2) return tame_symbol(a, b, field, w);
    int va, vb;
    Scalar na = dyadic_normalize(a, field, w, va), nb = dyadic_normalize(b, field, w, vb);
    DyadicResidueRing ring(field);
    return detail::dyadic_hilbert_parallel(ring, na, nb);
}

bool is_local_square(const Scalar& x0, const QuadField& field, const PlaceK& w) {
    if (x0.is_zero()) throw DomainError("is_local_square: zero");
    Scalar x = x0.in(Field::quadratic(field));
    if (w.is_real()) return real_sign_embedding(x, field, w.index()) > 0;
    const Integer& p = w.prime();
    if (w.split_type() == SplitType::Split) {
        auto d = detail::split_image_digest(x, field, w);
        if (d.valuation % 2) return false;
        return p == 2 ? d.unit == 1 : legendre(d.unit, p) == 1;
    }
    if (p != 2) {
        int v = valuation_at(x, field, w);
        if (v % 2) return false;
        return residue_character(x / power(uniformizer_odd(field, w), v), w) == 1;
    }
    int v;
    Scalar n = dyadic_normalize(x, field, w, v);
    if (v != 0) return false;
    DyadicResidueRing ring(field);
    return ring.is_square(ring.reduce(n));
}

int real_sign(const Scalar& x, const Field& field, const AnyPlace& w) {
    if (const auto* v = std::get_if<Place>(&w)) {
        if (!v->is_real()) throw DomainError("real_sign: finite place");
        if (!x.is_rational()) throw DomainError("real_sign: irrational scalar at a place of Q");
        return sign(x.a());
    }
    const auto& wk = std::get<PlaceK>(w);
    if (!wk.is_real()) throw DomainError("real_sign: finite place");
    return real_sign_embedding(x.in(field), field.quad(), wk.index());
}

int hilbert(const Scalar& a, const Scalar& b, const Field& field, const AnyPlace& w) {
    if (const auto* v = std::get_if<Place>(&w)) {
        if (!field.is_rational()) throw DomainError("hilbert: place of Q used over " + field.label());
        return hilbert_q(a.a(), b.a(), *v);
    }
    return hilbert_k(a, b, field.quad(), std::get<PlaceK>(w));
}

bool is_local_square(const Scalar& x, const Field& field, const AnyPlace& w) {
    if (const auto* v = std::get_if<Place>(&w)) return is_local_square(x.a(), *v);
    return is_local_square(x, field.quad(), std::get<PlaceK>(w));
}

std::vector<AnyPlace> places_over(const Field& field, const std::vector<Place>& below) {
    std::vector<AnyPlace> out;
    for (const auto& v : below) {
        if (field.is_rational()) {
            out.emplace_back(v);
            continue;
        }
        for (auto& w : places_above(v, field.quad())) out.emplace_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<AnyPlace> relevant_places(const Field& field, std::span<const Scalar> entries) {
    std::set<Integer> primes{2};
    if (!field.is_rational()) add_rational_primes(Rational(field.quad().m()), primes);
    for (const auto& x : entries) {
        if (x.is_zero()) continue;
        if (field.is_rational()) {
            add_rational_primes(x.a(), primes);
            continue;
        }
        add_rational_primes(x.in(field).norm(), primes);
        for (const auto& p : prime_divisors(denominator_of(x.a()))) primes.insert(p);
        for (const auto& p : prime_divisors(denominator_of(x.b()))) primes.insert(p);
    }
    std::vector<Place> below{Place::real()};
    for (const auto& p : primes) below.push_back(Place::finite(p));
    return places_over(field, below);
}

}  // namespace dp8
