#include "dp8/surface.hpp"

#include <algorithm>
#include <cmath>

namespace dp8 {

namespace {

const Field kQ = Field::rationals();

Rational rational_root(const Rational& r) {
    return Rational(boost::multiprecision::sqrt(numerator_of(r)), boost::multiprecision::sqrt(denominator_of(r)));
}

bool same_pair(const BrauerClass2& a1, const BrauerClass2& a2, const BrauerClass2& b1, const BrauerClass2& b2) {
    return (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
}

QuadraticForm norm_form(const Rational& a, const Rational& b, const Rational& d) {
    return diagonal_form({Rational(1), -a, -b, a * b * d});
}

// Symbol (a, b) of the conic a x^2 + b y^2 + c z^2 = 0, i.e. (-ac, -bc).
std::pair<Rational, Rational> symbol_of(const Conic& c) {
    const auto& k = c.coeffs();
    return {(-(k[0] * k[2])).a(), (-(k[1] * k[2])).a()};
}

}  // namespace

DP8Surface DP8Surface::product(const Conic& c1, const Conic& c2) {
    if (!c1.field().is_rational() || !c2.field().is_rational())
        throw DomainError("product: both conics must be defined over Q");
    return DP8Surface({c1, c2}, std::nullopt);
}

DP8Surface DP8Surface::weil_restriction(const Conic& c) {
    if (c.field().is_rational()) throw DomainError("weil_restriction: conic must be defined over a quadratic field");
    return DP8Surface({c}, c.field().quad());
}

const Conic& DP8Surface::c1() const {
    if (!is_product()) throw DomainError("surface is not a product");
    return conics_[0];
}

const Conic& DP8Surface::c2() const {
    if (!is_product()) throw DomainError("surface is not a product");
    return conics_[1];
}

const Conic& DP8Surface::conic() const {
    if (is_product()) throw DomainError("surface is not a Weil restriction");
    return conics_[0];
}

const QuadField& DP8Surface::field() const {
    if (is_product()) throw DomainError("already split");
    return *field_;
}

QuadricClassification from_quadric(const QuadraticForm& q) {
    if (!q.field().is_rational()) throw DomainError("from_quadric: form must be defined over Q");
    if (q.rank() != 4) throw DomainError("from_quadric: rank must be 4");
    if (is_isotropic(q)) return {true, std::nullopt};
    const Rational d = discriminant(q).a();
    if (d == 1) {
        Conic c = conic_with_class(anisotropy_class(q));
        return {false, DP8Surface::product(c, c)};
    }
    // Over L = Q(sqrt d), q is similar to the norm form of (-a1 a2, -a1 a3).
    const auto& a = q.diag();
    Field l = Field::quadratic(QuadField(numerator_of(d)));
    Conic c = symbol_conic(l, Scalar(l, (-(a[0] * a[1])).a()), Scalar(l, (-(a[0] * a[2])).a()));
    std::vector<Scalar> over_l;
    for (const auto& x : a) over_l.push_back(x.in(l));
    BrauerClass2 expected = anisotropy_class(diagonal_form(l, over_l));
    if (!(expected == c.brauer_class()))
        throw std::logic_error("from_quadric: conic class " + c.brauer_class().to_string() +
                               " differs from anisotropy class " + expected.to_string());
    return {false, DP8Surface::weil_restriction(c)};
}

bool is_pointless(const DP8Surface& x) {
    if (x.is_product()) return !x.c1().is_trivial() || !x.c2().is_trivial();
    return !x.conic().is_trivial();
}

int picard_rank(const DP8Surface& x) { return x.is_product() ? 2 : 1; }

QuadField splitting_field(const DP8Surface& x) { return x.field(); }

AmitsurGroup amitsur(const DP8Surface& x) {
    if (x.is_product()) {
        BrauerSubgroup g(kQ, {x.c1().brauer_class(), x.c2().brauer_class()});
        return {g.order(), g};
    }
    if (is_descended(x.conic())) return {1, BrauerSubgroup(kQ, {})};
    return {2, std::nullopt};
}

BrauerSubgroup am_over_splitting(const DP8Surface& x) {
    const Conic& c = x.conic();
    return BrauerSubgroup(c.field(), {c.brauer_class(), galois_conjugate(c).brauer_class()});
}

std::optional<QuadraticForm> is_quadric(const DP8Surface& x) {
    if (x.is_product()) {
        const BrauerClass2& b = x.c1().brauer_class();
        if (!(b == x.c2().brauer_class())) return std::nullopt;
        if (b.is_trivial()) return diagonal_form({Rational(1), Rational(-1), Rational(1), Rational(-1)});
        auto [s, t] = symbol_of(conic_with_class(b));
        QuadraticForm q = norm_form(s, t, 1);
        auto back = from_quadric(q);
        if (back.pointed || !isomorphic(*back.surface, x))
            throw std::logic_error("is_quadric: norm form " + q.to_string() + " does not reproduce the surface");
        return q;
    }
    auto n = is_descended(x.conic());
    if (!n) return std::nullopt;
    auto [s, t] = symbol_of(*n);
    QuadraticForm q = norm_form(s, t, Rational(x.field().m()));
    auto back = from_quadric(q);
    const bool ok = back.pointed ? !is_pointless(x) : (is_pointless(x) && isomorphic(*back.surface, x));
    if (!ok) throw std::logic_error("is_quadric: form " + q.to_string() + " does not reproduce the surface");
    return q;
}

bool isomorphic(const DP8Surface& x1, const DP8Surface& x2) {
    if (x1.is_product() != x2.is_product()) return false;
    if (x1.is_product())
        return same_pair(x1.c1().brauer_class(), x1.c2().brauer_class(), x2.c1().brauer_class(),
                         x2.c2().brauer_class());
    if (!(x1.field() == x2.field())) return false;
    return am_over_splitting(x1) == am_over_splitting(x2);
}

bool birational(const DP8Surface& x1, const DP8Surface& x2) {
    const bool p1 = is_pointless(x1), p2 = is_pointless(x2);
    if (!p1 && !p2) return true;
    if (p1 != p2) return false;
    if (picard_rank(x1) != picard_rank(x2)) return false;
    if (picard_rank(x1) == 1) return isomorphic(x1, x2);
    return *amitsur(x1).subgroup == *amitsur(x2).subgroup;
}

bool birational(const QuadricClassification& x1, const QuadricClassification& x2) {
    const bool p1 = !x1.pointed && is_pointless(*x1.surface);
    const bool p2 = !x2.pointed && is_pointless(*x2.surface);
    if (!p1 && !p2) return true;
    if (p1 != p2) return false;
    return birational(*x1.surface, *x2.surface);
}

std::string to_string(ModelKind k) {
    switch (k) {
        case ModelKind::Product: return "product";
        case ModelKind::SelfProduct: return "self_product";
        case ModelKind::ConicTimesLine: return "conic_times_line";
        case ModelKind::Hirzebruch: return "hirzebruch_form";
        case ModelKind::WeilRes: return "weil_restriction";
    }
    return "unknown";
}

BrauerSubgroup model_amitsur(const MinimalModel& m) {
    if (m.kind == ModelKind::WeilRes) throw DomainError("model_amitsur: Picard rank one model");
    return BrauerSubgroup(kQ, m.classes);
}

std::vector<MinimalModel> minimal_models(const DP8Surface& x, int k_max) {
    if (k_max < 1) throw DomainError("minimal_models: k_max must be positive");
    if (!is_pointless(x)) throw Refusal("rational: minimal models are P^2 and all its minimal forms");
    if (!x.is_product()) return {MinimalModel{ModelKind::WeilRes, {x.conic().brauer_class()}, 0, x.field()}};
    const BrauerClass2 &b1 = x.c1().brauer_class(), &b2 = x.c2().brauer_class();
    if (!b1.is_trivial() && !b2.is_trivial() && !(b1 == b2)) {
        const BrauerClass2 b3 = b1 + b2;
        return {MinimalModel{ModelKind::Product, {b1, b2}, 0, std::nullopt},
                MinimalModel{ModelKind::Product, {b1, b3}, 0, std::nullopt},
                MinimalModel{ModelKind::Product, {b2, b3}, 0, std::nullopt}};
    }
    const BrauerClass2 b = b1.is_trivial() ? b2 : b1;
    std::vector<MinimalModel> out{MinimalModel{ModelKind::SelfProduct, {b}, 0, std::nullopt},
                                  MinimalModel{ModelKind::ConicTimesLine, {b}, 0, std::nullopt}};
    for (int k = 1; k <= k_max; ++k) out.push_back(MinimalModel{ModelKind::Hirzebruch, {b}, k, std::nullopt});
    return out;
}

std::optional<Scalar> global_sqrt(const Scalar& x) {
    const Field& f = x.field();
    if (x.is_zero()) return x;
    if (x.b() == 0) {
        if (x.a() > 0 && is_square(x.a())) return Scalar(f, rational_root(x.a()));
        if (f.is_rational()) return std::nullopt;
        const Rational over_m = x.a() / Rational(f.quad().m());
        if (over_m > 0 && is_square(over_m)) return Scalar(f, 0, rational_root(over_m));
        return std::nullopt;
    }
    // (c + d r)^2 = a + b r with c^2 = (a +- sqrt N) / 2, d = b / 2c
    const Rational n = x.norm();
    if (n < 0 || !is_square(n)) return std::nullopt;
    const Rational s = rational_root(n);
    for (int sg : {1, -1}) {
        const Rational c2 = (x.a() + sg * s) / 2;
        if (c2 > 0 && is_square(c2)) {
            const Rational c = rational_root(c2);
            return Scalar(f, c, x.b() / (2 * c));
        }
    }
    return std::nullopt;
}

std::optional<PointWitness> rational_point_scan(const DP8Surface& x, long long height) {
    if (height < 1) throw DomainError("rational_point_scan: height must be positive");
    PointWitness out;
    if (x.is_product()) {
        for (const Conic* c : {&x.c1(), &x.c2()}) {
            auto w = oracle_point_search(c->form(), height);
            if (!w) return std::nullopt;
            std::vector<Scalar> pt;
            for (const auto& v : *w) pt.emplace_back(Rational(v));
            out.points.push_back(pt);
        }
        return out;
    }
    const double cells = std::pow(2.0 * static_cast<double>(height) + 1, 4);
    if (cells > 5e6) throw DomainError("rational_point_scan: height too large for a Weil restriction");
    const Conic& c = x.conic();
    const Field& f = c.field();
    const auto& k = c.coeffs();
    std::vector<Scalar> values;
    for (long long a = -height; a <= height; ++a)
        for (long long b = -height; b <= height; ++b) values.emplace_back(f, Rational(a), Rational(b));
    for (const auto& u : values)
        for (const auto& v : values) {
            if (u.is_zero() && v.is_zero()) continue;
            auto z = global_sqrt(-(k[0] * u * u + k[1] * v * v) / k[2]);
            if (!z) continue;
            if (!(k[0] * u * u + k[1] * v * v + k[2] * *z * *z).is_zero())
                throw std::logic_error("rational_point_scan: witness does not vanish");
            out.points.push_back({u, v, *z});
            return out;
        }
    return std::nullopt;
}

}  // namespace dp8
