#include "dp8/conic.hpp"

#include <algorithm>
#include <set>

#include "dp8/factor.hpp"

namespace dp8 {

namespace {

void check_membership(const Field& field, const AnyPlace& w) {
    if (field.is_rational() != std::holds_alternative<Place>(w))
        throw DomainError("BrauerClass2: place " + label(w) + " is not a place of " + field.label());
}

Integer product(const std::vector<Integer>& xs) {
    Integer p = 1;
    for (const auto& x : xs) p *= x;
    return p;
}

}  // namespace

BrauerClass2::BrauerClass2(Field field, std::vector<AnyPlace> places) : field_(std::move(field)), places_(std::move(places)) {
    for (const auto& w : places_) check_membership(field_, w);
    std::sort(places_.begin(), places_.end());
    places_.erase(std::unique(places_.begin(), places_.end()), places_.end());
    if (places_.size() % 2) throw DomainError("reciprocity violation: odd number of ramified places");
}

bool BrauerClass2::contains(const AnyPlace& w) const { return std::binary_search(places_.begin(), places_.end(), w); }

BrauerClass2 BrauerClass2::operator+(const BrauerClass2& other) const {
    if (!(field_ == other.field_)) throw DomainError("BrauerClass2: base field mismatch");
    std::vector<AnyPlace> out;
    std::set_symmetric_difference(places_.begin(), places_.end(), other.places_.begin(), other.places_.end(),
                                  std::back_inserter(out));
    return BrauerClass2(field_, out);
}

BrauerClass2 BrauerClass2::conjugate() const {
    if (field_.is_rational()) return *this;
    std::vector<AnyPlace> out;
    for (const auto& w : places_) out.emplace_back(std::get<PlaceK>(w).conjugate());
    return BrauerClass2(field_, out);
}

std::vector<std::string> BrauerClass2::labels() const {
    std::vector<std::string> out;
    for (const auto& w : places_) out.push_back(label(w));
    return out;
}

std::string BrauerClass2::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < places_.size(); ++i) s += (i ? "," : "") + label(places_[i]);
    return s + "}";
}

bool operator<(const BrauerClass2& x, const BrauerClass2& y) {
    if (x.places_.size() != y.places_.size()) return x.places_.size() < y.places_.size();
    return x.places_ < y.places_;
}

BrauerClass2 brauer_class_q(const std::vector<Place>& places) {
    return BrauerClass2(Field::rationals(), std::vector<AnyPlace>(places.begin(), places.end()));
}

BrauerClass2 anisotropy_class(const QuadraticForm& q) {
    std::vector<AnyPlace> out;
    for (const auto& w : relevant_places(q))
        if (!is_isotropic_local(q, w)) out.push_back(w);
    return BrauerClass2(q.field(), out);
}

Conic conic_from_coeffs(const Field& field, const Scalar& a, const Scalar& b, const Scalar& c) {
    if (a.is_zero() || b.is_zero() || c.is_zero()) throw DomainError("conic: zero coefficient");
    std::array<Scalar, 3> coeffs{a.in(field), b.in(field), c.in(field)};
    QuadraticForm q = diagonal_form(field, {coeffs[0], coeffs[1], coeffs[2]});
    BrauerClass2 cls = anisotropy_class(q);
    return Conic(coeffs, q, cls);
}

Conic conic_from_coeffs(const Rational& a, const Rational& b, const Rational& c) {
    return conic_from_coeffs(Field::rationals(), Scalar(a), Scalar(b), Scalar(c));
}

Conic symbol_conic(const Field& field, const Scalar& a, const Scalar& b) {
    return conic_from_coeffs(field, a, b, Scalar(field, -1));
}

Conic Conic::base_change(const Field& field) const {
    return conic_from_coeffs(field, coeffs_[0], coeffs_[1], coeffs_[2]);
}

std::string Conic::to_string() const {
    return coeffs_[0].to_string() + "," + coeffs_[1].to_string() + "," + coeffs_[2].to_string();
}

bool isomorphic_conics(const Conic& c1, const Conic& c2) {
    if (!(c1.field() == c2.field())) throw DomainError("isomorphic_conics: base field mismatch");
    return c1.brauer_class() == c2.brauer_class();
}

namespace {

struct SymbolCandidate {
    Integer a, b;
};

bool symbol_order(const SymbolCandidate& x, const SymbolCandidate& y) {
    Integer px = abs(x.a * x.b), py = abs(y.a * y.b);
    if (px != py) return px < py;
    if (abs(x.a) != abs(y.a)) return abs(x.a) < abs(y.a);
    if (x.a != y.a) return x.a > y.a;
    if (abs(x.b) != abs(y.b)) return abs(x.b) < abs(y.b);
    return x.b > y.b;
}

bool symbol_has_class(const Integer& a, const Integer& b, const BrauerClass2& s) {
    std::set<Integer> primes{2};
    for (const auto& p : prime_divisors(a)) primes.insert(p);
    for (const auto& p : prime_divisors(b)) primes.insert(p);
    std::vector<AnyPlace> ram;
    if (hilbert_q(Rational(a), Rational(b), Place::real()) < 0) ram.emplace_back(Place::real());
    for (const auto& p : primes)
        if (hilbert_q(Rational(a), Rational(b), Place::finite(p)) < 0) ram.emplace_back(Place::finite(p));
    std::sort(ram.begin(), ram.end());
    return ram == s.places();
}

std::optional<Conic> search_level(const std::vector<Integer>& odd, const Integer& aux, const BrauerClass2& s) {
    std::vector<SymbolCandidate> cands;
    const std::size_t subsets = std::size_t(1) << odd.size();
    for (std::size_t t = 0; t < subsets; ++t) {
        std::vector<Integer> in, out;
        for (std::size_t i = 0; i < odd.size(); ++i) (t >> i & 1 ? in : out).push_back(odd[i]);
        const Integer pa = product(in), pb = product(out);
        for (int aux_in_a = 0; aux_in_a < (aux == 1 ? 1 : 2); ++aux_in_a)
            for (int sa : {1, -1})
                for (int sb : {1, -1})
                    for (int ea : {1, 2})
                        for (int eb : {1, 2}) {
                            Integer a = sa * ea * pa * (aux_in_a ? aux : Integer(1));
                            Integer b = sb * eb * pb * (aux_in_a ? Integer(1) : aux);
                            cands.push_back({a, b});
                        }
    }
    std::sort(cands.begin(), cands.end(), symbol_order);
    for (const auto& c : cands)
        if (symbol_has_class(c.a, c.b, s)) return symbol_conic(Field::rationals(), Scalar(Rational(c.a)), Scalar(Rational(c.b)));
    return std::nullopt;
}

}  // namespace

Conic conic_with_class(const BrauerClass2& s) {
    if (!s.field().is_rational()) throw DomainError("conic_with_class: classes over Q only");
    std::vector<Integer> odd;
    for (const auto& w : s.places()) {
        const auto& v = std::get<Place>(w);
        if (!v.is_real() && v.prime() != 2) odd.push_back(v.prime());
    }
    if (auto c = search_level(odd, 1, s)) return *c;
    for (Integer q = 3; q < 100000; q += 2) {
        if (!is_prime(q) || std::find(odd.begin(), odd.end(), q) != odd.end()) continue;
        if (auto c = search_level(odd, q, s)) return *c;
    }
    throw std::logic_error("conic_with_class: search exhausted for " + s.to_string());
}

Conic brauer_product(const Conic& c1, const Conic& c2) {
    if (!c1.field().is_rational() || !c2.field().is_rational()) throw DomainError("brauer_product: conics over Q only");
    return conic_with_class(c1.brauer_class() + c2.brauer_class());
}

QuadField common_splitting_field(const Conic& c1, const Conic& c2) {
    if (!c1.field().is_rational() || !c2.field().is_rational())
        throw DomainError("common_splitting_field: conics over Q only");
    std::set<AnyPlace> s(c1.brauer_class().places().begin(), c1.brauer_class().places().end());
    s.insert(c2.brauer_class().places().begin(), c2.brauer_class().places().end());
    if (s.empty()) return QuadField(-1);
    const bool need_imaginary = s.count(Place::real()) > 0;
    for (Integer n = 1; n < 1000000; ++n)
        for (int sg : {-1, 1}) {
            const Integer m = sg * n;
            if (m == 1 || (need_imaginary && m > 0) || squarefree_kernel(m) != m) continue;
            QuadField k(m);
            bool ok = true;
            for (const auto& w : s) {
                const auto& v = std::get<Place>(w);
                if (!v.is_real() && prime_splitting(v.prime(), k) == SplitType::Split) {
                    ok = false;
                    break;
                }
            }
            if (ok) return k;
        }
    throw std::logic_error("common_splitting_field: search exhausted");
}

Conic galois_conjugate(const Conic& c) {
    if (c.field().is_rational()) throw DomainError("galois_conjugate: conic over Q");
    const auto& k = c.coeffs();
    return conic_from_coeffs(c.field(), k[0].conjugate(), k[1].conjugate(), k[2].conjugate());
}

std::optional<Conic> is_descended(const Conic& c) {
    if (c.field().is_rational()) throw DomainError("is_descended: conic over Q");
    const BrauerClass2& cls = c.brauer_class();
    if (!(cls.conjugate() == cls)) return std::nullopt;
    const QuadField& k = c.field().quad();
    std::vector<Place> below;
    for (const auto& w : cls.places()) {
        const auto& pk = std::get<PlaceK>(w);
        if (!pk.is_real() && pk.split_type() != SplitType::Split) return std::nullopt;
        if (pk.index() == 1) below.push_back(pk.below());
    }
    // An odd set is completed by a place that does not split in L.
    if (below.size() % 2) {
        if (k.m() < 0) {
            below.insert(below.begin(), Place::real());
        } else {
            for (Integer p = 2;; ++p)
                if (is_prime(p) && prime_splitting(p, k) != SplitType::Split) {
                    below.push_back(Place::finite(p));
                    break;
                }
        }
    }
    Conic n = conic_with_class(brauer_class_q(below));
    if (!(n.base_change(c.field()).brauer_class() == cls))
        throw std::logic_error("is_descended: base change of " + n.to_string() + " does not match " + cls.to_string());
    return n;
}

BrauerSubgroup::BrauerSubgroup(Field field, const std::vector<BrauerClass2>& gens) : field_(std::move(field)) {
    elements_.push_back(BrauerClass2(field_));
    for (const auto& g : gens) {
        if (!(g.field() == field_)) throw DomainError("BrauerSubgroup: base field mismatch");
        if (contains(g)) continue;
        generators_.push_back(g);
        std::vector<BrauerClass2> next = elements_;
        for (const auto& e : elements_) next.push_back(e + g);
        std::sort(next.begin(), next.end());
        elements_ = next;
    }
}

bool BrauerSubgroup::contains(const BrauerClass2& b) const {
    return std::find(elements_.begin(), elements_.end(), b) != elements_.end();
}

}  // namespace dp8
