#include "dp8/place.hpp"

#include "dp8/factor.hpp"

namespace dp8 {

Place Place::finite(const Integer& p) {
    if (!is_prime(p)) throw DomainError("Place: " + p.str() + " is not prime");
    Place v;
    v.prime_ = p;
    return v;
}

const Integer& Place::prime() const {
    if (!prime_) throw DomainError("Place: the real place has no prime");
    return *prime_;
}

std::string Place::label() const { return prime_ ? prime_->str() : "inf"; }

Place Place::parse(const std::string& label) {
    if (label == "inf") return real();
    return finite(parse_integer(label));
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
    if (!a.prime_ || !b.prime_) return bool(a.prime_) <=> bool(b.prime_);
    if (*a.prime_ < *b.prime_) return std::strong_ordering::less;
    if (*a.prime_ > *b.prime_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

QuadField::QuadField(const Integer& m) : m_(m) {
    if (m == 0 || m == 1) throw DomainError("QuadField: m must not be 0 or 1");
    if (squarefree_kernel(m) != m) throw DomainError("QuadField: m = " + m.str() + " is not square-free");
}

Integer QuadField::discriminant() const { return mod(m_, Integer(4)) == 1 ? m_ : Integer(4 * m_); }

std::string QuadField::label() const { return "Q(sqrt(" + m_.str() + "))"; }

std::string to_string(SplitType s) {
    switch (s) {
        case SplitType::Split: return "split";
        case SplitType::Inert: return "inert";
        case SplitType::Ramified: return "ram";
    }
    return "?";
}

SplitType prime_splitting(const Integer& p, const QuadField& field) {
    if (!is_prime(p)) throw DomainError("prime_splitting: " + p.str() + " is not prime");
    const Integer& m = field.m();
    if (p == 2) {
        Integer r = mod(m, Integer(8));
        if (r == 1) return SplitType::Split;
        if (r == 5) return SplitType::Inert;
        return SplitType::Ramified;
    }
    int l = legendre(m, p);
    if (l == 0) return SplitType::Ramified;
    return l == 1 ? SplitType::Split : SplitType::Inert;
}

PlaceK PlaceK::real_embedding(const QuadField& field, int index) {
    if (field.m() < 0) throw DomainError("PlaceK: imaginary quadratic field has no real places");
    if (index != 1 && index != 2) throw DomainError("PlaceK: real embedding index must be 1 or 2");
    PlaceK w;
    w.index_ = index;
    return w;
}

PlaceK PlaceK::prime_ideal(const QuadField& field, const Integer& p, int index) {
    PlaceK w;
    w.prime_ = p;
    w.split_ = prime_splitting(p, field);
    if (w.split_ != SplitType::Split) {
        w.index_ = 0;
        return w;
    }
    if (index != 1 && index != 2) throw DomainError("PlaceK: split ideal index must be 1 or 2");
    w.index_ = index;
    if (p == 2) {
        w.root_ = index == 1 ? 1 : 3;
    } else {
        Integer r = sqrt_mod_prime(field.m(), p);
        w.root_ = index == 1 ? r : Integer(p - r);
    }
    return w;
}

const Integer& PlaceK::prime() const {
    if (!prime_) throw DomainError("PlaceK: real embedding has no prime");
    return *prime_;
}

int PlaceK::residue_degree() const { return split_ == SplitType::Inert ? 2 : 1; }
int PlaceK::ramification_index() const { return split_ == SplitType::Ramified ? 2 : 1; }

Place PlaceK::below() const { return prime_ ? Place::finite(*prime_) : Place::real(); }

PlaceK PlaceK::conjugate() const {
    PlaceK w = *this;
    if (!prime_ || split_ == SplitType::Split) {
        w.index_ = 3 - index_;
        if (prime_) w.root_ = (*prime_ == 2) ? Integer(4 - root_) : Integer(*prime_ - root_);
    }
    return w;
}

std::string PlaceK::label() const {
    if (!prime_) return "inf" + std::to_string(index_);
    std::string s = prime_->str() + ":" + to_string(split_);
    if (split_ == SplitType::Split) s += ":" + std::to_string(index_);
    return s;
}

PlaceK PlaceK::parse(const QuadField& field, const std::string& label) {
    if (label == "inf1" || label == "inf2") return real_embedding(field, label[3] - '0');
    auto colon = label.find(':');
    if (colon == std::string::npos) throw DomainError("PlaceK: malformed label '" + label + "'");
    Integer p = parse_integer(label.substr(0, colon));
    int index = 0;
    if (label.size() >= 2 && label[label.size() - 2] == ':') index = label.back() - '0';
    PlaceK w = prime_ideal(field, p, index == 0 ? 1 : index);
    if (w.label() != label) throw DomainError("PlaceK: label '" + label + "' inconsistent with " + field.label());
    return w;
}

std::strong_ordering operator<=>(const PlaceK& a, const PlaceK& b) {
    if (!a.prime_ || !b.prime_) {
        if (bool(a.prime_) != bool(b.prime_)) return bool(a.prime_) <=> bool(b.prime_);
        return a.index_ <=> b.index_;
    }
    if (*a.prime_ < *b.prime_) return std::strong_ordering::less;
    if (*a.prime_ > *b.prime_) return std::strong_ordering::greater;
    return a.index_ <=> b.index_;
}

std::vector<PlaceK> places_above(const Place& v, const QuadField& field) {
    if (v.is_real()) {
        if (field.m() < 0) return {};
        return {PlaceK::real_embedding(field, 1), PlaceK::real_embedding(field, 2)};
    }
    if (prime_splitting(v.prime(), field) == SplitType::Split)
        return {PlaceK::prime_ideal(field, v.prime(), 1), PlaceK::prime_ideal(field, v.prime(), 2)};
    return {PlaceK::prime_ideal(field, v.prime())};
}

const QuadField& Field::quad() const {
    if (!quad_) throw DomainError("Field: Q is not a quadratic field");
    return *quad_;
}

std::string Field::label() const { return quad_ ? quad_->label() : "Q"; }

std::string label(const AnyPlace& w) {
    return std::visit([](const auto& x) { return x.label(); }, w);
}

bool is_real(const AnyPlace& w) {
    return std::visit([](const auto& x) { return x.is_real(); }, w);
}

}  // namespace dp8
