#include "dp8/scalar.hpp"

#include "dp8/factor.hpp"

namespace dp8 {

Scalar::Scalar(const Field& field, const Rational& a, const Rational& b) : field_(field), a_(a), b_(b) {
    if (field.is_rational() && b != 0) throw DomainError("Scalar: irrational part over Q");
}

Field common_field(const Scalar& x, const Scalar& y) {
    if (x.field() == y.field()) return x.field();
    if (x.field().is_rational() && x.is_rational()) return y.field();
    if (y.field().is_rational() && y.is_rational()) return x.field();
    throw DomainError("Scalar: elements of " + x.field().label() + " and " + y.field().label() + " do not mix");
}

Scalar Scalar::conjugate() const { return Scalar(field_, a_, -b_); }

Rational Scalar::norm() const {
    if (field_.is_rational()) return a_ * a_;
    return a_ * a_ - Rational(field_.quad().m()) * b_ * b_;
}

Scalar Scalar::in(const Field& field) const {
    if (field == field_) return *this;
    if (b_ != 0) throw DomainError("Scalar: cannot move an irrational element between fields");
    return Scalar(field, a_, 0);
}

Scalar Scalar::operator-() const { return Scalar(field_, -a_, -b_); }

Scalar operator+(const Scalar& x, const Scalar& y) {
    return Scalar(common_field(x, y), x.a_ + y.a_, x.b_ + y.b_);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    return Scalar(common_field(x, y), x.a_ - y.a_, x.b_ - y.b_);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    Field f = common_field(x, y);
    if (f.is_rational()) return Scalar(x.a_ * y.a_);
    Rational m(f.quad().m());
    return Scalar(f, x.a_ * y.a_ + m * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
    if (y.is_zero()) throw DomainError("Scalar: division by zero");
    Field f = common_field(x, y);
    Rational n = y.in(f).norm();
    Scalar num = x.in(f) * y.in(f).conjugate();
    return Scalar(f, num.a_ / n, num.b_ / n);
}

std::string Scalar::to_string() const {
    if (field_.is_rational() || b_ == 0) return dp8::to_string(a_);
    std::string s;
    if (a_ != 0) s = dp8::to_string(a_);
    std::string bs = dp8::to_string(b_);
    if (a_ != 0 && b_ > 0) s += "+";
    if (b_ == 1)
        s += "r";
    else if (b_ == -1)
        s += "-r";
    else
        s += bs + "r";
    return s;
}

bool is_global_square(const Scalar& x) {
    if (x.is_zero()) return true;
    if (x.field().is_rational() || x.b() == 0) {
        if (x.field().is_rational()) return x.a() > 0 && is_square(x.a());
        // a rational a is a square in Q(sqrt m) iff a or a*m is a rational square
        Rational am = x.a() * Rational(x.field().quad().m());
        return (x.a() > 0 && is_square(x.a())) || (am > 0 && is_square(am));
    }
    // (c + d r)^2 = a + b r  =>  c^2 + m d^2 = a, 2cd = b, c^2 - m d^2 = +-sqrt(N)
    Rational n = x.norm();
    if (n < 0 || !is_square(n)) return false;
    Rational s(boost::multiprecision::sqrt(numerator_of(n)), boost::multiprecision::sqrt(denominator_of(n)));
    for (int sg : {1, -1}) {
        Rational c2 = (x.a() + sg * s) / 2;
        if (c2 > 0 && is_square(c2)) return true;
    }
    return false;
}

void integral_parts(const Scalar& x, Integer& A, Integer& B, Integer& D) {
    D = lcm(denominator_of(x.a()), denominator_of(x.b()));
    A = numerator_of(x.a()) * (D / denominator_of(x.a()));
    B = numerator_of(x.b()) * (D / denominator_of(x.b()));
}

Scalar square_class_rep(const Scalar& x) {
    if (x.is_zero()) throw DomainError("square_class_rep: zero");
    if (x.is_rational() && x.field().is_rational()) return Scalar(Rational(squarefree_class(x.a())));
    Integer A, B, D;
    integral_parts(x, A, B, D);
    // x * D^2 = (A + B r) * D, then strip the square part of the content
    A *= D;
    B *= D;
    Integer g = gcd(A, B);
    if (g < 0) g = -g;
    Integer s = 1;
    for (auto& pp : factorize(g))
        for (int i = 0; i < pp.exponent / 2; ++i) s *= pp.prime;
    Integer s2 = s * s;
    return Scalar(x.field(), Rational(A / s2), Rational(B / s2));
}

Scalar parse_scalar(const Field& field, const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (c != ' ') text += c;
    if (text.empty()) throw DomainError("empty scalar literal");
    auto r = text.find('r');
    if (r == std::string::npos) return Scalar(field, parse_rational(text));
    if (field.is_rational()) throw DomainError("scalar '" + raw + "' uses r over Q");
    if (r != text.size() - 1) throw DomainError("malformed scalar '" + raw + "'");
    // split at the last sign that is not at position 0 and not after '/'
    std::size_t split = std::string::npos;
    for (std::size_t i = r; i-- > 1;)
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != '/') {
            split = i;
            break;
        }
    std::string a_part = split == std::string::npos ? "0" : text.substr(0, split);
    std::string b_part = split == std::string::npos ? text.substr(0, r) : text.substr(split, r - split);
    if (b_part.empty() || b_part == "+") b_part = "1";
    if (b_part == "-") b_part = "-1";
    if (b_part[0] == '+') b_part = b_part.substr(1);
    return Scalar(field, parse_rational(a_part), parse_rational(b_part));
}

}  // namespace dp8
