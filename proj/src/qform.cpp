#include "dp8/qform.hpp"

#include <algorithm>
#include <set>

#include "dp8/factor.hpp"

namespace dp8 {

namespace {

Matrix identity(const Field& f, std::size_t n) {
    Matrix m(n, std::vector<Scalar>(n, Scalar(f, 0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(f, 1);
    return m;
}

Rational pivot_size(const Scalar& x) { return abs(x.a()) + abs(x.b()); }

Rational rational_sqrt(const Rational& r) {
    Integer n, d;
    if (r < 0 || !exact_sqrt(numerator_of(r), n) || !exact_sqrt(denominator_of(r), d))
        throw DomainError("rational_sqrt: not a square");
    return Rational(n, d);
}

Scalar reduce_entry(const Scalar& x) {
    Scalar rep = square_class_rep(x);
    return Scalar(x.field(), rep.a(), rep.b());
}

// e_j <- e_j + c e_i applied to a symmetric matrix and the basis columns
void add_multiple(Matrix& g, Matrix& p, std::size_t i, std::size_t j, const Scalar& c) {
    const std::size_t n = g.size();
    for (std::size_t r = 0; r < n; ++r) g[r][j] += c * g[r][i];
    for (std::size_t r = 0; r < n; ++r) g[j][r] += c * g[i][r];
    for (std::size_t r = 0; r < n; ++r) p[r][j] += c * p[r][i];
}

void swap_index(Matrix& g, Matrix& p, std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(g[i], g[j]);
    for (auto& row : g) std::swap(row[i], row[j]);
    for (auto& row : p) std::swap(row[i], row[j]);
}

std::vector<Scalar> combined_entries(const QuadraticForm& a, const QuadraticForm& b) {
    std::vector<Scalar> e = a.diag();
    e.insert(e.end(), b.diag().begin(), b.diag().end());
    return e;
}

bool is_real_place(const AnyPlace& w) { return is_real(w); }

}  // namespace

Matrix congruent_matrix(const Matrix& gram, const Matrix& p) {
    const std::size_t n = gram.size();
    const Field f = gram.empty() ? Field::rationals() : gram[0][0].field();
    Matrix gp(n, std::vector<Scalar>(n, Scalar(f, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) gp[i][j] += gram[i][k] * p[k][j];
    Matrix out(n, std::vector<Scalar>(n, Scalar(f, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out[i][j] += p[k][i] * gp[k][j];
    return out;
}

QuadraticForm diagonalize(const Field& field, const Matrix& gram0) {
    const std::size_t n = gram0.size();
    if (n == 0) throw DomainError("diagonalize: empty matrix");
    Matrix gram(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (gram0[i].size() != n) throw DomainError("diagonalize: matrix is not square");
        for (std::size_t j = 0; j < n; ++j) gram[i].push_back(gram0[i][j].in(field));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(gram[i][j] == gram[j][i])) throw DomainError("diagonalize: matrix is not symmetric");

    Matrix g = gram, p = identity(field, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i)
            if (!g[i][i].is_zero() && (best == n || pivot_size(g[i][i]) < pivot_size(g[best][best]))) best = i;
        if (best == n) {
            bool repaired = false;
            for (std::size_t i = k; i < n && !repaired; ++i)
                for (std::size_t j = i + 1; j < n && !repaired; ++j)
                    if (!g[i][j].is_zero()) {
                        // q(e_i + e_j / (2 g_ij)) = 1
                        add_multiple(g, p, j, i, Scalar(field, 1) / (Scalar(field, 2) * g[i][j]));
                        best = i;
                        repaired = true;
                    }
            if (!repaired) throw DomainError("degenerate form");
        }
        swap_index(g, p, k, best);
        for (std::size_t j = k + 1; j < n; ++j)
            if (!g[k][j].is_zero()) add_multiple(g, p, k, j, -(g[k][j] / g[k][k]));
    }

    std::vector<Scalar> diag;
    for (std::size_t k = 0; k < n; ++k) {
        Scalar rep = reduce_entry(g[k][k]);
        Rational t = rational_sqrt((g[k][k] / rep).a());
        for (std::size_t r = 0; r < n; ++r) p[r][k] /= Scalar(field, t);
        diag.push_back(rep);
    }
    return QuadraticForm(field, gram, diag, p);
}

QuadraticForm diagonal_form(const Field& field, const std::vector<Scalar>& entries) {
    Matrix g = identity(field, entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].is_zero()) throw DomainError("degenerate form");
        g[i][i] = entries[i].in(field);
    }
    return diagonalize(field, g);
}

QuadraticForm diagonal_form(const std::vector<Rational>& entries) {
    std::vector<Scalar> s(entries.begin(), entries.end());
    return diagonal_form(Field::rationals(), s);
}

Scalar QuadraticForm::value(const std::vector<Scalar>& x) const {
    if (x.size() != gram_.size()) throw DomainError("QuadraticForm::value: dimension mismatch");
    Scalar s(field_, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) s += x[i] * gram_[i][j] * x[j];
    return s;
}

QuadraticForm QuadraticForm::scaled(const Scalar& c) const {
    if (c.is_zero()) throw DomainError("degenerate form");
    Matrix g = gram_;
    for (auto& row : g)
        for (auto& x : row) x *= c.in(field_);
    return diagonalize(field_, g);
}

std::string QuadraticForm::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < diag_.size(); ++i) s += (i ? "," : "") + diag_[i].to_string();
    return s;
}

Scalar discriminant(const QuadraticForm& q) {
    Scalar d(q.field(), 1);
    for (const auto& x : q.diag()) d = reduce_entry(d * x);
    return d;
}

int negative_index(const QuadraticForm& q, const AnyPlace& w) {
    int neg = 0;
    for (const auto& x : q.diag())
        if (real_sign(x, q.field(), w) < 0) ++neg;
    return neg;
}

int hasse_invariant(const QuadraticForm& q, const AnyPlace& w) {
    int s = 1;
    const auto& d = q.diag();
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) s *= hilbert(d[i], d[j], q.field(), w);
    return s;
}

bool is_isotropic_local(const QuadraticForm& q, const AnyPlace& w) {
    const int n = q.rank();
    if (is_real_place(w)) {
        int neg = negative_index(q, w);
        return neg > 0 && neg < n;
    }
    const Field& f = q.field();
    const Scalar minus_one(f, -1);
    if (n <= 1) return false;
    if (n == 2) return is_local_square(-(q.diag()[0] * q.diag()[1]), f, w);
    if (n >= 5) return true;
    const Scalar d = discriminant(q);
    const int eps = hasse_invariant(q, w);
    if (n == 3) return hilbert(minus_one, -d, f, w) == eps;
    return !(is_local_square(d, f, w) && eps == -hilbert(minus_one, minus_one, f, w));
}

std::vector<AnyPlace> relevant_places(const QuadraticForm& q) {
    return relevant_places(q.field(), std::span<const Scalar>(q.diag()));
}

bool is_isotropic(const QuadraticForm& q) {
    for (const auto& w : relevant_places(q))
        if (!is_isotropic_local(q, w)) return false;
    return true;
}

bool equivalent(const QuadraticForm& q1, const QuadraticForm& q2) {
    if (!(q1.field() == q2.field())) throw DomainError("equivalent: base field mismatch");
    if (q1.rank() != q2.rank()) return false;
    if (!is_global_square(discriminant(q1) * discriminant(q2))) return false;
    auto entries = combined_entries(q1, q2);
    for (const auto& w : relevant_places(q1.field(), std::span<const Scalar>(entries))) {
        if (is_real_place(w) && negative_index(q1, w) != negative_index(q2, w)) return false;
        if (hasse_invariant(q1, w) != hasse_invariant(q2, w)) return false;
    }
    return true;
}

namespace {

struct Candidate {
    Integer c;
    unsigned long long mask = 0;
};

bool smaller_scalar(const Integer& x, const Integer& y) {
    Integer ax = abs(x), ay = abs(y);
    if (ax != ay) return ax < ay;
    return x > y;
}

}  // namespace

std::optional<Rational> similar(const QuadraticForm& q1, const QuadraticForm& q2) {
    if (!q1.field().is_rational() || !q2.field().is_rational())
        throw DomainError("similar: forms over Q only");
    if (q1.rank() != q2.rank()) throw DomainError("similar: rank mismatch");
    const int n = q1.rank();
    const Rational d1 = discriminant(q1).a(), d2 = discriminant(q2).a();

    if (n % 2) {
        Rational c(squarefree_class(d1 * d2));
        if (equivalent(q1, q2.scaled(c))) return c;
        return std::nullopt;
    }
    if (!is_square(d1 * d2)) return std::nullopt;

    // For even n, hasse(c q) = hasse(q) * (c, e) with e = (-1)^(n(n-1)/2) d^(n-1).
    const Rational e = ((n * (n - 1) / 2) % 2) ? Rational(-d2) : d2;
    auto entries = combined_entries(q1, q2);
    const auto places = relevant_places(q1.field(), std::span<const Scalar>(entries));
    if (places.size() > 60) throw DomainError("similar: too many relevant places");
    unsigned long long target = 0;
    for (std::size_t i = 0; i < places.size(); ++i)
        if (hasse_invariant(q1, places[i]) != hasse_invariant(q2, places[i])) target |= 1ULL << i;
    const Place real = Place::real();
    const int neg1 = negative_index(q1, real), neg2 = negative_index(q2, real);

    auto symbol_mask = [&](const Integer& g) {
        unsigned long long m = 0;
        for (std::size_t i = 0; i < places.size(); ++i)
            if (hilbert(Scalar(Rational(g)), Scalar(e), Field::rationals(), places[i]) < 0) m |= 1ULL << i;
        return m;
    };

    std::vector<Integer> gens{-1};
    for (const auto& w : places)
        if (!is_real_place(w)) gens.push_back(std::get<Place>(w).prime());
    if (gens.size() > 22) throw DomainError("similar: candidate set too large");
    std::vector<unsigned long long> gen_mask;
    for (const auto& g : gens) gen_mask.push_back(symbol_mask(g));

    std::vector<Candidate> cands(std::size_t(1) << gens.size());
    for (std::size_t s = 0; s < cands.size(); ++s) {
        Candidate c{1, 0};
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (s >> i & 1) {
                c.c *= gens[i];
                c.mask ^= gen_mask[i];
            }
        cands[s] = c;
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) { return smaller_scalar(x.c, y.c); });

    auto accept = [&](const Integer& c) {
        int neg = c > 0 ? neg2 : n - neg2;
        return neg == neg1 && equivalent(q1, q2.scaled(Rational(c)));
    };
    for (const auto& c : cands)
        if (c.mask == target && accept(c.c)) return Rational(c.c);

    // Auxiliary primes q with e a unit square at q keep the symbol trivial at q.
    std::set<Integer> used(gens.begin() + 1, gens.end());
    for (Integer q = 3; q < 2000; q += 2) {
        if (!is_prime(q) || used.count(q)) continue;
        if (mod(e, q) == 0 || legendre(mod(e, q), q) != 1) continue;
        const unsigned long long qm = symbol_mask(q);
        for (const auto& c : cands)
            if ((c.mask ^ qm) == target && accept(c.c * q)) return Rational(c.c * q);
    }
    return std::nullopt;
}

}  // namespace dp8
