#include "dp8/factor.hpp"

#include <algorithm>
#include <map>

namespace dp8 {

namespace {

constexpr unsigned kTrialLimit = 1u << 16;

bool miller_rabin_round(const Integer& n, const Integer& d, int s, const Integer& a) {
    Integer x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

Integer pollard_brent(const Integer& n, unsigned seed) {
    if (n % 2 == 0) return 2;
    Integer y = seed % n, c = (seed * 7 + 1) % n, m = 128;
    Integer g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
        x = y;
        for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
        Integer k = 0;
        while (k < r && g == 1) {
            ys = y;
            Integer lim = std::min(m, r - k);
            for (Integer i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                Integer diff = x > y ? Integer(x - y) : Integer(y - x);
                q = (q * diff) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = (ys * ys + c) % n;
            Integer diff = x > ys ? Integer(x - ys) : Integer(ys - x);
            g = gcd(diff, n);
        } while (g == 1);
    }
    return g;
}

void split_cofactor(const Integer& n, std::map<Integer, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer root;
    if (exact_sqrt(n, root)) {
        split_cofactor(root, out);
        split_cofactor(root, out);
        return;
    }
    for (unsigned seed = 2;; ++seed) {
        Integer d = pollard_brent(n, seed);
        if (d != n && d != 1) {
            split_cofactor(d, out);
            split_cofactor(n / d, out);
            return;
        }
    }
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Integer d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (unsigned a : small)
        if (!miller_rabin_round(n, d, s, Integer(a))) return false;
    return true;
}

std::vector<PrimePower> factorize(const Integer& n) {
    if (n == 0) throw DomainError("factorize: zero has no factorization");
    Integer m = n < 0 ? Integer(-n) : n;
    std::map<Integer, int> found;
    for (unsigned p = 2; p < kTrialLimit && Integer(p) * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            ++found[Integer(p)];
            m /= p;
        }
    }
    if (m > 1) {
        if (m < Integer(kTrialLimit) * kTrialLimit)
            ++found[m];
        else
            split_cofactor(m, found);
    }
    std::vector<PrimePower> out;
    out.reserve(found.size());
    for (auto& [p, e] : found) out.push_back({p, e});
    return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
    std::vector<Integer> out;
    for (auto& pp : factorize(n)) out.push_back(pp.prime);
    return out;
}

Integer squarefree_kernel(const Integer& n) {
    if (n == 0) throw DomainError("squarefree_kernel: zero");
    Integer k = n < 0 ? -1 : 1;
    for (auto& pp : factorize(n))
        if (pp.exponent % 2) k *= pp.prime;
    return k;
}

Integer squarefree_class(const Rational& r) {
    if (r == 0) throw DomainError("squarefree_class: zero");
    return squarefree_kernel(numerator_of(r) * denominator_of(r));
}

int legendre(const Integer& a, const Integer& p) {
    if (p <= 2 || p % 2 == 0 || !is_prime(p)) throw DomainError("legendre: modulus must be an odd prime");
    Integer r = mod(a, p);
    if (r == 0) return 0;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

Integer sqrt_mod_prime(const Integer& a, const Integer& p) {
    Integer n = mod(a, p);
    if (n == 0) return 0;
    if (legendre(n, p) != 1) throw DomainError("sqrt_mod_prime: non-residue");
    Integer q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (legendre(z, p) != -1) ++z;
    Integer m = s, c = pow_mod(z, q, p), t = pow_mod(n, q, p), r = pow_mod(n, (q + 1) / 2, p);
    while (t != 1) {
        Integer i = 0, tt = t;
        while (tt != 1) {
            tt = (tt * tt) % p;
            ++i;
        }
        Integer b = c;
        for (Integer j = 0; j < m - i - 1; ++j) b = (b * b) % p;
        m = i;
        c = (b * b) % p;
        t = (t * c) % p;
        r = (r * b) % p;
    }
    Integer other = p - r;
    return std::min(r, other);
}

}  // namespace dp8
