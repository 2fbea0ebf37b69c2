#pragma once

#include <vector>

#include "dp8/integer.hpp"

namespace dp8 {

struct PrimePower {
    Integer prime;
    int exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of |n|, primes ascending. Trial division up to 2^16,
/// then Miller-Rabin plus Pollard-Brent rho for the cofactor.
/// Throws DomainError for n = 0; returns {} for n = +-1.
std::vector<PrimePower> factorize(const Integer& n);

/// Distinct primes dividing |n| (n != 0).
std::vector<Integer> prime_divisors(const Integer& n);

/// Deterministic below 3.3e24, strong probable-prime test above.
bool is_prime(const Integer& n);

/// Signed square-free part: n = kernel * s^2.
Integer squarefree_kernel(const Integer& n);

/// Square-free integer in the square class of the nonzero rational r.
Integer squarefree_class(const Rational& r);

/// Legendre symbol (a/p) for an odd prime p; throws for p even or composite.
int legendre(const Integer& a, const Integer& p);

/// Square root of a quadratic residue a modulo an odd prime p (Tonelli-Shanks),
/// the smaller of the two roots.
Integer sqrt_mod_prime(const Integer& a, const Integer& p);

}  // namespace dp8
