#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dp8::oracle {

/// Solvability of z^2 = a x^2 + b y^2 with (x, y, z) != 0 over Q_p by
/// exhaustive search modulo p^3 (p odd) or 2^8, with a Hensel certificate
/// for every positive answer. p = 0 is the real place (sign analysis).
/// Returns +1 or -1; throws std::logic_error when the search is inconclusive.
int local_symbol(long long a, long long b, long long p);

/// Naive search for a nonzero integer zero of sum a_i x_i^2 with
/// max |x_i| <= height; the last coordinate is solved for.
std::optional<std::vector<long long>> naive_zero(const std::vector<long long>& diag, long long height);

/// Ramified places of the quaternion algebra (a, b) at the primes dividing
/// 2ab and at infinity, as labels ("inf", "2", ...), from local_symbol.
std::vector<std::string> ramified_labels(long long a, long long b);

}  // namespace dp8::oracle
