#include <algorithm>
#include <cmath>

#include "dp8/integer.hpp"
#include "dp8/piclattice.hpp"

namespace dp8 {

namespace {

long long box_size(int n, int bound) {
    const double cells = std::pow(2.0 * bound + 1, n);
    if (bound < 0 || cells > 2e8) throw DomainError("neg_one_classes: search box too large");
    return static_cast<long long>(cells);
}

void decode(long long index, int bound, IntVec& x) {
    const long long side = 2LL * bound + 1;
    for (auto& c : x) {
        c = index % side - bound;
        index /= side;
    }
}

bool is_neg_one(const GaloisLattice& lat, const IntVec& x) { return lat.degree(x) == -1 && lat.self(x) == -1; }

}  // namespace

std::vector<IntVec> neg_one_classes_serial(const GaloisLattice& lat, int coeff_bound) {
    const int n = lat.rank();
    box_size(n, coeff_bound);
    std::vector<IntVec> out;
    IntVec x(n, -coeff_bound);
    while (true) {
        if (is_neg_one(lat, x)) out.push_back(x);
        int i = 0;
        while (i < n && x[i] == coeff_bound) x[i++] = -coeff_bound;
        if (i == n) break;
        ++x[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> neg_one_classes(const GaloisLattice& lat, int coeff_bound) {
    const int n = lat.rank();
    const long long cells = box_size(n, coeff_bound);
    std::vector<IntVec> out;
#pragma omp parallel
    {
        std::vector<IntVec> local;
        IntVec x(n);
#pragma omp for schedule(static)
        for (long long index = 0; index < cells; ++index) {
            decode(index, coeff_bound, x);
            if (is_neg_one(lat, x)) local.push_back(x);
        }
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool forms_cycle(const GaloisLattice& lat, const std::vector<IntVec>& classes) {
    const std::size_t n = classes.size();
    if (n < 3) return false;
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (lat.pair(classes[i], classes[j]) == 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    for (const auto& a : adj)
        if (a.size() != 2) return false;
    std::size_t prev = n, cur = 0, steps = 0;
    do {
        std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++steps;
    } while (cur != 0 && steps <= n);
    return steps == n;
}

}  // namespace dp8
