#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "dp8/qform.hpp"

namespace dp8 {

namespace {

using i128 = __int128;
using Coords = std::vector<long long>;

constexpr long long kMaxHeight = 1'000'000;
constexpr long long kMaxRank4Height = 2000;
constexpr double kMaxBox = 5e7;

struct Witness {
    long long norm = -1;
    Coords x;

    bool found() const { return norm >= 0; }
};

Coords abs_coords(const Coords& x) {
    Coords a(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) a[i] = x[i] < 0 ? -x[i] : x[i];
    return a;
}

// max-norm, then absolute values lexicographically, then positive signs first
bool better(const Coords& x, long long nx, const Witness& w) {
    if (!w.found()) return true;
    if (nx != w.norm) return nx < w.norm;
    Coords ax = abs_coords(x), aw = abs_coords(w.x);
    if (ax != aw) return ax < aw;
    return x > w.x;
}

void offer(Witness& w, const Coords& x) {
    long long n = 0;
    long long g = 0;
    for (long long v : x) {
        n = std::max(n, v < 0 ? -v : v);
        g = std::gcd(g, v);
    }
    if (n == 0 || g != 1) return;
    if (better(x, n, w)) w = Witness{n, x};
}

void merge(Witness& into, const Witness& other) {
    if (other.found() && better(other.x, other.norm, into)) into = other;
}

bool exact_sqrt128(i128 v, long long& root) {
    if (v < 0) return false;
    auto t = static_cast<long long>(std::llround(std::sqrt(static_cast<long double>(v))));
    while (t > 0 && static_cast<i128>(t) * t > v) --t;
    while (static_cast<i128>(t + 1) * (t + 1) <= v) ++t;
    root = t;
    return static_cast<i128>(t) * t == v;
}

// Integer Gram matrix proportional to the form's Gram matrix.
std::vector<std::vector<long long>> integer_gram(const QuadraticForm& q) {
    if (!q.field().is_rational()) throw DomainError("oracle_point_search: forms over Q only");
    Integer den = 1;
    for (const auto& row : q.gram())
        for (const auto& x : row) den = lcm(den, denominator_of(x.a()));
    std::vector<std::vector<long long>> g;
    const Integer cap = std::numeric_limits<long long>::max();
    for (const auto& row : q.gram()) {
        g.emplace_back();
        for (const auto& x : row) {
            Integer v = numerator_of(x.a()) * (den / denominator_of(x.a()));
            if (abs(v) >= cap) throw DomainError("oracle_point_search: coefficients exceed 2^63");
            g.back().push_back(static_cast<long long>(v));
        }
    }
    return g;
}

bool is_diagonal(const std::vector<std::vector<long long>>& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (i != j && g[i][j] != 0) return false;
    return true;
}

void check_height(long long height) {
    if (height < 1 || height > kMaxHeight) throw DomainError("oracle_point_search: height out of range");
}

void check_box(std::size_t dims, long long side) {
    if (std::pow(static_cast<double>(side), static_cast<double>(dims)) > kMaxBox)
        throw DomainError("oracle_point_search: search box too large");
}

// Solve c * t^2 = rhs for 0 <= t <= height.
bool solve_last(i128 rhs, long long c, long long height, long long& t) {
    if (rhs % c != 0) return false;
    return exact_sqrt128(rhs / c, t) && t <= height;
}

// Reference: loop over the first n-1 coordinates in [0, height], solve the last.
Witness diagonal_serial(const std::vector<long long>& a, long long height) {
    const std::size_t n = a.size();
    check_box(n - 1, height + 1);
    Witness best;
    Coords x(n, 0);
    while (true) {
        i128 partial = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) partial += static_cast<i128>(a[i]) * x[i] * x[i];
        long long t;
        if (solve_last(-partial, a[n - 1], height, t)) {
            x[n - 1] = t;
            offer(best, x);
            x[n - 1] = 0;
        }
        std::size_t i = 0;
        while (i + 1 < n && x[i] == height) x[i++] = 0;
        if (i + 1 >= n) break;
        ++x[i];
    }
    return best;
}

Witness rank3_parallel(const std::vector<long long>& a, long long height) {
    Witness best;
#pragma omp parallel
    {
        Witness local;
#pragma omp for schedule(dynamic, 16)
        for (long long x = 0; x <= height; ++x) {
            const i128 ax = static_cast<i128>(a[0]) * x * x;
            for (long long y = 0; y <= height; ++y) {
                long long z;
                if (solve_last(-(ax + static_cast<i128>(a[1]) * y * y), a[2], height, z)) offer(local, {x, y, z});
            }
        }
#pragma omp critical
        merge(best, local);
    }
    return best;
}

struct Half {
    i128 value;
    long long x, y;
};

Witness rank4_parallel(const std::vector<long long>& a, long long height) {
    if (height > kMaxRank4Height) throw DomainError("oracle_point_search: height too large for rank 4");
    const long long side = height + 1;
    std::vector<Half> table(static_cast<std::size_t>(side * side));
#pragma omp parallel for schedule(static)
    for (long long x = 0; x <= height; ++x)
        for (long long y = 0; y <= height; ++y)
            table[x * side + y] = {static_cast<i128>(a[0]) * x * x + static_cast<i128>(a[1]) * y * y, x, y};
    std::sort(table.begin(), table.end(), [](const Half& l, const Half& r) {
        return l.value != r.value ? l.value < r.value : (l.x != r.x ? l.x < r.x : l.y < r.y);
    });
    Witness best;
#pragma omp parallel
    {
        Witness local;
#pragma omp for schedule(dynamic, 16)
        for (long long z = 0; z <= height; ++z)
            for (long long w = 0; w <= height; ++w) {
                const i128 want = -(static_cast<i128>(a[2]) * z * z + static_cast<i128>(a[3]) * w * w);
                auto lo = std::lower_bound(table.begin(), table.end(), want,
                                           [](const Half& h, i128 v) { return h.value < v; });
                for (auto it = lo; it != table.end() && it->value == want; ++it) offer(local, {it->x, it->y, z, w});
            }
#pragma omp critical
        merge(best, local);
    }
    return best;
}

// Full box scan for non-diagonal forms; vectors with first nonzero
// coordinate positive.
Witness box_scan(const std::vector<std::vector<long long>>& g, long long height, bool parallel) {
    const std::size_t n = g.size();
    check_box(n, 2 * height + 1);
    const long long side = 2 * height + 1;
    long long cells = 1;
    for (std::size_t i = 1; i < n; ++i) cells *= side;
    Witness best;
#pragma omp parallel if (parallel)
    {
        Witness local;
        Coords x(n);
#pragma omp for schedule(dynamic, 4)
        for (long long first = -height; first <= height; ++first) {
            for (long long cell = 0; cell < cells; ++cell) {
                x[0] = first;
                long long c = cell;
                for (std::size_t i = 1; i < n; ++i) {
                    x[i] = c % side - height;
                    c /= side;
                }
                auto lead = std::find_if(x.begin(), x.end(), [](long long v) { return v != 0; });
                if (lead == x.end() || *lead < 0) continue;
                i128 s = 0;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) s += static_cast<i128>(g[i][j]) * x[i] * x[j];
                if (s == 0) offer(local, x);
            }
        }
#pragma omp critical
        merge(best, local);
    }
    return best;
}

std::optional<std::vector<Integer>> finish(const QuadraticForm& q, const Witness& w) {
    if (!w.found()) return std::nullopt;
    std::vector<Integer> out;
    std::vector<Scalar> xs;
    for (long long v : w.x) {
        out.emplace_back(v);
        xs.emplace_back(Rational(v));
    }
    if (!q.value(xs).is_zero()) throw std::logic_error("oracle_point_search: witness does not vanish");
    return out;
}

std::vector<long long> diagonal_of(const std::vector<std::vector<long long>>& g) {
    std::vector<long long> a;
    for (std::size_t i = 0; i < g.size(); ++i) a.push_back(g[i][i]);
    return a;
}

}  // namespace

std::optional<std::vector<Integer>> oracle_point_search(const QuadraticForm& q, long long height) {
    check_height(height);
    auto g = integer_gram(q);
    if (!is_diagonal(g)) return finish(q, box_scan(g, height, true));
    auto a = diagonal_of(g);
    if (a.size() == 3) return finish(q, rank3_parallel(a, height));
    if (a.size() == 4) return finish(q, rank4_parallel(a, height));
    if (a.size() < 2) return std::nullopt;
    return finish(q, diagonal_serial(a, height));
}

std::optional<std::vector<Integer>> oracle_point_search_serial(const QuadraticForm& q, long long height) {
    check_height(height);
    auto g = integer_gram(q);
    if (!is_diagonal(g)) return finish(q, box_scan(g, height, false));
    auto a = diagonal_of(g);
    if (a.size() < 2) return std::nullopt;
    return finish(q, diagonal_serial(a, height));
}

}  // namespace dp8
