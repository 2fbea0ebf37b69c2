#include "dp8/piclattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dp8/integer.hpp"

namespace dp8 {

namespace {

void check_square(const IntMat& m, std::size_t n, const std::string& what) {
    if (m.size() != n) throw DomainError(what + ": wrong size");
    for (const auto& row : m)
        if (row.size() != n) throw DomainError(what + ": wrong size");
}

IntMat transpose(const IntMat& m) {
    IntMat t(m.empty() ? 0 : m[0].size(), IntVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

IntMat multiply(const IntMat& a, const IntMat& b) {
    IntMat c(a.size(), IntVec(b.empty() ? 0 : b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// Row echelon basis over Z of the span of the given rows.
IntMat echelon_basis(IntMat rows) {
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][col] != 0 && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                long long q = rows[i][col] / rows[r][col];
                for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (auto& x : rows[r]) x = -x;
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::size_t pivot_column(const IntVec& row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) return j;
    return row.size();
}

IntVec solve_echelon(const IntMat& basis, IntVec v) {
    IntVec c(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::size_t p = pivot_column(basis[i]);
        if (v[p] % basis[i][p] != 0) throw std::logic_error("contract: class not in the complement lattice");
        c[i] = v[p] / basis[i][p];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c[i] * basis[i][j];
    }
    for (long long x : v)
        if (x != 0) throw std::logic_error("contract: class not in the complement lattice");
    return c;
}

}  // namespace

GaloisLattice::GaloisLattice(IntMat gram, IntVec canonical, std::vector<IntMat> group)
    : gram_(std::move(gram)), canonical_(std::move(canonical)), group_(std::move(group)) {
    const std::size_t n = gram_.size();
    check_square(gram_, n, "GaloisLattice gram");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gram_[i][j] != gram_[j][i]) throw DomainError("GaloisLattice: gram is not symmetric");
    if (canonical_.size() != n) throw DomainError("GaloisLattice: canonical class has wrong length");
    for (const auto& g : group_) {
        check_square(g, n, "GaloisLattice generator");
        if (multiply(multiply(transpose(g), gram_), g) != gram_)
            throw DomainError("GaloisLattice: generator is not an isometry");
        if (act(g, canonical_) != canonical_) throw DomainError("GaloisLattice: generator moves the canonical class");
    }
}

long long GaloisLattice::pair(const IntVec& x, const IntVec& y) const {
    if (x.size() != gram_.size() || y.size() != gram_.size()) throw DomainError("GaloisLattice: dimension mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * gram_[i][j] * y[j];
    return s;
}

GaloisLattice GaloisLattice::with_group(std::vector<IntMat> group) const {
    return GaloisLattice(gram_, canonical_, std::move(group));
}

IntVec act(const IntMat& g, const IntVec& x) {
    IntVec y(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += g[i][j] * x[j];
    return y;
}

IntMat identity_matrix(int n) {
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat permutation_matrix(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[perm[i]][i] = 1;
    return m;
}

long long k_squared(const GaloisLattice& lat) { return lat.self(lat.canonical()); }

int invariant_rank(const GaloisLattice& lat) {
    const int n = lat.rank();
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : lat.group())
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> row(n);
            for (int j = 0; j < n; ++j) row[j] = g[i][j] - (i == j ? 1 : 0);
            rows.push_back(row);
        }
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][col] == 0) continue;
            Rational f = rows[i][col] / rows[rank][col];
            for (int j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return n - rank;
}

GaloisLattice blow_up_orbit(const GaloisLattice& lat, int orbit_size, const std::vector<std::vector<int>>& orbit_action) {
    if (orbit_size < 1) throw DomainError("blow_up_orbit: orbit size must be positive");
    if (orbit_action.size() != lat.group().size())
        throw DomainError("blow_up_orbit: need one permutation per group generator");
    for (const auto& perm : orbit_action) {
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expect(orbit_size);
        std::iota(expect.begin(), expect.end(), 0);
        if (sorted != expect) throw DomainError("blow_up_orbit: action is not a permutation of the new classes");
    }
    const int n = lat.rank(), m = n + orbit_size;
    IntMat gram(m, IntVec(m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram[i][j] = lat.gram()[i][j];
    for (int i = n; i < m; ++i) gram[i][i] = -1;
    IntVec k = lat.canonical();
    k.resize(m, 1);
    std::vector<IntMat> group;
    for (std::size_t g = 0; g < lat.group().size(); ++g) {
        IntMat big(m, IntVec(m, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) big[i][j] = lat.group()[g][i][j];
        for (int i = 0; i < orbit_size; ++i) big[n + orbit_action[g][i]][n + i] = 1;
        group.push_back(big);
    }
    return GaloisLattice(gram, k, group);
}

namespace {

// x + sum (x.E) E: the component orthogonal to pairwise disjoint (-1)-classes
IntVec project(const GaloisLattice& lat, const std::vector<IntVec>& classes, const IntVec& x) {
    IntVec p = x;
    for (const auto& e : classes) {
        const long long c = lat.pair(x, e);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += c * e[i];
    }
    return p;
}

}  // namespace

IntVec Contraction::push(const IntVec& x) const { return solve_echelon(basis, project(source, contracted, x)); }

Contraction contract_map(const GaloisLattice& lat, const std::vector<IntVec>& classes) {
    const int n = lat.rank();
    std::set<IntVec> set(classes.begin(), classes.end());
    if (set.size() != classes.size()) throw DomainError("contract: repeated class");
    for (const auto& e : classes) {
        if (static_cast<int>(e.size()) != n) throw DomainError("contract: class has wrong length");
        if (lat.self(e) != -1) throw DomainError("contract: class " + to_string(e) + " is not a (-1)-class");
        if (lat.degree(e) != -1) throw DomainError("contract: class " + to_string(e) + " has K-degree != -1");
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (lat.pair(classes[i], classes[j]) != 0) throw DomainError("contract: classes are not disjoint");
    for (const auto& g : lat.group())
        for (const auto& e : classes)
            if (!set.count(act(g, e))) throw DomainError("contract: set is not Galois-stable");

    IntMat images;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        images.push_back(project(lat, classes, e));
    }
    IntMat basis = echelon_basis(images);
    const std::size_t r = basis.size();
    if (static_cast<int>(r) != n - static_cast<int>(classes.size()))
        throw std::logic_error("contract: complement has unexpected rank");

    IntMat gram(r, IntVec(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) gram[i][j] = lat.pair(basis[i], basis[j]);
    IntVec k = solve_echelon(basis, project(lat, classes, lat.canonical()));
    std::vector<IntMat> group;
    for (const auto& g : lat.group()) {
        IntMat h(r, IntVec(r));
        for (std::size_t j = 0; j < r; ++j) {
            IntVec c = solve_echelon(basis, act(g, basis[j]));
            for (std::size_t i = 0; i < r; ++i) h[i][j] = c[i];
        }
        group.push_back(h);
    }
    Contraction out{lat, GaloisLattice(gram, k, group), basis, classes};
    return out;
}

GaloisLattice contract(const GaloisLattice& lat, const std::vector<IntVec>& classes) {
    return contract_map(lat, classes).lattice;
}

std::vector<std::vector<int>> orbits(const GaloisLattice& lat, const std::vector<IntVec>& classes) {
    const std::size_t n = classes.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : lat.group())
        for (std::size_t i = 0; i < n; ++i) {
            auto it = std::find(classes.begin(), classes.end(), act(g, classes[i]));
            if (it == classes.end()) throw DomainError("orbits: set is not Galois-stable");
            parent[find(static_cast<int>(i))] = find(static_cast<int>(it - classes.begin()));
        }
    std::vector<std::vector<int>> out;
    std::vector<int> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        int r = find(static_cast<int>(i));
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[r]].push_back(static_cast<int>(i));
    }
    return out;
}

GaloisLattice quadric_lattice(std::vector<IntMat> group) {
    return GaloisLattice({{0, 1}, {1, 0}}, {-2, -2}, std::move(group));
}

std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

bool ScenarioReport::passed() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

void ScenarioReport::check(const std::string& name, long long expected, long long actual) {
    assertions.push_back({name, std::to_string(expected), std::to_string(actual), expected == actual});
}

void ScenarioReport::check(const std::string& name, const std::string& expected, const std::string& actual) {
    assertions.push_back({name, expected, actual, expected == actual});
}

}  // namespace dp8
