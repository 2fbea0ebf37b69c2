#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dp8 {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;

/// A free lattice with an intersection form, a canonical class and a finite
/// group of isometries fixing it, given by generators acting on coordinate
/// columns (x -> g x).
class GaloisLattice {
public:
    /// Throws DomainError unless gram is symmetric, canonical has the right
    /// length, and every generator is an isometry fixing canonical.
    GaloisLattice(IntMat gram, IntVec canonical, std::vector<IntMat> group = {});

    int rank() const { return static_cast<int>(gram_.size()); }
    const IntMat& gram() const { return gram_; }
    const IntVec& canonical() const { return canonical_; }
    const std::vector<IntMat>& group() const { return group_; }

    long long pair(const IntVec& x, const IntVec& y) const;
    long long self(const IntVec& x) const { return pair(x, x); }
    long long degree(const IntVec& x) const { return pair(canonical_, x); }

    /// Same lattice with another set of generators.
    GaloisLattice with_group(std::vector<IntMat> group) const;

private:
    IntMat gram_;
    IntVec canonical_;
    std::vector<IntMat> group_;
};

IntVec act(const IntMat& g, const IntVec& x);
IntMat identity_matrix(int n);
/// Permutation matrix sending e_i to e_perm[i].
IntMat permutation_matrix(const std::vector<int>& perm);

long long k_squared(const GaloisLattice& lat);

/// Rank of the sublattice fixed by every generator.
int invariant_rank(const GaloisLattice& lat);

/// Appends orbit_size exceptional classes E with E^2 = -1. The canonical
/// class becomes K + sum E (so that K.E = -1). orbit_action holds one
/// permutation of the new classes per group generator.
GaloisLattice blow_up_orbit(const GaloisLattice& lat, int orbit_size, const std::vector<std::vector<int>>& orbit_action);

/// Contraction of disjoint conjugate (-1)-classes: the new lattice is their
/// orthogonal complement, with basis rows expressed in old coordinates.
struct Contraction {
    GaloisLattice source;
    GaloisLattice lattice;
    IntMat basis;
    std::vector<IntVec> contracted;

    /// Coordinates, in the new basis, of the image of an old class.
    IntVec push(const IntVec& x) const;
};

Contraction contract_map(const GaloisLattice& lat, const std::vector<IntVec>& classes);
GaloisLattice contract(const GaloisLattice& lat, const std::vector<IntVec>& classes);

/// Orbits of the group on a finite stable set of classes.
std::vector<std::vector<int>> orbits(const GaloisLattice& lat, const std::vector<IntVec>& classes);

/// All D with D^2 = -1, K.D = -1 and |coordinates| <= coeff_bound, sorted.
std::vector<IntVec> neg_one_classes(const GaloisLattice& lat, int coeff_bound);
std::vector<IntVec> neg_one_classes_serial(const GaloisLattice& lat, int coeff_bound);

/// True when the graph with an edge for each pair of classes meeting with
/// intersection number 1 is a single cycle through all of them.
bool forms_cycle(const GaloisLattice& lat, const std::vector<IntVec>& classes);

/// P^1 x P^1 in the basis (A, B) with the given generators.
GaloisLattice quadric_lattice(std::vector<IntMat> group = {});

struct Assertion {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ScenarioReport {
    std::string scenario;
    std::vector<Assertion> assertions;
    /// Headline number of the scenario (R.B1 for dplink2).
    std::optional<long long> value;

    bool passed() const;
    void check(const std::string& name, long long expected, long long actual);
    void check(const std::string& name, const std::string& expected, const std::string& actual);
};

std::string to_string(const IntVec& v);

ScenarioReport scenario_cblink(bool trivial_action = false);
ScenarioReport scenario_f2k(int k);
/// orbit_pattern = number of orbits of Gal(kbar/L) on the four blown up points (1 or 2).
ScenarioReport scenario_dplink4(int orbit_pattern);
/// odd_parity: R^2 odd (every blown up point of even degree).
ScenarioReport scenario_dplink2(bool odd_parity);

}  // namespace dp8
