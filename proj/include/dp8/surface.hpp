#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dp8/conic.hpp"

namespace dp8 {

/// A refusal to answer a well-posed question outside the classification
/// (for example minimal models of a rational surface).
class Refusal : public DomainError {
public:
    using DomainError::DomainError;
};

/// A del Pezzo surface of degree 8 over Q without a known rational
/// structure: C1 x C2 for conics over Q, or the Weil restriction of a conic
/// over a quadratic field.
class DP8Surface {
public:
    static DP8Surface product(const Conic& c1, const Conic& c2);
    static DP8Surface weil_restriction(const Conic& c);

    bool is_product() const { return !field_; }
    const Conic& c1() const;
    const Conic& c2() const;
    const Conic& conic() const;
    const QuadField& field() const;

private:
    DP8Surface(std::vector<Conic> conics, std::optional<QuadField> field)
        : conics_(std::move(conics)), field_(std::move(field)) {}

    std::vector<Conic> conics_;
    std::optional<QuadField> field_;
};

/// Result of classifying a quadric surface: either it has a rational point
/// (and is rational) or it is a pointless degree 8 del Pezzo surface.
struct QuadricClassification {
    bool pointed = false;
    std::optional<DP8Surface> surface;
};

QuadricClassification from_quadric(const QuadraticForm& q);

bool is_pointless(const DP8Surface& x);
int picard_rank(const DP8Surface& x);
/// Throws DomainError("already split") for a product.
QuadField splitting_field(const DP8Surface& x);

/// Am(X) in Br(Q). For a Weil restriction that is not a quadric the group
/// has order 2 and its generator is not identified (subgroup is empty).
struct AmitsurGroup {
    int order = 1;
    std::optional<BrauerSubgroup> subgroup;

    bool is_abstract() const { return !subgroup; }
};

AmitsurGroup amitsur(const DP8Surface& x);

/// Subgroup of Br(L) generated by b(C) and b(C').
BrauerSubgroup am_over_splitting(const DP8Surface& x);

/// A rank-4 form over Q whose quadric is isomorphic to X, if X is a quadric.
std::optional<QuadraticForm> is_quadric(const DP8Surface& x);

bool isomorphic(const DP8Surface& x1, const DP8Surface& x2);

/// Birational equivalence of two surfaces given as classifications; every
/// pointed surface is rational.
bool birational(const QuadricClassification& x1, const QuadricClassification& x2);
bool birational(const DP8Surface& x1, const DP8Surface& x2);

enum class ModelKind { Product, SelfProduct, ConicTimesLine, Hirzebruch, WeilRes };

std::string to_string(ModelKind k);

struct MinimalModel {
    ModelKind kind = ModelKind::Product;
    /// Product: two classes; SelfProduct, ConicTimesLine, Hirzebruch: one;
    /// WeilRes: the class of C over L.
    std::vector<BrauerClass2> classes;
    /// Hirzebruch: the surface is a form of F_{2k}.
    int k = 0;
    std::optional<QuadField> field;
};

/// The Amitsur subgroup of a conic bundle model (rho = 2 models only).
BrauerSubgroup model_amitsur(const MinimalModel& m);

/// Throws Refusal for a pointed surface.
std::vector<MinimalModel> minimal_models(const DP8Surface& x, int k_max);

/// Points on the conics of X (one point per conic for a product, an L-point
/// of C for a Weil restriction). Coordinates are exact and verified.
struct PointWitness {
    std::vector<std::vector<Scalar>> points;
};

/// Height bounds every coordinate (numerators of a + b sqrt m over L).
std::optional<PointWitness> rational_point_scan(const DP8Surface& x, long long height);

/// Square root in the base field, if x is a square there.
std::optional<Scalar> global_sqrt(const Scalar& x);

}  // namespace dp8
