#pragma once

#include <optional>
#include <vector>

#include "dp8/local.hpp"
#include "dp8/scalar.hpp"

namespace dp8 {

using Matrix = std::vector<std::vector<Scalar>>;

/// P^T * gram * P.
Matrix congruent_matrix(const Matrix& gram, const Matrix& p);

/// A nondegenerate quadratic form over Q or a quadratic field, stored with
/// its Gram matrix, a diagonalization with square-free entries, and the
/// change of basis: basis()^T * gram() * basis() = diag(diag()).
class QuadraticForm {
public:
    const Field& field() const { return field_; }
    int rank() const { return static_cast<int>(diag_.size()); }
    const Matrix& gram() const { return gram_; }
    const std::vector<Scalar>& diag() const { return diag_; }
    const Matrix& basis() const { return basis_; }

    /// q(x) computed from the Gram matrix.
    Scalar value(const std::vector<Scalar>& x) const;

    /// The form c*q.
    QuadraticForm scaled(const Scalar& c) const;

    /// "a1,a2,...,an" over the diagonal entries.
    std::string to_string() const;

private:
    friend QuadraticForm diagonalize(const Field& field, const Matrix& gram);
    QuadraticForm(Field field, Matrix gram, std::vector<Scalar> diag, Matrix basis)
        : field_(std::move(field)), gram_(std::move(gram)), diag_(std::move(diag)), basis_(std::move(basis)) {}

    Field field_;
    Matrix gram_;
    std::vector<Scalar> diag_;
    Matrix basis_;
};

/// Symmetric Gaussian elimination with the smallest nonzero diagonal entry
/// as pivot; an all-zero diagonal is repaired by e_i <- e_i + e_j.
/// Throws DomainError("degenerate form") when det = 0.
QuadraticForm diagonalize(const Field& field, const Matrix& gram);
QuadraticForm diagonal_form(const Field& field, const std::vector<Scalar>& entries);
QuadraticForm diagonal_form(const std::vector<Rational>& entries);

/// Square class representative of the determinant.
Scalar discriminant(const QuadraticForm& q);

/// Number of negative diagonal entries at a real place.
int negative_index(const QuadraticForm& q, const AnyPlace& w);

int hasse_invariant(const QuadraticForm& q, const AnyPlace& w);
bool is_isotropic_local(const QuadraticForm& q, const AnyPlace& w);

/// Places where the local invariants of q can differ from those of the
/// split form of the same rank.
std::vector<AnyPlace> relevant_places(const QuadraticForm& q);

/// Hasse-Minkowski over the relevant places.
bool is_isotropic(const QuadraticForm& q);

/// Rank, discriminant, Hasse invariants and real signatures all agree.
bool equivalent(const QuadraticForm& q1, const QuadraticForm& q2);

/// A rational c with q1 equivalent to c*q2, smallest |c| first (positive
/// before negative) among products of -1 and the primes where the two forms
/// can differ; auxiliary primes are tried when that set is exhausted.
/// Forms over Q only.
std::optional<Rational> similar(const QuadraticForm& q1, const QuadraticForm& q2);

/// Exhaustive search for a primitive integer zero of a form over Q with
/// max|x_i| <= height. The witness is the smallest by max-norm, then
/// lexicographically on absolute values, reported with nonnegative
/// coordinates for diagonal forms. Diagonal ranks 3 and 4 use dedicated
/// kernels; other forms fall back to a full box scan.
std::optional<std::vector<Integer>> oracle_point_search(const QuadraticForm& q, long long height);
std::optional<std::vector<Integer>> oracle_point_search_serial(const QuadraticForm& q, long long height);

}  // namespace dp8
