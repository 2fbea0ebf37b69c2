#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dp8/integer.hpp"

namespace dp8 {

/// A place of Q: the real place or a finite prime.
/// Ordered inf < 2 < 3 < 5 < ...
class Place {
public:
    static Place real() { return Place(); }
    /// Throws DomainError unless p is prime.
    static Place finite(const Integer& p);

    bool is_real() const { return !prime_; }
    const Integer& prime() const;

    std::string label() const;
    static Place parse(const std::string& label);

    friend bool operator==(const Place& a, const Place& b) { return a.prime_ == b.prime_; }
    friend std::strong_ordering operator<=>(const Place& a, const Place& b);

private:
    Place() = default;
    std::optional<Integer> prime_;
};

/// The quadratic field Q(sqrt m), m square-free and m not in {0, 1}.
class QuadField {
public:
    explicit QuadField(const Integer& m);

    const Integer& m() const { return m_; }
    /// Field discriminant: m when m = 1 mod 4, else 4m.
    Integer discriminant() const;
    std::string label() const;

    friend bool operator==(const QuadField&, const QuadField&) = default;

private:
    Integer m_;
};

enum class SplitType { Split, Inert, Ramified };

std::string to_string(SplitType s);

/// A place of a quadratic field. Split primes carry index 1 or 2: index 1
/// is the ideal where sqrt(m) maps to the smaller root of x^2 = m mod p
/// (for p = 2, the 2-adic root congruent to 1 mod 4). Real embeddings
/// carry index 1 (sqrt m -> +sqrt m) or 2 (sqrt m -> -sqrt m).
class PlaceK {
public:
    /// Throws DomainError when m < 0 or index not in {1, 2}.
    static PlaceK real_embedding(const QuadField& field, int index);
    /// Builds the prime ideal above p with the given index (ignored unless split).
    static PlaceK prime_ideal(const QuadField& field, const Integer& p, int index = 0);

    bool is_real() const { return !prime_; }
    const Integer& prime() const;
    SplitType split_type() const { return split_; }
    int index() const { return index_; }
    /// Residue of sqrt(m) at a split place: mod p for odd p, mod 4 for p = 2.
    const Integer& root() const { return root_; }

    /// Residue degree f and ramification index e over the prime below.
    int residue_degree() const;
    int ramification_index() const;

    Place below() const;
    PlaceK conjugate() const;

    std::string label() const;
    static PlaceK parse(const QuadField& field, const std::string& label);

    friend bool operator==(const PlaceK& a, const PlaceK& b) {
        return a.prime_ == b.prime_ && a.index_ == b.index_;
    }
    friend std::strong_ordering operator<=>(const PlaceK& a, const PlaceK& b);

private:
    PlaceK() = default;
    std::optional<Integer> prime_;
    SplitType split_ = SplitType::Split;
    int index_ = 1;
    Integer root_ = 0;
};

SplitType prime_splitting(const Integer& p, const QuadField& field);
std::vector<PlaceK> places_above(const Place& v, const QuadField& field);

/// Base field of a form or conic: Q or a quadratic field.
class Field {
public:
    static Field rationals() { return Field(); }
    static Field quadratic(const QuadField& k) { return Field(k); }

    bool is_rational() const { return !quad_; }
    const QuadField& quad() const;
    std::string label() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field() = default;
    explicit Field(const QuadField& k) : quad_(k) {}
    std::optional<QuadField> quad_;
};

/// A place of either base field.
using AnyPlace = std::variant<Place, PlaceK>;

std::string label(const AnyPlace& w);
bool is_real(const AnyPlace& w);

}  // namespace dp8
