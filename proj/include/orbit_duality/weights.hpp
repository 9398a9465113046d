#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbit_duality/partition.hpp"
#include "orbit_duality/rational.hpp"
#include "orbit_duality/rs_insertion.hpp"

namespace orbit_duality {

/// A finite multiset of exact rationals, stored as distinct values in
/// strictly decreasing order with positive multiplicities.
class WeightMultiset {
public:
    WeightMultiset() = default;
    explicit WeightMultiset(const std::vector<Rational>& entries);

    const std::vector<ValueCount>& values() const { return values_; }
    int size() const;
    bool empty() const { return values_.empty(); }
    int count(const Rational& v) const;

    /// Entries expanded, non-increasing.
    std::vector<Rational> entries() const;

    void add(const Rational& v, int times = 1);
    WeightMultiset operator+(const WeightMultiset& other) const;
    /// {-x : x in this}.
    WeightMultiset negated() const;
    /// λ + (−λ): the symmetric unfolding written ^-λ.
    WeightMultiset symmetrized() const;

    friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

private:
    std::vector<ValueCount> values_;
};

bool operator==(const ValueCount& a, const ValueCount& b);

/// "{1/2, 0, -1/2}".
std::string to_string(const WeightMultiset& lam);

/// n / gcd(n, 2).
int reduced_degree(int n);

/// ⋃_i {(p_i−1)/2n, (p_i−3)/2n, …, (1−p_i)/2n}.
WeightMultiset lambda_A(const Partition& p, int n);

/// The non-negative multiset λ with λ_A^(n*)(p) = ^-λ (+{0} when x = B).
/// p must be of type x ∈ {B, C, D}.
WeightMultiset lambda_X(const Partition& p, int n, TypeLetter x);

/// Inverse of lambda_X on its image: ^-λ, plus one extra 0 when x = B.
WeightMultiset unfold(const WeightMultiset& lam, TypeLetter x);

/// Maximal integral-difference classes of a multiset. Classes of entries
/// in ℤ and ½+ℤ are kept apart; the remaining classes come in negation
/// pairs, paired[l−1−i] = −paired[i] (0-based), with the first half
/// ordered by decreasing maximum entry.
struct ClassDecomposition {
    WeightMultiset zero_class;
    WeightMultiset half_class;
    std::vector<WeightMultiset> paired_classes;
};

ClassDecomposition decompose(const WeightMultiset& lam);

enum class ClassKind { Zero, Half, Paired };

struct ClassIndex {
    ClassKind kind = ClassKind::Zero;
    std::size_t paired = 0;  // 0-based, used when kind == Paired
};

/// p(class)^*, with an extra part 1 for an even-length zero class.
Partition class_partition(const ClassDecomposition& dec, ClassIndex which);

/// The RS shape p(λ) of a multiset read as a non-increasing sequence.
Partition rs_shape(const WeightMultiset& lam);

/// Returns p with lam = λ_A^(n)(p), or nullopt.
///
/// The entries are split by the parity of 2n·x; each half must satisfy the
/// single-progression conditions (entries in (1/2n)ℤ, symmetric with equal
/// multiplicities, consecutive distinct values 1/n apart with
/// multiplicities non-decreasing toward the centre), and then contributes
/// p(half)^*.
std::optional<Partition> recognize_lambda_A(const WeightMultiset& lam, int n);

/// The single-progression conditions alone.
bool satisfies_progression_conditions(const WeightMultiset& lam, int n);

}  // namespace orbit_duality
