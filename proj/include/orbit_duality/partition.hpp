#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbit_duality {

enum class TypeLetter { A, B, C, D };

enum class VeryEvenLabel { I, II };

char to_char(TypeLetter x);
std::optional<TypeLetter> type_letter_from_char(char c);
std::string to_string(VeryEvenLabel label);
VeryEvenLabel swapped(VeryEvenLabel label);

/// A weakly decreasing list of positive integers.
///
/// The stored form is canonical: parts are sorted non-increasing and zero
/// parts are dropped, so two partitions compare equal iff their parts do.
/// The empty partition is the zero partition.
class Partition {
public:
    Partition() = default;
    /// Sorts and drops zeros. Negative parts throw DomainError.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    std::span<const int> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int size() const;  // |p|, the sum of parts

    /// i-th part (0-based); zero past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int multiplicity(int part) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on parts; used only for canonical ordering of reports.
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// "[3,3,1]" / "[]".
std::string to_string(const Partition& p);
/// Inverse of to_string. Whitespace is tolerated; parts must be positive and
/// weakly decreasing.
Partition parse_partition(std::string_view text);

Partition transpose(const Partition& p);
Partition part_sum(const Partition& p, const Partition& q);
Partition disjoint_union(const Partition& p, const Partition& q);
/// k·p, i.e. every part multiplied by k.
Partition scale(const Partition& p, int k);
/// p^+ : first part incremented.
Partition plus_one(const Partition& p);
/// p^- : last part decremented, dropped if it reaches zero.
Partition minus_one(const Partition& p);

bool is_type(const Partition& p, TypeLetter x);
bool is_very_even(const Partition& p);

/// Largest partition of type x dominated by p. Type A is the identity.
Partition collapse(const Partition& p, TypeLetter x);

/// Dominance order: every prefix sum of p is at most that of q.
bool dominance_le(const Partition& p, const Partition& q);

/// All partitions of n, in reverse lexicographic order starting at [n].
std::vector<Partition> partitions_of(int n);

}  // namespace orbit_duality
