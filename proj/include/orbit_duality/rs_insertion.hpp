#pragma once

#include <span>
#include <utility>
#include <vector>

#include "orbit_duality/partition.hpp"
#include "orbit_duality/rational.hpp"

namespace orbit_duality {

/// Insertion tableau P(λ): rows weakly increase, columns strictly increase.
struct Tableau {
    std::vector<std::vector<Rational>> rows;

    std::size_t cell_count() const;
    friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Row insertion; an inserted value bumps the leftmost entry strictly
/// greater than it, so equal values share a row.
Tableau rs_insert(std::span<const Rational> seq);

Partition shape(const Tableau& t);

/// A strictly decreasing value with its multiplicity.
struct ValueCount {
    Rational value;
    int count;
};

/// Shape and tableau of a non-increasing sequence without running the
/// insertion: the shape is the sorted multiplicities and the cell (i, j)
/// holds the i-th smallest value among those occurring at least j times.
std::pair<Partition, Tableau> rs_shape_closed_form(std::span<const ValueCount> values);

}  // namespace orbit_duality
