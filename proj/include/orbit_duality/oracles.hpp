#pragma once

// Reference computations that share no code path with the production
// algorithms they check. Slow by construction; used by the verification
// harness and the test suites.

#include <optional>
#include <span>
#include <vector>

#include "orbit_duality/partition.hpp"
#include "orbit_duality/rational.hpp"

namespace orbit_duality::oracle {

/// Type membership by direct multiplicity counting.
bool has_type(const Partition& p, TypeLetter x);

/// Prefix-sum dominance on explicit vectors.
bool dominated_by(const Partition& p, const Partition& q);

/// Maximum, under dominance, of the type-x partitions of |p| dominated by
/// p, found by enumerating every partition of |p|. nullopt when the set has
/// no unique maximum (never expected).
std::optional<Partition> maximal_dominated(const Partition& p, TypeLetter x);

/// Shape of the insertion tableau computed by Greene's theorem: the sum of
/// the first k rows is the largest union of k weakly increasing
/// subsequences. Brute force over subsets; sequences up to length ~12.
Partition greene_shape(std::span<const Rational> seq);

}  // namespace orbit_duality::oracle
