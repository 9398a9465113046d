#pragma once

#include <optional>
#include <string>

#include "orbit_duality/partition.hpp"
#include "orbit_duality/weights.hpp"

namespace orbit_duality {

/// Group type and cover degree of a classical covering group.
struct ClassicalContext {
    TypeLetter type = TypeLetter::A;
    int n = 1;

    /// Type of the partitions parametrizing orbits of the dual group.
    ///   A: A;  B: C if n is odd or n ≡ 2 (mod 4), B if 4 | n;
    ///   C: B if n is odd, C if n is even;  D: D.
    TypeLetter input_type() const;
    /// Throws DomainError naming the rule when p is not a valid input.
    void require_input(const Partition& p) const;
    bool accepts(const Partition& p) const;
};

std::string to_string(const ClassicalContext& ctx);

/// A partition with an optional I/II tag; tags only sit on very even
/// partitions.
class LabeledOrbit {
public:
    LabeledOrbit() = default;
    LabeledOrbit(Partition p, std::optional<VeryEvenLabel> label = std::nullopt);

    const Partition& partition() const { return partition_; }
    std::optional<VeryEvenLabel> label() const { return label_; }

    friend bool operator==(const LabeledOrbit&, const LabeledOrbit&) = default;

private:
    Partition partition_;
    std::optional<VeryEvenLabel> label_;
};

/// "[4,4]^I", "[3,1]".
std::string to_string(const LabeledOrbit& o);
/// Accepts an optional "^I" / "^II" suffix.
LabeledOrbit parse_labeled_orbit(std::string_view text);

/// (n^a, b) with m = n·a + b, 0 ≤ b < n.
Partition s_part(int m, int n);

// Closed formulas. Inputs must satisfy the context's input-type rule.
Partition d_com_A(const Partition& p, int n);
Partition d_com_B(const Partition& p, int n);
Partition d_com_C(const Partition& p, int n);
LabeledOrbit d_com_D(const LabeledOrbit& o, int n);
/// Dispatches on ctx.type; type D drops labels.
Partition d_com(const Partition& p, const ClassicalContext& ctx);

/// p^*_D^{+-}_C for p of type C.
Partition metaplectic_d_C(const Partition& p);

/// Annihilator partition of the weight λ in a group of type x, where λ
/// was built from a partition of type input_type (λ_A for A, the
/// non-negative half λ_X for B, C, D).
Partition ap(const WeightMultiset& lam, TypeLetter x, TypeLetter input_type);

/// Full trace of the annihilator-partition route, for auditing.
struct ApTrace {
    WeightMultiset lambda;      // as passed to ap
    WeightMultiset unfolded;    // the symmetric multiset that is decomposed
    ClassDecomposition classes;
    Partition zero_part;        // p_0 (types B, C, D)
    Partition half_part;        // p_½ (types B, C, D)
    std::vector<Partition> class_parts;  // p_i, or p_{A,i} for type A
    std::vector<Partition> summands;     // the terms added before the final collapse
    Partition result;
};

ApTrace ap_trace(const WeightMultiset& lam, TypeLetter x, TypeLetter input_type);

/// The weight multiset λ_{X'}^(n)(p) fed to the annihilator route.
WeightMultiset dual_weight(const Partition& p, const ClassicalContext& ctx);

/// ap(dual_weight(p, ctx), ctx.type, ctx.input_type()).
Partition d_via_ap(const Partition& p, const ClassicalContext& ctx);

/// base ⊔ q ⊔ q.
Partition saturate(const Partition& base, const Partition& q);
/// (base + 2q)_X.
Partition induce(const Partition& base, const Partition& q, TypeLetter x);

struct SpehDatum {
    int r0 = 1;
    int m = 1;
    int k = 1;
    int n = 1;
};

/// ((n·r0)^c, r0·m·d) with n0 = n/m and k = c·n0 + d, 0 ≤ d < n0.
Partition speh_wavefront(const SpehDatum& s);

/// Regular orbit of a type-x group whose orbits are partitions of size.
Partition regular_partition(int size, TypeLetter x);

}  // namespace orbit_duality
