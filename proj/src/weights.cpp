#include "orbit_duality/weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "orbit_duality/errors.hpp"

namespace orbit_duality {

bool operator==(const ValueCount& a, const ValueCount& b) {
    return a.value == b.value && a.count == b.count;
}

WeightMultiset::WeightMultiset(const std::vector<Rational>& entries) {
    for (const auto& v : entries) add(v);
}

int WeightMultiset::size() const {
    int n = 0;
    for (const auto& vc : values_) n += vc.count;
    return n;
}

int WeightMultiset::count(const Rational& v) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), v,
                               [](const ValueCount& a, const Rational& x) { return a.value > x; });
    return it != values_.end() && it->value == v ? it->count : 0;
}

std::vector<Rational> WeightMultiset::entries() const {
    std::vector<Rational> out;
    for (const auto& vc : values_) out.insert(out.end(), static_cast<std::size_t>(vc.count), vc.value);
    return out;
}

void WeightMultiset::add(const Rational& v, int times) {
    if (times <= 0) return;
    auto it = std::lower_bound(values_.begin(), values_.end(), v,
                               [](const ValueCount& a, const Rational& x) { return a.value > x; });
    if (it != values_.end() && it->value == v)
        it->count += times;
    else
        values_.insert(it, ValueCount{v, times});
}

WeightMultiset WeightMultiset::operator+(const WeightMultiset& other) const {
    WeightMultiset out = *this;
    for (const auto& vc : other.values_) out.add(vc.value, vc.count);
    return out;
}

WeightMultiset WeightMultiset::negated() const {
    WeightMultiset out;
    for (const auto& vc : values_) out.add(-vc.value, vc.count);
    return out;
}

WeightMultiset WeightMultiset::symmetrized() const { return *this + negated(); }

std::string to_string(const WeightMultiset& lam) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : lam.entries()) {
        if (!first) out += ", ";
        first = false;
        out += to_string(v);
    }
    return out + "}";
}

int reduced_degree(int n) { return n % 2 == 0 ? n / 2 : n; }

WeightMultiset lambda_A(const Partition& p, int n) {
    if (n < 1) throw DomainError("cover degree n must be positive");
    WeightMultiset out;
    for (int part : p.parts())
        for (int k = part - 1; k >= 1 - part; k -= 2) out.add(Rational(k, 2 * n));
    return out;
}

WeightMultiset unfold(const WeightMultiset& lam, TypeLetter x) {
    WeightMultiset out = lam.symmetrized();
    if (x == TypeLetter::B) out.add(Rational(0));
    return out;
}

WeightMultiset lambda_X(const Partition& p, int n, TypeLetter x) {
    if (x == TypeLetter::A) throw DomainError("lambda_X is defined for types B, C, D");
    if (n < 1) throw DomainError("cover degree n must be positive");
    if (!is_type(p, x))
        throw DomainError(to_string(p) + " is not a partition of type " + std::string(1, to_char(x)));

    const WeightMultiset full = lambda_A(p, reduced_degree(n));
    int zeros = full.count(Rational(0));
    if (x == TypeLetter::B) --zeros;
    if (zeros < 0 || zeros % 2 != 0)
        throw DomainError("no non-negative half solves the weight equation for " + to_string(p));

    WeightMultiset half;
    for (const auto& vc : full.values())
        if (vc.value > Rational(0)) half.add(vc.value, vc.count);
    half.add(Rational(0), zeros / 2);

    if (unfold(half, x) != full)
        throw DomainError("weight multiset of " + to_string(p) + " is not symmetric");
    return half;
}

ClassDecomposition decompose(const WeightMultiset& lam) {
    ClassDecomposition dec;
    std::map<Rational, WeightMultiset> by_residue;
    for (const auto& vc : lam.values()) {
        Rational r = frac(vc.value);
        if (r == Rational(0))
            dec.zero_class.add(vc.value, vc.count);
        else if (r == Rational(1, 2))
            dec.half_class.add(vc.value, vc.count);
        else
            by_residue[r].add(vc.value, vc.count);
    }

    // Pair each residue r with 1 − r; within a pair the class with the
    // larger maximum comes first.
    std::vector<std::pair<WeightMultiset, WeightMultiset>> pairs;
    for (auto& [r, cls] : by_residue) {
        if (r > Rational(1, 2)) continue;
        auto partner = by_residue.find(1 - r);
        WeightMultiset other = partner == by_residue.end() ? WeightMultiset{} : partner->second;
        if (other != cls.negated())
            throw DomainError("weight classes are not paired under negation in " + to_string(lam));
        if (cls.values().front().value > other.values().front().value)
            pairs.emplace_back(cls, other);
        else
            pairs.emplace_back(other, cls);
    }
    // A residue class above 1/2 whose partner is absent would go unseen above.
    for (auto& [r, cls] : by_residue)
        if (r > Rational(1, 2) && !by_residue.contains(1 - r))
            throw DomainError("weight classes are not paired under negation in " + to_string(lam));

    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        return a.first.values().front().value > b.first.values().front().value;
    });
    for (const auto& pr : pairs) dec.paired_classes.push_back(pr.first);
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) dec.paired_classes.push_back(it->second);
    return dec;
}

Partition rs_shape(const WeightMultiset& lam) { return rs_shape_closed_form(lam.values()).first; }

Partition class_partition(const ClassDecomposition& dec, ClassIndex which) {
    switch (which.kind) {
        case ClassKind::Zero: {
            Partition p = transpose(rs_shape(dec.zero_class));
            if (dec.zero_class.size() % 2 == 0) p = disjoint_union(p, Partition{1});
            return p;
        }
        case ClassKind::Half: return transpose(rs_shape(dec.half_class));
        case ClassKind::Paired:
            if (which.paired >= dec.paired_classes.size())
                throw DomainError("paired class index out of range");
            return transpose(rs_shape(dec.paired_classes[which.paired]));
    }
    return {};
}

bool satisfies_progression_conditions(const WeightMultiset& lam, int n) {
    const auto& v = lam.values();
    const std::size_t s = v.size();
    for (const auto& vc : v)
        if ((vc.value * (2 * n)).denominator() != 1) return false;
    for (std::size_t i = 0; i < s; ++i)
        if (v[i].value != -v[s - 1 - i].value || v[i].count != v[s - 1 - i].count) return false;
    for (std::size_t i = 0; i + 1 < s && i < s / 2; ++i)
        if (v[i].value - v[i + 1].value != Rational(1, n) || v[i].count > v[i + 1].count)
            return false;
    return true;
}

std::optional<Partition> recognize_lambda_A(const WeightMultiset& lam, int n) {
    if (n < 1) return std::nullopt;
    // Odd parts give entries with even numerator over 2n, even parts odd.
    WeightMultiset odd_parts, even_parts;
    for (const auto& vc : lam.values()) {
        Rational scaled = vc.value * (2 * n);
        if (scaled.denominator() != 1) return std::nullopt;
        (scaled.numerator() % 2 == 0 ? odd_parts : even_parts).add(vc.value, vc.count);
    }
    if (!satisfies_progression_conditions(odd_parts, n) ||
        !satisfies_progression_conditions(even_parts, n))
        return std::nullopt;
    return disjoint_union(transpose(rs_shape(odd_parts)), transpose(rs_shape(even_parts)));
}

}  // namespace orbit_duality
