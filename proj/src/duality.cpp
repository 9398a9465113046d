#include "orbit_duality/duality.hpp"

#include "orbit_duality/errors.hpp"

namespace orbit_duality {

namespace {

void require_positive_degree(int n) {
    if (n < 1) throw DomainError("cover degree n must be positive, got " + std::to_string(n));
}

std::string type_name(TypeLetter x) { return std::string(1, to_char(x)); }

// p^+ with the convention []^+ = [1] (rank-zero groups).
Partition plus_padded(const Partition& p) { return p.empty() ? Partition{1} : plus_one(p); }

Partition minus_padded(const Partition& p) { return p.empty() ? p : minus_one(p); }

Partition plus_minus(const Partition& p) { return minus_padded(plus_padded(p)); }

}  // namespace

TypeLetter ClassicalContext::input_type() const {
    switch (type) {
        case TypeLetter::A: return TypeLetter::A;
        case TypeLetter::B: return n % 4 == 0 ? TypeLetter::B : TypeLetter::C;
        case TypeLetter::C: return n % 2 == 1 ? TypeLetter::B : TypeLetter::C;
        case TypeLetter::D: return TypeLetter::D;
    }
    return TypeLetter::A;
}

bool ClassicalContext::accepts(const Partition& p) const { return n >= 1 && is_type(p, input_type()); }

void ClassicalContext::require_input(const Partition& p) const {
    require_positive_degree(n);
    if (is_type(p, input_type())) return;
    std::string rule;
    switch (type) {
        case TypeLetter::A: rule = "type A accepts every partition"; break;
        case TypeLetter::B:
            rule = "type B needs a type-C input when n is odd or n = 2 mod 4, and a type-B input when 4 | n";
            break;
        case TypeLetter::C: rule = "type C needs a type-B input when n is odd and a type-C input when n is even"; break;
        case TypeLetter::D: rule = "type D needs a type-D input"; break;
    }
    throw DomainError(to_string(p) + " is not of type " + type_name(input_type()) + " (" +
                      to_string(*this) + ": " + rule + ")");
}

std::string to_string(const ClassicalContext& ctx) {
    return type_name(ctx.type) + "@n=" + std::to_string(ctx.n);
}

LabeledOrbit::LabeledOrbit(Partition p, std::optional<VeryEvenLabel> label)
    : partition_(std::move(p)), label_(label) {
    if (label_ && !is_very_even(partition_))
        throw DomainError("label " + to_string(*label_) + " needs a very even partition, got " +
                          to_string(partition_));
}

std::string to_string(const LabeledOrbit& o) {
    std::string out = to_string(o.partition());
    if (o.label()) out += "^" + to_string(*o.label());
    return out;
}

LabeledOrbit parse_labeled_orbit(std::string_view text) {
    auto caret = text.rfind('^');
    if (caret == std::string_view::npos) return LabeledOrbit(parse_partition(text));
    auto tag = text.substr(caret + 1);
    std::optional<VeryEvenLabel> label;
    if (tag == "I")
        label = VeryEvenLabel::I;
    else if (tag == "II")
        label = VeryEvenLabel::II;
    else
        throw DomainError("unknown very even label '" + std::string(tag) + "'");
    return LabeledOrbit(parse_partition(text.substr(0, caret)), label);
}

Partition s_part(int m, int n) {
    require_positive_degree(n);
    if (m < 0) throw DomainError("s_part needs m >= 0");
    std::vector<int> parts(static_cast<std::size_t>(m / n), n);
    if (m % n) parts.push_back(m % n);
    return Partition(std::move(parts));
}

Partition d_com_A(const Partition& p, int n) {
    require_positive_degree(n);
    Partition out;
    for (int part : p.parts()) out = part_sum(out, s_part(part, n));
    return out;
}

Partition d_com_B(const Partition& p, int n) {
    ClassicalContext{TypeLetter::B, n}.require_input(p);
    if (n % 2 == 1) return collapse(plus_padded(d_com_A(p, n)), TypeLetter::B);
    if (n % 4 == 2) return collapse(plus_padded(d_com_A(p, n / 2)), TypeLetter::B);
    return collapse(d_com_A(p, n / 2), TypeLetter::B);
}

Partition d_com_C(const Partition& p, int n) {
    ClassicalContext{TypeLetter::C, n}.require_input(p);
    if (n % 2 == 1) return collapse(minus_one(d_com_A(p, n)), TypeLetter::C);
    if (n % 4 == 2) return collapse(plus_minus(d_com_A(p, n / 2)), TypeLetter::C);
    return collapse(d_com_A(p, n / 2), TypeLetter::C);
}

LabeledOrbit d_com_D(const LabeledOrbit& o, int n) {
    ClassicalContext{TypeLetter::D, n}.require_input(o.partition());
    Partition out = collapse(d_com_A(o.partition(), reduced_degree(n)), TypeLetter::D);
    if (!o.label() || !is_very_even(out)) return LabeledOrbit(std::move(out));
    const int r = o.partition().size() / 2;
    VeryEvenLabel label = (r / 2) % 2 == 0 ? *o.label() : swapped(*o.label());
    return LabeledOrbit(std::move(out), label);
}

Partition d_com(const Partition& p, const ClassicalContext& ctx) {
    switch (ctx.type) {
        case TypeLetter::A: return d_com_A(p, ctx.n);
        case TypeLetter::B: return d_com_B(p, ctx.n);
        case TypeLetter::C: return d_com_C(p, ctx.n);
        case TypeLetter::D: return d_com_D(LabeledOrbit(p), ctx.n).partition();
    }
    return {};
}

Partition metaplectic_d_C(const Partition& p) {
    if (!is_type(p, TypeLetter::C)) throw DomainError(to_string(p) + " is not of type C");
    return collapse(plus_minus(collapse(transpose(p), TypeLetter::D)), TypeLetter::C);
}

ApTrace ap_trace(const WeightMultiset& lam, TypeLetter x, TypeLetter input_type) {
    if ((x == TypeLetter::A) != (input_type == TypeLetter::A))
        throw DomainError("annihilator route pairs type A with A, or B/C/D with B/C/D");

    ApTrace t;
    t.lambda = lam;
    t.unfolded = x == TypeLetter::A ? lam : unfold(lam, input_type);
    t.classes = decompose(t.unfolded);
    const auto& dec = t.classes;

    if (x == TypeLetter::A) {
        // p_{A,i}^* = p(λ_{A,i}) for every integral-difference class.
        auto add_class = [&](const WeightMultiset& cls) {
            if (cls.empty()) return;
            t.class_parts.push_back(transpose(rs_shape(cls)));
            t.summands.push_back(rs_shape(cls));
        };
        add_class(dec.zero_class);
        add_class(dec.half_class);
        for (const auto& cls : dec.paired_classes) add_class(cls);
        for (const auto& s : t.summands) t.result = part_sum(t.result, s);
        return t;
    }

    t.zero_part = class_partition(dec, {ClassKind::Zero});
    t.half_part = class_partition(dec, {ClassKind::Half});
    for (std::size_t i = 0; i < dec.paired_classes.size(); ++i)
        t.class_parts.push_back(class_partition(dec, {ClassKind::Paired, i}));

    const Partition& p0 = t.zero_part;
    const Partition& ph = t.half_part;
    switch (x) {
        case TypeLetter::B:
            t.summands.push_back(transpose(p0));
            t.summands.push_back(transpose(ph));
            break;
        case TypeLetter::C:
            t.summands.push_back(transpose(collapse(minus_one(p0), TypeLetter::C)));
            t.summands.push_back(ph.empty() ? Partition{}
                                            : collapse(plus_minus(collapse(transpose(ph), TypeLetter::D)),
                                                       TypeLetter::C));
            break;
        case TypeLetter::D:
            t.summands.push_back(collapse(transpose(minus_one(p0)), TypeLetter::D));
            t.summands.push_back(transpose(collapse(ph, TypeLetter::D)));
            break;
        case TypeLetter::A: break;
    }
    for (const auto& pi : t.class_parts) t.summands.push_back(transpose(pi));

    Partition sum;
    for (const auto& s : t.summands) sum = part_sum(sum, s);
    t.result = collapse(sum, x);
    return t;
}

Partition ap(const WeightMultiset& lam, TypeLetter x, TypeLetter input_type) {
    return ap_trace(lam, x, input_type).result;
}

WeightMultiset dual_weight(const Partition& p, const ClassicalContext& ctx) {
    ctx.require_input(p);
    if (ctx.type == TypeLetter::A) return lambda_A(p, ctx.n);
    return lambda_X(p, ctx.n, ctx.input_type());
}

Partition d_via_ap(const Partition& p, const ClassicalContext& ctx) {
    return ap(dual_weight(p, ctx), ctx.type, ctx.input_type());
}

Partition saturate(const Partition& base, const Partition& q) {
    return disjoint_union(disjoint_union(base, q), q);
}

Partition induce(const Partition& base, const Partition& q, TypeLetter x) {
    return collapse(part_sum(base, scale(q, 2)), x);
}

Partition speh_wavefront(const SpehDatum& s) {
    if (s.r0 < 1 || s.m < 1 || s.k < 1 || s.n < 1)
        throw DomainError("Speh data r0, m, k, n must be positive");
    if (s.n % s.m != 0)
        throw DomainError("segment length m = " + std::to_string(s.m) + " must divide n = " +
                          std::to_string(s.n));
    const int n0 = s.n / s.m;
    const int c = s.k / n0;
    const int d = s.k % n0;
    std::vector<int> parts(static_cast<std::size_t>(c), s.n * s.r0);
    if (d) parts.push_back(s.r0 * s.m * d);
    return Partition(std::move(parts));
}

Partition regular_partition(int size, TypeLetter x) {
    if (size < 0) throw DomainError("negative size");
    return size == 0 ? Partition{} : collapse(Partition{size}, x);
}

}  // namespace orbit_duality
