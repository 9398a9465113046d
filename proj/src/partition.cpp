#include "orbit_duality/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "orbit_duality/errors.hpp"

namespace orbit_duality {

char to_char(TypeLetter x) {
    switch (x) {
        case TypeLetter::A: return 'A';
        case TypeLetter::B: return 'B';
        case TypeLetter::C: return 'C';
        case TypeLetter::D: return 'D';
    }
    return '?';
}

std::optional<TypeLetter> type_letter_from_char(char c) {
    switch (c) {
        case 'A': return TypeLetter::A;
        case 'B': return TypeLetter::B;
        case 'C': return TypeLetter::C;
        case 'D': return TypeLetter::D;
        default: return std::nullopt;
    }
}

std::string to_string(VeryEvenLabel label) { return label == VeryEvenLabel::I ? "I" : "II"; }

VeryEvenLabel swapped(VeryEvenLabel label) {
    return label == VeryEvenLabel::I ? VeryEvenLabel::II : VeryEvenLabel::I;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (std::any_of(parts_.begin(), parts_.end(), [](int x) { return x < 0; }))
        throw DomainError("partition parts must be non-negative");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string to_string(const Partition& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    out += ']';
    return out;
}

Partition parse_partition(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw DomainError("partition must be written as [a,b,...]: '" + std::string(text) + "'");
    std::string_view body(s.data() + 1, s.size() - 2);
    std::vector<int> parts;
    while (!body.empty()) {
        auto comma = body.find(',');
        auto token = body.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || value <= 0)
            throw DomainError("bad partition part '" + std::string(token) + "'");
        if (!parts.empty() && value > parts.back())
            throw DomainError("partition parts must be weakly decreasing: '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (body.empty()) throw DomainError("trailing comma in partition");
    }
    return Partition(std::move(parts));
}

Partition transpose(const Partition& p) {
    std::vector<int> out(p.empty() ? 0 : p[0], 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++out[j];
    return Partition(std::move(out));
}

Partition part_sum(const Partition& p, const Partition& q) {
    std::vector<int> out(std::max(p.length(), q.length()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i] + q[i];
    return Partition(std::move(out));
}

Partition disjoint_union(const Partition& p, const Partition& q) {
    std::vector<int> out(p.parts().begin(), p.parts().end());
    out.insert(out.end(), q.parts().begin(), q.parts().end());
    return Partition(std::move(out));
}

Partition scale(const Partition& p, int k) {
    std::vector<int> out(p.parts().begin(), p.parts().end());
    for (int& x : out) x *= k;
    return Partition(std::move(out));
}

Partition plus_one(const Partition& p) {
    if (p.empty()) throw DomainError("p^+ is undefined on empty partition");
    std::vector<int> out(p.parts().begin(), p.parts().end());
    ++out.front();
    return Partition(std::move(out));
}

Partition minus_one(const Partition& p) {
    if (p.empty()) throw DomainError("p^- is undefined on empty partition");
    std::vector<int> out(p.parts().begin(), p.parts().end());
    --out.back();
    return Partition(std::move(out));
}

namespace {

// Parts whose multiplicity must be even for type x: even parts for B/D,
// odd parts for C.
bool restricted_part(int part, TypeLetter x) {
    return x == TypeLetter::C ? part % 2 == 1 : part % 2 == 0;
}

bool size_parity_ok(int size, TypeLetter x) {
    switch (x) {
        case TypeLetter::A: return true;
        case TypeLetter::B: return size % 2 == 1;
        case TypeLetter::C:
        case TypeLetter::D: return size % 2 == 0;
    }
    return false;
}

}  // namespace

bool is_type(const Partition& p, TypeLetter x) {
    if (x == TypeLetter::A) return true;
    if (!size_parity_ok(p.size(), x)) return false;
    auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (restricted_part(parts[i], x) && (j - i) % 2 == 1) return false;
        i = j;
    }
    return true;
}

bool is_very_even(const Partition& p) {
    return !p.empty() && is_type(p, TypeLetter::D) &&
           std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 0; });
}

Partition collapse(const Partition& p, TypeLetter x) {
    if (!size_parity_ok(p.size(), x))
        throw DomainError(std::string("size parity incompatible with type ") + to_char(x) +
                          " for " + to_string(p));
    if (x == TypeLetter::A) return p;

    std::vector<int> parts(p.parts().begin(), p.parts().end());
    for (;;) {
        // Largest offending part: restricted value with odd multiplicity.
        std::map<int, int, std::greater<>> mult;
        for (int v : parts) ++mult[v];
        std::optional<int> bad;
        for (auto [v, m] : mult)
            if (restricted_part(v, x) && m % 2 == 1) {
                bad = v;
                break;
            }
        if (!bad) break;

        // Lower its last occurrence by one and raise the first later part
        // that is strictly below the new value.
        auto last = static_cast<std::size_t>(
            std::find(parts.rbegin(), parts.rend(), *bad).base() - parts.begin() - 1);
        --parts[last];
        std::size_t k = last + 1;
        while (k < parts.size() && parts[k] >= parts[last]) ++k;
        if (k == parts.size()) parts.push_back(0);
        ++parts[k];
        std::sort(parts.begin(), parts.end(), std::greater<>());
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }
    return Partition(std::move(parts));
}

bool dominance_le(const Partition& p, const Partition& q) {
    if (p.size() != q.size())
        throw DomainError("dominance order compares partitions of equal size: " + to_string(p) +
                          " vs " + to_string(q));
    int sp = 0, sq = 0;
    std::size_t n = std::max(p.length(), q.length());
    for (std::size_t i = 0; i < n; ++i) {
        sp += p[i];
        sq += q[i];
        if (sp > sq) return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Standard descending enumeration.
    std::vector<int> a{n};
    for (;;) {
        out.emplace_back(a);
        int rem = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++rem;
        }
        if (a.empty()) break;
        int v = --a.back();
        ++rem;
        while (rem > v) {
            a.push_back(v);
            rem -= v;
        }
        if (rem > 0) a.push_back(rem);
    }
    return out;
}

}  // namespace orbit_duality
