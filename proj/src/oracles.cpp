#include "orbit_duality/oracles.hpp"

#include <algorithm>
#include <map>

namespace orbit_duality::oracle {

bool has_type(const Partition& p, TypeLetter x) {
    int total = 0;
    std::map<int, int> mult;
    for (int v : p.parts()) {
        total += v;
        ++mult[v];
    }
    switch (x) {
        case TypeLetter::A: return true;
        case TypeLetter::B:
            if (total % 2 == 0) return false;
            break;
        case TypeLetter::C:
        case TypeLetter::D:
            if (total % 2 == 1) return false;
            break;
    }
    const int restricted_parity = x == TypeLetter::C ? 1 : 0;
    for (auto [v, m] : mult)
        if (v % 2 == restricted_parity && m % 2 == 1) return false;
    return true;
}

bool dominated_by(const Partition& p, const Partition& q) {
    std::vector<int> a(p.parts().begin(), p.parts().end());
    std::vector<int> b(q.parts().begin(), q.parts().end());
    const std::size_t len = std::max(a.size(), b.size());
    a.resize(len, 0);
    b.resize(len, 0);
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return sa == sb;
}

std::optional<Partition> maximal_dominated(const Partition& p, TypeLetter x) {
    std::vector<Partition> candidates;
    for (const auto& q : partitions_of(p.size()))
        if (has_type(q, x) && dominated_by(q, p)) candidates.push_back(q);
    for (const auto& top : candidates)
        if (std::all_of(candidates.begin(), candidates.end(),
                        [&](const Partition& q) { return dominated_by(q, top); }))
            return top;
    return std::nullopt;
}

Partition greene_shape(std::span<const Rational> seq) {
    const std::size_t len = seq.size();
    // best[k] = largest subset coverable by k weakly increasing subsequences,
    // i.e. whose longest strictly decreasing subsequence has length <= k.
    std::vector<int> best(len + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        std::vector<Rational> sub;
        for (std::size_t i = 0; i < len; ++i)
            if (mask & (1u << i)) sub.push_back(seq[i]);
        std::vector<int> dec(sub.size(), 1);
        int longest = 0;
        for (std::size_t i = 0; i < sub.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if (sub[j] > sub[i]) dec[i] = std::max(dec[i], dec[j] + 1);
            longest = std::max(longest, dec[i]);
        }
        for (std::size_t k = static_cast<std::size_t>(longest); k <= len; ++k)
            best[k] = std::max(best[k], static_cast<int>(sub.size()));
    }
    std::vector<int> rows;
    for (std::size_t k = 1; k <= len; ++k) rows.push_back(best[k] - best[k - 1]);
    return Partition(std::move(rows));
}

}  // namespace orbit_duality::oracle
