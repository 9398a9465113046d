#include "orbit_duality/rs_insertion.hpp"

#include <algorithm>

#include "orbit_duality/errors.hpp"

namespace orbit_duality {

std::size_t Tableau::cell_count() const {
    std::size_t n = 0;
    for (const auto& row : rows) n += row.size();
    return n;
}

Tableau rs_insert(std::span<const Rational> seq) {
    Tableau t;
    for (Rational x : seq) {
        for (std::size_t r = 0;; ++r) {
            if (r == t.rows.size()) {
                t.rows.push_back({x});
                break;
            }
            auto& row = t.rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                break;
            }
            std::swap(x, *it);
        }
    }
    return t;
}

Partition shape(const Tableau& t) {
    std::vector<int> lengths;
    lengths.reserve(t.rows.size());
    for (const auto& row : t.rows) lengths.push_back(static_cast<int>(row.size()));
    return Partition(std::move(lengths));
}

std::pair<Partition, Tableau> rs_shape_closed_form(std::span<const ValueCount> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].count < 1) throw DomainError("multiplicities must be positive");
        if (i > 0 && !(values[i].value < values[i - 1].value))
            throw DomainError("closed-form RS shape needs strictly decreasing values");
    }
    std::vector<int> counts;
    int max_count = 0;
    for (const auto& vc : values) {
        counts.push_back(vc.count);
        max_count = std::max(max_count, vc.count);
    }

    Tableau t;
    // Column j (1-based) lists, bottom to top, the values occurring at
    // least j times in increasing order; transpose it into rows.
    for (int j = 1; j <= max_count; ++j) {
        std::size_t i = 0;
        for (auto it = values.rbegin(); it != values.rend(); ++it) {
            if (it->count < j) continue;
            if (i == t.rows.size()) t.rows.emplace_back();
            t.rows[i].push_back(it->value);
            ++i;
        }
    }
    return {Partition(std::move(counts)), std::move(t)};
}

}  // namespace orbit_duality
