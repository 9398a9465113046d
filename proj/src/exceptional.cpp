#include "orbit_duality/exceptional.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "embedded_tables.hpp"
#include "orbit_duality/errors.hpp"

namespace orbit_duality {

std::string to_string(ExceptionalGroup g) {
    switch (g) {
        case ExceptionalGroup::G2: return "G2";
        case ExceptionalGroup::F4: return "F4";
        case ExceptionalGroup::E6: return "E6";
        case ExceptionalGroup::E7: return "E7";
        case ExceptionalGroup::E8: return "E8";
    }
    return "?";
}

std::optional<ExceptionalGroup> exceptional_group_from_string(std::string_view s) {
    for (auto g : {ExceptionalGroup::G2, ExceptionalGroup::F4, ExceptionalGroup::E6,
                   ExceptionalGroup::E7, ExceptionalGroup::E8})
        if (s == to_string(g)) return g;
    return std::nullopt;
}

std::string regular_label(ExceptionalGroup g) { return to_string(g); }

int expected_orbit_count(ExceptionalGroup g) {
    switch (g) {
        case ExceptionalGroup::G2: return 5;
        case ExceptionalGroup::F4: return 16;
        case ExceptionalGroup::E6: return 21;
        case ExceptionalGroup::E7: return 45;
        case ExceptionalGroup::E8: return 70;
    }
    return 0;
}

namespace {

void replace_all(std::string& s, std::string_view from, std::string_view to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
        s.replace(pos, from.size(), to);
}

}  // namespace

std::string normalize_label(std::string_view label) {
    std::string s;
    for (char c : label)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    replace_all(s, "\\set{0}", "0");
    replace_all(s, "{0}", "0");
    replace_all(s, "\xC3\x83", "A~");     // Ã
    replace_all(s, "\xCC\x83", "~");      // combining tilde
    replace_all(s, "\xE2\x80\xB3", "''");  // double prime
    replace_all(s, "\xE2\x80\xB2", "'");   // prime
    // \tilde{X}_k and \tilde{X}k
    for (std::size_t pos; (pos = s.find("\\tilde{")) != std::string::npos;) {
        auto close = s.find('}', pos);
        if (close == std::string::npos) break;
        std::string inner = s.substr(pos + 7, close - pos - 7);
        s.replace(pos, close - pos + 1, inner + "~");
    }
    std::string out;
    for (char c : s)
        if (c != '_' && c != '{' && c != '}' && c != '$') out += c;
    return out;
}

bool matches(const NCondition& cond, int n) {
    return std::visit(
        [n](const auto& c) -> bool {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, NSet>)
                return std::find(c.values.begin(), c.values.end(), n) != c.values.end();
            else if constexpr (std::is_same_v<T, NInterval>)
                return c.lo <= n && n <= c.hi;
            else
                return n >= c.from;
        },
        cond);
}

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, std::string_view sep) {
    std::vector<std::string> out;
    for (;;) {
        auto pos = s.find(sep);
        out.push_back(trim(s.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        s.remove_prefix(pos + sep.size());
    }
    return out;
}

int parse_positive(std::string_view s, int line) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 1)
        throw InvariantError("line " + std::to_string(line) + ": bad integer '" + std::string(s) + "'");
    return v;
}

NCondition parse_condition(std::string_view s, int line) {
    if (s.starts_with(">=")) return NTail{parse_positive(s.substr(2), line)};
    if (s.starts_with("n=")) {
        NSet set;
        for (const auto& tok : split(s.substr(2), ",")) set.values.push_back(parse_positive(tok, line));
        return set;
    }
    auto dots = s.find("..");
    if (dots != std::string_view::npos) {
        NInterval iv{parse_positive(s.substr(0, dots), line), parse_positive(s.substr(dots + 2), line)};
        if (iv.lo > iv.hi) throw InvariantError("line " + std::to_string(line) + ": empty interval");
        return iv;
    }
    throw InvariantError("line " + std::to_string(line) + ": bad condition '" + std::string(s) + "'");
}

std::string condition_text(const NCondition& cond) {
    return std::visit(
        [](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, NSet>) {
                std::string out = "n=";
                for (std::size_t i = 0; i < c.values.size(); ++i)
                    out += (i ? "," : "") + std::to_string(c.values[i]);
                return out;
            } else if constexpr (std::is_same_v<T, NInterval>) {
                return std::to_string(c.lo) + ".." + std::to_string(c.hi);
            } else {
                return ">=" + std::to_string(c.from);
            }
        },
        cond);
}

void validate_row(const TableRow& row, int line) {
    const std::string where = "line " + std::to_string(line) + " (" + to_string(row.group) + " " + row.orbit + ")";
    if (row.clauses.empty()) throw InvariantError(where + ": no clauses");
    const auto* tail = std::get_if<NTail>(&row.clauses.back().condition);
    if (!tail) throw InvariantError(where + ": last clause must be a tail >=N");
    if (row.clauses.back().label != regular_label(row.group))
        throw InvariantError(where + ": tail value must be the regular orbit " + regular_label(row.group));
    for (std::size_t i = 0; i + 1 < row.clauses.size(); ++i)
        if (std::holds_alternative<NTail>(row.clauses[i].condition))
            throw InvariantError(where + ": only the last clause may be a tail");
    // Every n in [1, tail] is claimed exactly once; past the tail start no
    // other clause may match.
    int horizon = tail->from;
    for (const auto& cl : row.clauses) {
        if (const auto* s = std::get_if<NSet>(&cl.condition))
            for (int v : s->values) horizon = std::max(horizon, v);
        if (const auto* iv = std::get_if<NInterval>(&cl.condition)) horizon = std::max(horizon, iv->hi);
    }
    for (int n = 1; n <= horizon; ++n) {
        int hits = 0;
        for (const auto& cl : row.clauses) hits += matches(cl.condition, n) ? 1 : 0;
        if (hits != 1)
            throw InvariantError(where + ": n=" + std::to_string(n) + " matched by " +
                                 std::to_string(hits) + " clauses");
    }
}

}  // namespace

ExceptionalTables ExceptionalTables::parse(std::string_view text) {
    ExceptionalTables t;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    std::map<ExceptionalGroup, std::set<std::string>> seen;
    while (std::getline(in, raw)) {
        ++line;
        if (trim(raw).empty()) continue;
        auto fields = split(raw, "|");
        if (fields.size() != 3)
            throw InvariantError("line " + std::to_string(line) + ": expected GROUP | ORBIT | clauses");
        auto group = exceptional_group_from_string(fields[0]);
        if (!group) throw InvariantError("line " + std::to_string(line) + ": unknown group " + fields[0]);
        TableRow row{*group, fields[1], {}};
        if (row.orbit.empty()) throw InvariantError("line " + std::to_string(line) + ": empty orbit label");
        for (const auto& clause : split(fields[2], ";")) {
            auto arrow = clause.find("->");
            if (arrow == std::string::npos)
                throw InvariantError("line " + std::to_string(line) + ": clause without '->'");
            row.clauses.push_back(
                {parse_condition(trim(clause.substr(0, arrow)), line), trim(clause.substr(arrow + 2))});
        }
        validate_row(row, line);
        if (!seen[row.group].insert(row.orbit).second)
            throw InvariantError("line " + std::to_string(line) + ": duplicate orbit " + row.orbit);
        t.rows_.push_back(std::move(row));
    }
    for (auto g : {ExceptionalGroup::G2, ExceptionalGroup::F4, ExceptionalGroup::E6, ExceptionalGroup::E7,
                   ExceptionalGroup::E8}) {
        const auto count = static_cast<int>(seen[g].size());
        if (count != expected_orbit_count(g))
            throw InvariantError(to_string(g) + ": expected " + std::to_string(expected_orbit_count(g)) +
                                 " orbit rows, found " + std::to_string(count));
        if (!seen[g].contains("0")) throw InvariantError(to_string(g) + ": zero orbit row missing");
    }
    return t;
}

const ExceptionalTables& ExceptionalTables::embedded() {
    static const ExceptionalTables tables = parse(kEmbeddedTables);
    return tables;
}

ExceptionalTables ExceptionalTables::load_default() {
    if (const char* path = std::getenv("ORBIT_DUALITY_DATA"); path && *path) {
        std::ifstream in(path);
        if (!in) throw DomainError(std::string("cannot read ORBIT_DUALITY_DATA file ") + path);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse(buf.str());
    }
    return embedded();
}

std::string ExceptionalTables::serialize() const {
    std::string out;
    for (const auto& row : rows_) {
        out += to_string(row.group) + " | " + row.orbit + " | ";
        for (std::size_t i = 0; i < row.clauses.size(); ++i) {
            if (i) out += " ; ";
            out += condition_text(row.clauses[i].condition) + " -> " + row.clauses[i].label;
        }
        out += '\n';
    }
    return out;
}

std::vector<const TableRow*> ExceptionalTables::rows_of(ExceptionalGroup g) const {
    std::vector<const TableRow*> out;
    for (const auto& row : rows_)
        if (row.group == g) out.push_back(&row);
    return out;
}

const TableRow& ExceptionalTables::row(ExceptionalGroup g, std::string_view orbit) const {
    const std::string key = normalize_label(orbit);
    for (const auto& r : rows_)
        if (r.group == g && r.orbit == key) return r;
    throw DomainError("unknown orbit '" + std::string(orbit) + "' for " + to_string(g));
}

std::string ExceptionalTables::lookup(ExceptionalGroup g, std::string_view orbit, int n) const {
    if (n < 1) throw DomainError("cover degree n must be positive");
    const auto& r = row(g, orbit);
    for (const auto& cl : r.clauses)
        if (matches(cl.condition, n)) return cl.label;
    throw InvariantError("no clause of " + to_string(g) + " " + r.orbit + " covers n=" + std::to_string(n));
}

int ExceptionalTables::stabilization_threshold(ExceptionalGroup g, std::string_view orbit) const {
    const auto& r = row(g, orbit);
    const int tail = std::get<NTail>(r.clauses.back().condition).from;
    int threshold = 1;
    for (int n = 1; n < tail; ++n)
        if (lookup(g, r.orbit, n) != regular_label(g)) threshold = n + 1;
    return threshold;
}

std::string d_bv_exceptional(ExceptionalGroup g, std::string_view orbit, int n) {
    return ExceptionalTables::embedded().lookup(g, orbit, n);
}

int stabilization_threshold(ExceptionalGroup g, std::string_view orbit) {
    return ExceptionalTables::embedded().stabilization_threshold(g, orbit);
}

std::string general_q_lookup(ExceptionalGroup g, std::string_view orbit, int n_alpha) {
    return d_bv_exceptional(g, orbit, n_alpha);
}

}  // namespace orbit_duality
