#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace orbit_duality {

enum class ExceptionalGroup { G2, F4, E6, E7, E8 };

std::string to_string(ExceptionalGroup g);
std::optional<ExceptionalGroup> exceptional_group_from_string(std::string_view s);
/// Bala–Carter label of the regular orbit ("G2", "F4", ...).
std::string regular_label(ExceptionalGroup g);
/// Number of orbits, zero orbit included.
int expected_orbit_count(ExceptionalGroup g);

/// Canonical ASCII form of a Bala–Carter label.
///
///   Ã1, \tilde{A}_1, A~1  -> A~1
///   A_1 + \tilde{A}_1     -> A1+A~1
///   E_8(b_6)              -> E8(b6)
///   (3A_1)'' / (3A1)″     -> (3A1)''
///   {0}, \set{0}          -> 0
std::string normalize_label(std::string_view label);

/// One clause condition on n: an explicit list, a closed interval, or a
/// tail n >= N.
struct NSet {
    std::vector<int> values;
};
struct NInterval {
    int lo = 1;
    int hi = 1;
};
struct NTail {
    int from = 1;
};
using NCondition = std::variant<NSet, NInterval, NTail>;

bool matches(const NCondition& cond, int n);

struct Clause {
    NCondition condition;
    std::string label;
};

/// Piecewise-in-n image of one source orbit.
struct TableRow {
    ExceptionalGroup group;
    std::string orbit;
    std::vector<Clause> clauses;
};

class ExceptionalTables {
public:
    /// Parses the line format
    ///   GROUP | ORBIT | cond -> label ; cond -> label ; ... ; >=N -> REG
    /// where cond is "n=a,b,c", "a..b" or ">=N", then validates coverage,
    /// tails and per-group row counts. Throws InvariantError on violation.
    static ExceptionalTables parse(std::string_view text);
    /// The table shipped with the library.
    static const ExceptionalTables& embedded();
    /// Reads ORBIT_DUALITY_DATA when set, otherwise the embedded table.
    static ExceptionalTables load_default();

    std::string serialize() const;

    const std::vector<TableRow>& rows() const { return rows_; }
    std::vector<const TableRow*> rows_of(ExceptionalGroup g) const;
    /// Throws DomainError on an unknown label.
    const TableRow& row(ExceptionalGroup g, std::string_view orbit) const;

    std::string lookup(ExceptionalGroup g, std::string_view orbit, int n) const;
    /// Least N with the regular orbit returned for every n >= N.
    int stabilization_threshold(ExceptionalGroup g, std::string_view orbit) const;

private:
    std::vector<TableRow> rows_;
};

std::string d_bv_exceptional(ExceptionalGroup g, std::string_view orbit, int n);
int stabilization_threshold(ExceptionalGroup g, std::string_view orbit);
/// For a cover with general quadratic form, n is replaced by n_α (the
/// degree attached to a short coroot); the table itself is unchanged.
std::string general_q_lookup(ExceptionalGroup g, std::string_view orbit, int n_alpha);

}  // namespace orbit_duality
